//! Laurent polynomials in `q` with arbitrary-precision integer coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A Laurent polynomial `sum c_e q^e` with integer coefficients.
///
/// Stored densely from the lowest nonzero exponent. The first and last stored
/// coefficients are always nonzero, so two equal polynomials have identical
/// representations; the zero polynomial stores nothing.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        Self::from_dense(e, vec![c.into()])
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    /// Builds `sum_i coeffs[i] q^(low + i)`.
    pub fn from_dense(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { low, coeffs };
        p.trim();
        p
    }

    /// Convenience constructor from small integer coefficients.
    pub fn from_i64s(low: i64, coeffs: &[i64]) -> Self {
        Self::from_dense(low, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        let Some(low) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let high = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_dense(low, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == self.coeffs.len() {
            self.coeffs.clear();
            self.low = 0;
        } else if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.low += lead_zeros as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Coefficient of `q^e` (zero outside the support).
    pub fn coeff(&self, e: i64) -> BigInt {
        let idx = e - self.low;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Substitutes `q -> q^{-1}`.
    pub fn invert_q(&self) -> Self {
        match self.high_exp() {
            None => Self::zero(),
            Some(h) => Self {
                low: -h,
                coeffs: self.coeffs.iter().rev().cloned().collect(),
            },
        }
    }

    /// Nonnegative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Every coefficient is a nonnegative integer and no exponent is negative.
    pub fn is_nonneg_poly(&self) -> bool {
        self.low >= 0 && self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Every coefficient is nonnegative (negative exponents allowed).
    pub fn has_nonneg_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// All nonzero coefficients share one sign.
    pub fn is_globally_signed(&self) -> bool {
        self.has_nonneg_coeffs() || self.coeffs.iter().all(|c| !c.is_positive())
    }

    pub fn eval(&self, q: &BigRational) -> Result<BigRational> {
        if self.low < 0 && q.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Horner on the dense part, then the q^low factor.
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + BigRational::from_integer(c.clone());
        }
        Ok(acc * pow_rational(q, self.low))
    }

    /// Exact quotient `self / d` in the Laurent ring, or `None` when `d` does
    /// not divide `self`.
    pub fn div_exact(&self, d: &QPoly) -> Option<QPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (q, r) = divrem_int(&self.coeffs, &d.coeffs)?;
        r.iter()
            .all(Zero::is_zero)
            .then(|| QPoly::from_dense(self.low - d.low, q))
    }

    /// Degree-ordered representation with `low == 0` and the removed power.
    pub(crate) fn split_q_power(&self) -> (i64, QPoly) {
        if self.is_zero() {
            return (0, Self::zero());
        }
        (
            self.low,
            Self {
                low: 0,
                coeffs: self.coeffs.clone(),
            },
        )
    }

    /// Greatest common divisor in `Z[q]` of two polynomials, ignoring powers of
    /// `q` (which are units in the Laurent ring). The result has lowest
    /// exponent zero and a positive leading coefficient.
    pub fn gcd(a: &QPoly, b: &QPoly) -> QPoly {
        if a.is_zero() {
            return b.normalized_unit();
        }
        if b.is_zero() {
            return a.normalized_unit();
        }
        let cont = a.content().gcd(&b.content());
        let mut x = primitive_dense(&a.coeffs);
        let mut y = primitive_dense(&b.coeffs);
        if x.len() < y.len() {
            std::mem::swap(&mut x, &mut y);
        }
        while y.len() > 1 {
            let r = pseudo_rem(&x, &y);
            x = y;
            y = primitive_dense(&r);
            if y.is_empty() {
                break;
            }
        }
        let g = if y.is_empty() { x } else { vec![BigInt::one()] };
        let mut out = QPoly::from_dense(0, g);
        if out.leading_coeff().is_some_and(Signed::is_negative) {
            out = -out;
        }
        out.scale(&cont)
    }

    /// `self` with the q-power stripped and a positive leading coefficient.
    fn normalized_unit(&self) -> QPoly {
        let (_, mut p) = self.split_q_power();
        if p.leading_coeff().is_some_and(Signed::is_negative) {
            p = -p;
        }
        p
    }
}

fn pow_rational(q: &BigRational, e: i64) -> BigRational {
    let mut out = BigRational::one();
    let base = if e < 0 { q.recip() } else { q.clone() };
    for _ in 0..e.unsigned_abs() {
        out *= &base;
    }
    out
}

fn trim_dense(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn primitive_dense(v: &[BigInt]) -> Vec<BigInt> {
    let mut v = v.to_vec();
    trim_dense(&mut v);
    let first_nz = v.iter().take_while(|c| c.is_zero()).count();
    v.drain(..first_nz);
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
    }
    if !g.is_zero() && !g.is_one() {
        for c in v.iter_mut() {
            *c /= &g;
        }
    }
    v
}

/// Pseudo-remainder of dense polynomials (index = degree).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let lb = b.last().expect("nonzero divisor").clone();
    let db = b.len() - 1;
    trim_dense(&mut r);
    while !r.is_empty() && r.len() > db {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &lr * bc;
        }
        trim_dense(&mut r);
    }
    r
}

/// Integer long division of dense polynomials; `None` when some quotient
/// coefficient is not integral.
fn divrem_int(a: &[BigInt], b: &[BigInt]) -> Option<(Vec<BigInt>, Vec<BigInt>)> {
    let mut r = a.to_vec();
    let lb = b.last()?;
    if a.len() < b.len() {
        return Some((Vec::new(), r));
    }
    let mut quot = vec![BigInt::zero(); a.len() - b.len() + 1];
    for shift in (0..quot.len()).rev() {
        let top = &r[shift + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (qc, rem) = top.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &qc * bc;
        }
        quot[shift] = qc;
    }
    Some((quot, r))
}

fn add_dense(a: &QPoly, b: &QPoly, negate_b: bool) -> QPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b.clone() } else { b.clone() };
    }
    let low = a.low.min(b.low);
    let high = a.high_exp().unwrap().max(b.high_exp().unwrap());
    let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
    for (i, c) in a.coeffs.iter().enumerate() {
        coeffs[(a.low - low) as usize + i] += c;
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        let slot = &mut coeffs[(b.low - low) as usize + i];
        if negate_b {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    QPoly::from_dense(low, coeffs)
}

fn mul_dense(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_zero() || b.is_zero() {
        return QPoly::zero();
    }
    let mut coeffs = vec![BigInt::zero(); a.coeffs.len() + b.coeffs.len() - 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.coeffs.iter().enumerate() {
            coeffs[i + j] += x * y;
        }
    }
    QPoly::from_dense(a.low + b.low, coeffs)
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(mut self) -> QPoly {
        for c in self.coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -self.clone()
    }
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident, $f:expr) => {
        impl $Trait<&QPoly> for &QPoly {
            type Output = QPoly;
            fn $method(self, rhs: &QPoly) -> QPoly {
                $f(self, rhs)
            }
        }
        impl $Trait<QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                $f(&self, &rhs)
            }
        }
        impl $Trait<&QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: &QPoly) -> QPoly {
                $f(&self, rhs)
            }
        }
        impl $Trait<QPoly> for &QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                $f(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &QPoly, b: &QPoly| add_dense(a, b, false));
forward_binop!(Sub, sub, |a: &QPoly, b: &QPoly| add_dense(a, b, true));
forward_binop!(Mul, mul, mul_dense);

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        *self = add_dense(self, rhs, false);
    }
}

impl SubAssign<&QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &QPoly) {
        *self = add_dense(self, rhs, true);
    }
}

impl MulAssign<&QPoly> for QPoly {
    fn mul_assign(&mut self, rhs: &QPoly) {
        *self = mul_dense(self, rhs);
    }
}

impl std::iter::Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for QPoly {
    fn product<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::one(), |acc, x| acc * x)
    }
}

impl From<i64> for QPoly {
    fn from(c: i64) -> Self {
        QPoly::constant(c)
    }
}

impl fmt::Display for QPoly {
    /// `1 + q - 2*q^2`, `q^-1 + 1`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let var = match e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{e}"),
            };
            match (var.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => f.write_str(&var)?,
                (false, false) => write!(f, "{mag}*{var}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

impl FromStr for QPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse(format!("empty polynomial: {s:?}")));
        }
        let bad = || Error::Parse(format!("malformed polynomial: {s:?}"));
        // Split into signed terms; a '-' right after '^' belongs to the exponent.
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        let mut parsed = Vec::with_capacity(terms.len());
        for term in terms {
            let (sign, body) = match term.as_bytes().first() {
                Some(b'-') => (-1, &term[1..]),
                Some(b'+') => (1, &term[1..]),
                _ => (1, term),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let (coeff_str, var) = match body.find('q') {
                None => (body, None),
                Some(pos) => {
                    let head = &body[..pos];
                    let head = head.strip_suffix('*').unwrap_or(head);
                    (head, Some(&body[pos + 1..]))
                }
            };
            let coeff: BigInt = if coeff_str.is_empty() {
                BigInt::one()
            } else {
                coeff_str.parse().map_err(|_| bad())?
            };
            let exp = match var {
                None => 0,
                Some("") => 1,
                Some(rest) => rest
                    .strip_prefix('^')
                    .ok_or_else(bad)?
                    .parse()
                    .map_err(|_| bad())?,
            };
            parsed.push((exp, coeff * sign));
        }
        Ok(QPoly::from_terms(parsed))
    }
}

impl PartialOrd for QPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary but total order, used only to keep maps deterministic.
impl Ord for QPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.low, &self.coeffs).cmp(&(other.low, &other.coeffs))
    }
}
