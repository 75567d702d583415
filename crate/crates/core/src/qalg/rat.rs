//! Reduced rational functions in `q`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::QPoly;
use crate::error::{Error, Result};

/// A fraction `num / den` of Laurent polynomials in canonical form.
///
/// Canonical form: `den` has lowest exponent 0 and a positive leading
/// coefficient, powers of `q` live in `num` only, and `num`, `den` share no
/// common factor in `Z[q]` (neither a nonconstant one nor an integer one).
/// Equality is therefore structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRat {
    num: QPoly,
    den: QPoly,
}

impl QRat {
    pub fn zero() -> Self {
        Self {
            num: QPoly::zero(),
            den: QPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(QPoly::one())
    }

    pub fn from_poly(num: QPoly) -> Self {
        Self {
            num,
            den: QPoly::one(),
        }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(QPoly::constant(c))
    }

    /// Reduces `num / den`; fails when `den` is zero.
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (dshift, mut den) = den.split_q_power();
        let mut num = num.shift(-dshift);
        if den.high_exp() != Some(0) {
            let (nshift, num0) = num.split_q_power();
            let g = QPoly::gcd(&num0, &den);
            if !g.is_one() {
                num = num0
                    .div_exact(&g)
                    .expect("gcd divides numerator")
                    .shift(nshift);
                den = den.div_exact(&g).expect("gcd divides denominator");
            }
        } else {
            // Constant denominator: only integer content can cancel.
            let g = num.content().gcd(den.leading_coeff().unwrap());
            if !g.is_one() {
                num = num.div_exact(&QPoly::constant(g.clone())).unwrap();
                den = QPoly::constant(den.leading_coeff().unwrap() / &g);
            }
        }
        if den.leading_coeff().is_some_and(Signed::is_negative) {
            num = -num;
            den = -den;
        }
        Ok(Self { num, den })
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `Some(p)` when the value is a Laurent polynomial.
    pub fn as_poly(&self) -> Option<&QPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inverse(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &QRat) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Multiplies by a polynomial without building an intermediate fraction.
    pub fn mul_poly(&self, p: &QPoly) -> Self {
        Self::new(&self.num * p, self.den.clone()).expect("nonzero denominator")
    }

    /// Substitutes `q -> q^{-1}`.
    pub fn invert_q(&self) -> Self {
        Self::new(self.num.invert_q(), self.den.invert_q()).expect("nonzero denominator")
    }

    pub fn eval(&self, q: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(q)? / d)
    }

    fn add_impl(&self, rhs: &QRat, negate: bool) -> QRat {
        let rnum = if negate { -&rhs.num } else { rhs.num.clone() };
        if self.den == rhs.den {
            return Self::new(&self.num + &rnum, self.den.clone()).unwrap();
        }
        if rhs.den.is_one() {
            return Self::new(&self.num + &rnum * &self.den, self.den.clone()).unwrap();
        }
        if self.den.is_one() {
            return Self::new(&self.num * &rhs.den + rnum, rhs.den.clone()).unwrap();
        }
        Self::new(
            &self.num * &rhs.den + rnum * &self.den,
            &self.den * &rhs.den,
        )
        .unwrap()
    }
}

impl Default for QRat {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<QPoly> for QRat {
    fn from(p: QPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for QRat {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl Add<&QRat> for &QRat {
    type Output = QRat;
    fn add(self, rhs: &QRat) -> QRat {
        self.add_impl(rhs, false)
    }
}

impl Sub<&QRat> for &QRat {
    type Output = QRat;
    fn sub(self, rhs: &QRat) -> QRat {
        self.add_impl(rhs, true)
    }
}

impl Mul<&QRat> for &QRat {
    type Output = QRat;
    fn mul(self, rhs: &QRat) -> QRat {
        if self.is_zero() || rhs.is_zero() {
            return QRat::zero();
        }
        QRat::new(&self.num * &rhs.num, &self.den * &rhs.den).unwrap()
    }
}

/// Panics on division by zero; use [`QRat::checked_div`] to get an error.
impl Div<&QRat> for &QRat {
    type Output = QRat;
    fn div(self, rhs: &QRat) -> QRat {
        self.checked_div(rhs).expect("division by zero QRat")
    }
}

impl Add for QRat {
    type Output = QRat;
    fn add(self, rhs: QRat) -> QRat {
        &self + &rhs
    }
}

impl Sub for QRat {
    type Output = QRat;
    fn sub(self, rhs: QRat) -> QRat {
        &self - &rhs
    }
}

impl Mul for QRat {
    type Output = QRat;
    fn mul(self, rhs: QRat) -> QRat {
        &self * &rhs
    }
}

impl Div for QRat {
    type Output = QRat;
    fn div(self, rhs: QRat) -> QRat {
        &self / &rhs
    }
}

impl Neg for QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        QRat {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Neg for &QRat {
    type Output = QRat;
    fn neg(self) -> QRat {
        -self.clone()
    }
}

impl std::iter::Sum for QRat {
    fn sum<I: Iterator<Item = QRat>>(iter: I) -> QRat {
        iter.fold(QRat::zero(), |acc, x| &acc + &x)
    }
}

impl fmt::Display for QRat {
    /// `(<num>)/(<den>)`, or the bare numerator when `den = 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QRat({self})")
    }
}

impl FromStr for QRat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if let Some(rest) = t.strip_prefix('(') {
            let (num, den) = rest
                .split_once(")/(")
                .and_then(|(n, d)| d.strip_suffix(')').map(|d| (n, d)))
                .ok_or_else(|| Error::Parse(format!("malformed fraction: {s:?}")))?;
            QRat::new(num.parse()?, den.parse()?)
        } else {
            Ok(QRat::from_poly(t.parse()?))
        }
    }
}

impl serde::Serialize for QRat {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for QRat {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl serde::Serialize for QPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for QPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The rational number `n / d`.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
