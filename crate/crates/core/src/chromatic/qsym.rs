//! Quasisymmetric functions in the monomial basis and symmetric functions
//! in the elementary basis, with `Q(q)` or `Z[q]` coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qalg::{QPoly, QRat};

/// Partitions of `n`, largest first in lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Strong compositions of `n` in lexicographic order.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in 1..=rest {
            cur.push(p);
            rec(rest - p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

pub fn conjugate(lambda: &[usize]) -> Vec<usize> {
    let first = lambda.first().copied().unwrap_or(0);
    (1..=first)
        .map(|j| lambda.iter().filter(|&&p| p >= j).count())
        .collect()
}

fn sorted_desc(alpha: &[usize]) -> Vec<usize> {
    let mut v = alpha.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

fn fmt_parts(p: &[usize]) -> String {
    p.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// `Σ_α c_α M_α`, homogeneous of degree `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QSymF {
    pub n: usize,
    pub terms: BTreeMap<Vec<usize>, QPoly>,
}

impl QSymF {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn coeff(&self, alpha: &[usize]) -> QPoly {
        self.terms.get(alpha).cloned().unwrap_or_default()
    }

    /// Ok when coefficients are constant on rearrangements; otherwise the
    /// first pair of compositions that disagree.
    pub fn check_symmetric(&self) -> Result<()> {
        let mut first: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for alpha in compositions(self.n) {
            let rep = first
                .entry(sorted_desc(&alpha))
                .or_insert_with(|| alpha.clone());
            if self.coeff(rep) != self.coeff(&alpha) {
                return Err(Error::Asymmetric {
                    left: rep.clone(),
                    right: alpha,
                });
            }
        }
        Ok(())
    }

    /// Reverses every composition.
    pub fn rho(&self) -> QSymF {
        QSymF {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (a.iter().rev().copied().collect(), c.clone()))
                .collect(),
        }
    }

    /// `q^e · X(q^{-1})`.
    pub fn invert_q_shift(&self, e: i64) -> QSymF {
        QSymF {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (a.clone(), c.invert_q().shift(e)))
                .collect(),
        }
    }

    /// Coefficients of the monomial symmetric functions `m_λ`.
    pub fn m_coeffs(&self) -> BTreeMap<Vec<usize>, QPoly> {
        self.terms
            .iter()
            .filter(|(a, _)| a.windows(2).all(|w| w[0] >= w[1]))
            .map(|(a, c)| (a.clone(), c.clone()))
            .collect()
    }

    pub fn eval(&self, q: &BigRational) -> Result<BTreeMap<Vec<usize>, BigRational>> {
        self.terms
            .iter()
            .map(|(a, c)| Ok((a.clone(), c.eval(q)?)))
            .collect()
    }
}

/// `Σ_λ c_λ e_λ`, homogeneous of degree `n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymE {
    pub n: usize,
    pub terms: BTreeMap<Vec<usize>, QRat>,
}

impl SymE {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn coeff(&self, lambda: &[usize]) -> QRat {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, lambda: Vec<usize>, c: &QRat) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(lambda.clone()).or_default();
        *e = &*e + c;
        if e.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn add(&self, other: &SymE) -> SymE {
        let mut out = self.clone();
        out.n = self.n.max(other.n);
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: &QRat) -> SymE {
        let mut out = SymE::zero(self.n);
        for (l, x) in &self.terms {
            out.add_term(l.clone(), &(x * c));
        }
        out
    }

    /// `e_μ -> e_{μ + shift}` componentwise, padding `μ` with zeros.
    pub fn shift_parts(&self, shift: &[usize]) -> SymE {
        let mut out = SymE::zero(self.n + shift.iter().sum::<usize>());
        for (mu, c) in &self.terms {
            let len = mu.len().max(shift.len());
            let mut nu: Vec<usize> = (0..len)
                .map(|i| mu.get(i).copied().unwrap_or(0) + shift.get(i).copied().unwrap_or(0))
                .collect();
            nu.sort_unstable_by(|a, b| b.cmp(a));
            nu.retain(|&x| x > 0);
            out.add_term(nu, c);
        }
        out
    }

    /// Sum of coefficients over partitions with `k` parts.
    pub fn length_sum(&self, k: usize) -> QRat {
        self.terms
            .iter()
            .filter(|(l, _)| l.len() == k)
            .map(|(_, c)| c.clone())
            .sum()
    }

    /// Every coefficient is a polynomial in `q` with nonnegative coefficients.
    pub fn is_e_positive(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.as_poly().is_some_and(QPoly::is_nonneg_poly))
    }
}

impl fmt::Display for QSymF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(a, c)| format!("({c})*M[{}]", fmt_parts(a)))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Display for SymE {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(l, c)| format!("({c})*e[{}]", fmt_parts(l)))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Number of 0-1 matrices with row sums `rows` and column sums `cols`.
fn zero_one_matrices(rows: &[usize], cols: &[usize]) -> u64 {
    fn rec(
        rows: &[usize],
        cols: &mut Vec<usize>,
        memo: &mut HashMap<(usize, Vec<usize>), u64>,
    ) -> u64 {
        let Some((&r, rest)) = rows.split_first() else {
            return u64::from(cols.iter().all(|&c| c == 0));
        };
        let key = (rows.len(), cols.clone());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let n = cols.len();
        let mut total = 0;
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != r || (0..n).any(|c| mask >> c & 1 == 1 && cols[c] == 0)
            {
                continue;
            }
            (0..n)
                .filter(|c| mask >> c & 1 == 1)
                .for_each(|c| cols[c] -= 1);
            total += rec(rest, cols, memo);
            (0..n)
                .filter(|c| mask >> c & 1 == 1)
                .for_each(|c| cols[c] += 1);
        }
        memo.insert(key, total);
        total
    }
    rec(rows, &mut cols.to_vec(), &mut HashMap::new())
}

/// `e_λ = Σ_μ B_{λμ} m_μ` as a map `μ -> B_{λμ}`.
pub fn e_in_m(lambda: &[usize]) -> BTreeMap<Vec<usize>, u64> {
    let n = lambda.iter().sum();
    partitions(n)
        .into_iter()
        .filter_map(|mu| {
            let c = zero_one_matrices(lambda, &mu);
            (c > 0).then_some((mu, c))
        })
        .collect()
}

/// Converts a symmetric quasisymmetric function to the elementary basis by
/// peeling off the lexicographically largest monomial term.
pub fn to_e_basis(x: &QSymF) -> Result<SymE> {
    x.check_symmetric()?;
    Ok(m_to_e_basis(x))
}

/// Elementary expansion read off the partition-shaped coefficients only;
/// meaningful when `x` is known to be symmetric.
pub fn m_to_e_basis(x: &QSymF) -> SymE {
    let mut m: BTreeMap<Vec<usize>, QPoly> = x
        .m_coeffs()
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let mut out = SymE::zero(x.n);
    while let Some((mu, c)) = m.iter().next_back().map(|(a, b)| (a.clone(), b.clone())) {
        let lambda = conjugate(&mu);
        for (nu, b) in e_in_m(&lambda) {
            let entry = m.entry(nu.clone()).or_default();
            *entry -= &c.scale(&b.into());
            if entry.is_zero() {
                m.remove(&nu);
            }
        }
        out.add_term(lambda, &QRat::from(c));
    }
    out
}

/// Expands in the monomial basis (`m_λ` coefficients only).
pub fn e_to_m(x: &SymE) -> BTreeMap<Vec<usize>, QRat> {
    let mut out: BTreeMap<Vec<usize>, QRat> = BTreeMap::new();
    for (lambda, c) in &x.terms {
        for (mu, b) in e_in_m(lambda) {
            let e = out.entry(mu).or_default();
            *e = &*e + &c.mul_poly(&QPoly::constant(b));
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        let p: Vec<usize> = (0..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(compositions(5).len(), 16);
        assert_eq!(partitions(3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        assert_eq!(conjugate(&[3, 1]), vec![2, 1, 1]);
    }

    #[test]
    fn elementary_in_monomials() {
        // e_21 = m_21 + 3 m_111
        assert_eq!(
            e_in_m(&[2, 1]),
            BTreeMap::from([(vec![2, 1], 1), (vec![1, 1, 1], 3)])
        );
        // e_111 = m_3 + 3 m_21 + 6 m_111
        assert_eq!(
            e_in_m(&[1, 1, 1]),
            BTreeMap::from([(vec![3], 1), (vec![2, 1], 3), (vec![1, 1, 1], 6)])
        );
        assert_eq!(e_in_m(&[3]), BTreeMap::from([(vec![1, 1, 1], 1)]));
    }

    #[test]
    fn e_basis_round_trip() {
        let mut x = SymE::zero(4);
        x.add_term(vec![2, 2], &"q".parse().unwrap());
        x.add_term(vec![3, 1], &"(1)/(1 + q)".parse().unwrap());
        x.add_term(vec![1, 1, 1, 1], &QRat::from(3));
        let m = e_to_m(&x);
        let mut f = QSymF::zero(4);
        for alpha in compositions(4) {
            let key = sorted_desc(&alpha);
            if let Some(c) = m.get(&key) {
                // clear the denominator so coefficients stay polynomial
                let p = c.mul_poly(&"1 + q".parse().unwrap());
                f.terms.insert(alpha, p.as_poly().unwrap().clone());
            }
        }
        let back = to_e_basis(&f).unwrap();
        assert_eq!(back, x.scale(&QRat::from(QPoly::from_i64s(0, &[1, 1]))));
    }

    #[test]
    fn asymmetric_input_is_rejected() {
        let mut f = QSymF::zero(2);
        f.terms.insert(vec![1, 1], QPoly::one());
        f.terms.insert(vec![2], QPoly::one());
        assert!(to_e_basis(&f).is_ok());
        let mut g = QSymF::zero(3);
        g.terms.insert(vec![2, 1], QPoly::one());
        assert!(matches!(to_e_basis(&g), Err(Error::Asymmetric { .. })));
    }

    #[test]
    fn shift_parts_pads() {
        let mut x = SymE::zero(2);
        x.add_term(vec![2], &QRat::one());
        let y = x.shift_parts(&[1, 1]);
        assert_eq!(y.coeff(&[3, 1]), QRat::one());
        let mut z = SymE::zero(0);
        z.add_term(vec![], &QRat::one());
        assert_eq!(z.shift_parts(&[1, 1]).coeff(&[1, 1]), QRat::one());
    }
}
