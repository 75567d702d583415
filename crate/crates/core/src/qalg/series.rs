//! Truncated power series in an auxiliary variable `t` over `Z[q, q^{-1}]`.

use std::ops::{Add, Mul, Sub};

use super::QPoly;

/// `sum_{i <= order} coeffs[i] t^i`, everything beyond `t^order` discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<QPoly>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![QPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = QPoly::one();
        s
    }

    /// Takes the first `order + 1` entries of `coeffs`, padding with zeros.
    pub fn from_coeffs(mut coeffs: Vec<QPoly>, order: usize) -> Self {
        coeffs.resize(order + 1, QPoly::zero());
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &QPoly {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<QPoly> {
        self.coeffs
    }

    /// Product truncated at the smaller of the two orders.
    pub fn mul(&self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += &(a * b);
                }
            }
        }
        out
    }

    fn zip_with(&self, rhs: &TruncSeries, f: impl Fn(&QPoly, &QPoly) -> QPoly) -> TruncSeries {
        let order = self.order().min(rhs.order());
        Self {
            coeffs: (0..=order)
                .map(|i| f(&self.coeffs[i], &rhs.coeffs[i]))
                .collect(),
        }
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        TruncSeries::mul(self, rhs)
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

/// The q-Pochhammer polynomial `(t; q)_{m+1} = prod_{i=1}^{m+1} (1 - t q^{i-1})`
/// truncated at `t^order`.
pub fn qpochhammer(m: usize, order: usize) -> TruncSeries {
    let mut acc = TruncSeries::one(order);
    for i in 0..=m {
        let factor =
            TruncSeries::from_coeffs(vec![QPoly::one(), QPoly::monomial(-1, i as i64)], order);
        acc = &acc * &factor;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::qint;

    fn p(s: &str) -> QPoly {
        s.parse().unwrap()
    }

    #[test]
    fn pochhammer_small_cases() {
        assert_eq!(qpochhammer(0, 2).coeffs(), &[p("1"), p("-1"), p("0")]);
        assert_eq!(qpochhammer(1, 2).coeffs(), &[p("1"), p("-1 - q"), p("q")]);
        assert_eq!(qpochhammer(2, 1).coeffs(), &[p("1"), -qint(3)]);
    }

    #[test]
    fn truncated_product() {
        let a = TruncSeries::from_coeffs(vec![p("1"), p("1")], 1);
        let b = TruncSeries::from_coeffs(vec![p("1"), p("-1")], 1);
        assert_eq!((&a * &b).coeffs(), &[p("1"), p("0")]);
        let long = TruncSeries::from_coeffs(vec![p("1"), p("1"), p("1")], 2);
        assert_eq!((&long * &b).order(), 1);
    }

    #[test]
    fn geometric_series_against_pochhammer() {
        // sum_j [j+1]_q t^j * (t;q)_2 = 1.
        let order = 6;
        let series = TruncSeries::from_coeffs((0..=order).map(|j| qint(j + 1)).collect(), order);
        let prod = &series * &qpochhammer(1, order);
        assert!(prod.coeff(0).is_one());
        assert!(prod.coeffs()[1..].iter().all(QPoly::is_zero));
    }
}
