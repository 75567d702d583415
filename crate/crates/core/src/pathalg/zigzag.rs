//! Expansion into the zigzag monomials `s^r t^{n-r} N^{m-n}`, `s = EN`, `t = NE`.
//!
//! A word of grade `(m, n)`, `m >= n`, factors as `wt_{b_1} ... wt_{b_n} N^{m-n}`
//! with `b` its b-sequence and
//!
//! ```text
//! wt_i = [i] t - q[i-1] s            (i >= 1)
//! wt_i = q^i ([1-i] s - [-i] t)      (i <= 0)
//! ```
//!
//! and `s`, `t` commute.

use super::{Basis, Expansion};
use crate::error::{Error, Result};
use crate::lattice::{b_sequence, word_to_partition, Word};
use crate::qalg::{qint, QPoly, QRat};

/// `(coefficient of s, coefficient of t)` in `wt_i`.
pub fn wt(i: i64) -> (QPoly, QPoly) {
    if i >= 1 {
        (-qint(i as usize - 1).shift(1), qint(i as usize))
    } else {
        (
            qint((1 - i) as usize).shift(i),
            -qint((-i) as usize).shift(i),
        )
    }
}

/// A polynomial in commuting `s`, `t`, homogeneous of degree `len - 1`;
/// index `r` holds the coefficient of `s^r t^{deg - r}`.
pub type StPoly = Vec<QPoly>;

pub fn st_mul(a: &StPoly, b: &StPoly) -> StPoly {
    let mut out = vec![QPoly::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    out
}

/// `∏ wt_{b_i}` expanded by successive multiplication.
pub fn wt_product(b: &[i64]) -> StPoly {
    b.iter().fold(vec![QPoly::one()], |acc, &bi| {
        let (s, t) = wt(bi);
        st_mul(&acc, &vec![t, s])
    })
}

/// `Σ_{|S| = r} wt_S`: pick the `s`-coefficient of `wt_{b_i}` for `i ∈ S`
/// and the `t`-coefficient otherwise.
pub fn wt_subset_sum(b: &[i64]) -> StPoly {
    let n = b.len();
    let factors: Vec<(QPoly, QPoly)> = b.iter().map(|&bi| wt(bi)).collect();
    let mut out = vec![QPoly::zero(); n + 1];
    for mask in 0u64..(1 << n) {
        let term: QPoly = factors
            .iter()
            .enumerate()
            .map(|(i, (s, t))| if mask >> i & 1 == 1 { s } else { t })
            .cloned()
            .product();
        out[mask.count_ones() as usize] += &term;
    }
    out
}

/// Zigzag coefficients `r = 0..=n` of a word with `m >= n`. Computes both the
/// product and the subset sum, and fails if they differ or if a coefficient
/// is not globally signed.
pub fn expand_zigzag(w: &Word) -> Result<Expansion> {
    let (m, n) = w.grade();
    if m < n {
        return Err(Error::TallBoxRequired { m, n });
    }
    let b = b_sequence(&word_to_partition(w))?.0;
    let product = wt_product(&b);
    let subsets = wt_subset_sum(&b);
    if product != subsets {
        return Err(Error::Invalid(format!(
            "zigzag product and subset sum differ for {w}"
        )));
    }
    if let Some((r, c)) = product
        .iter()
        .enumerate()
        .find(|(_, c)| !c.is_globally_signed())
    {
        return Err(Error::Positivity(format!(
            "zigzag coefficient {r} of {w} is {c}, not globally signed"
        )));
    }
    Ok(Expansion {
        grade: (m, n),
        basis: Basis::Zigzag,
        coeffs: product.into_iter().map(QRat::from).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> QPoly {
        s.parse().unwrap()
    }

    #[test]
    fn wt_small_values() {
        assert_eq!(wt(0), (QPoly::one(), QPoly::zero()));
        assert_eq!(wt(1), (QPoly::zero(), QPoly::one()));
        assert_eq!(wt(2), (p("-q"), p("1 + q")));
        assert_eq!(wt(-1), (p("q^-1 + 1"), p("-q^-1")));
    }

    #[test]
    fn nenne_example() {
        let e = expand_zigzag(&"nenne".parse().unwrap()).unwrap();
        let c: Vec<QRat> = vec![p("1 + q").into(), p("-q").into(), QRat::zero()];
        assert_eq!(e.coeffs, c);
    }

    #[test]
    fn diagonal_staircase_is_pure_t() {
        let e = expand_zigzag(&"nenenen".parse().unwrap()).unwrap();
        assert_eq!(e.coeffs[0], QRat::one());
        assert!(e.coeffs[1..].iter().all(QRat::is_zero));
        assert!(expand_zigzag(&"nee".parse().unwrap()).is_err());
    }
}
