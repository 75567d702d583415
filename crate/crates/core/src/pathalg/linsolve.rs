//! Dense linear algebra over `Q(q)` and rank by specialization.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qalg::{ratio, QRat};

/// Inverse of a square matrix by Gauss–Jordan elimination.
pub fn invert(matrix: &[Vec<QRat>]) -> Result<Vec<Vec<QRat>>> {
    let n = matrix.len();
    let mut a: Vec<Vec<QRat>> = matrix
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "matrix must be square");
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { QRat::one() } else { QRat::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::Invalid("singular matrix".into()))?;
        a.swap(col, pivot);
        let inv = a[col][col].inverse()?;
        for x in a[col].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x = &*x - &(&f * p);
                }
            }
        }
    }
    Ok(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// `x · M` for a row vector `x`.
pub fn row_times(x: &[QRat], m: &[Vec<QRat>]) -> Vec<QRat> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| {
            x.iter()
                .zip(m)
                .filter(|(xi, _)| !xi.is_zero())
                .map(|(xi, row)| xi * &row[j])
                .sum()
        })
        .collect()
}

fn rank_rational(mut a: Vec<Vec<BigRational>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            if !row[col].is_zero() {
                let f = &row[col] / &pivot_row[col];
                for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &f * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank over `Q(q)`, computed as the largest rank among specializations at
/// a few rational values of `q` where every entry is defined. Exact for
/// generic values; the values are chosen away from roots of unity.
pub fn rank(rows: &[Vec<QRat>]) -> usize {
    let points = [ratio(2, 1), ratio(3, 2), ratio(-5, 7)];
    points
        .iter()
        .filter_map(|q| {
            rows.iter()
                .map(|row| row.iter().map(|x| x.eval(q)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()
                .ok()
        })
        .map(rank_rational)
        .max()
        .unwrap_or(0)
}
