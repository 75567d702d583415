//! Expansion into the rectangular monomials `E^k N^m E^{n-k}`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use super::linsolve::{invert, row_times};
use super::staircase::expand_word;
use super::{Basis, Expansion};
use crate::error::Result;
use crate::lattice::{rectangular_word, word_to_partition, Word};
use crate::qalg::{qfalling, QRat};
use crate::qhit::qhit_rect;

/// Coefficients from q-hit numbers: `H^{m,n}_k(λ) / ([m][m-1]...[m-n+1])`.
/// For `m < n` the word is first sent through η.
pub fn expand_rectangular(w: &Word) -> Result<Expansion> {
    let (m, n) = w.grade();
    if m < n {
        let t = expand_rectangular(&w.eta())?;
        return Ok(Expansion { grade: (m, n), ..t });
    }
    let h = qhit_rect(&word_to_partition(w))?;
    let d = qfalling(m, n);
    let coeffs = h
        .values
        .into_iter()
        .map(|x| QRat::new(x, d.clone()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Expansion {
        grade: (m, n),
        basis: Basis::Rectangular,
        coeffs,
    })
}

type InverseCache = RwLock<HashMap<(usize, usize), Arc<Vec<Vec<QRat>>>>>;

/// Inverse of the matrix whose row `k` is the staircase expansion of the
/// `k`-th rectangular word.
fn rect_to_staircase_inverse(m: usize, n: usize) -> Result<Arc<Vec<Vec<QRat>>>> {
    static CACHE: OnceLock<InverseCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.read().unwrap().get(&(m, n)) {
        return Ok(hit.clone());
    }
    let rows = (0..=m.min(n))
        .map(|k| {
            Ok(expand_word(&rectangular_word(k, m, n)?)
                .iter()
                .cloned()
                .map(QRat::from)
                .collect())
        })
        .collect::<Result<Vec<Vec<QRat>>>>()?;
    let inv = Arc::new(invert(&rows)?);
    cache.write().unwrap().insert((m, n), inv.clone());
    Ok(inv)
}

/// Same coefficients obtained only from staircase rewriting: solve
/// `Σ_k x_k · stair(R_k) = stair(w)`.
pub fn expand_rectangular_oracle(w: &Word) -> Result<Expansion> {
    let (m, n) = w.grade();
    let target: Vec<QRat> = expand_word(w).iter().cloned().map(QRat::from).collect();
    let inv = rect_to_staircase_inverse(m, n)?;
    Ok(Expansion {
        grade: (m, n),
        basis: Basis::Rectangular,
        coeffs: row_times(&target, &inv),
    })
}
