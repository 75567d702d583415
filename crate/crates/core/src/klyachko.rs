//! The q-Klyachko algebra: remixed Eulerian numbers and expansions of
//! connected monomials in the squarefree interval basis.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{area_sequence, BoxPartition};
use crate::qalg::{qfact, qint, qpochhammer, QPoly, QRat, TruncSeries};

/// `u^c = ∏ u_i^{c_i}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KlyMonomial {
    mult: BTreeMap<i64, usize>,
}

impl KlyMonomial {
    pub fn from_indices(indices: impl IntoIterator<Item = i64>) -> Self {
        let mut mult = BTreeMap::new();
        for i in indices {
            *mult.entry(i).or_insert(0) += 1;
        }
        Self { mult }
    }

    /// `u(λ) = ∏_i u_{a_i}` for the area sequence `a` of λ.
    pub fn from_partition(lambda: &BoxPartition) -> Result<Self> {
        Ok(Self::from_indices(area_sequence(lambda)?.0))
    }

    pub fn multiplicities(&self) -> &BTreeMap<i64, usize> {
        &self.mult
    }

    pub fn degree(&self) -> usize {
        self.mult.values().sum()
    }

    /// Smallest and largest index present.
    pub fn support(&self) -> Option<(i64, i64)> {
        Some((*self.mult.keys().next()?, *self.mult.keys().next_back()?))
    }

    /// Whether the support is an interval.
    pub fn is_connected(&self) -> bool {
        match self.support() {
            None => true,
            Some((lo, hi)) => (hi - lo + 1) as usize == self.mult.len(),
        }
    }

    pub fn shift(&self, d: i64) -> Self {
        Self {
            mult: self.mult.iter().map(|(&i, &c)| (i + d, c)).collect(),
        }
    }

    /// Multiplicities over the support interval, as a strong composition.
    pub fn composition(&self) -> Result<Vec<usize>> {
        if !self.is_connected() {
            return Err(Error::Invalid(format!("{self} has disconnected support")));
        }
        Ok(self.mult.values().copied().collect())
    }
}

impl fmt::Display for KlyMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mult.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .mult
            .iter()
            .map(|(i, &c)| {
                if c == 1 {
                    format!("u_{i}")
                } else {
                    format!("u_{i}^{c}")
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// `(A_{α0^{m-k}}, A_{0α0^{m-k-1}}, ..., A_{0^{m-k}α})` for a strong
/// composition `α` of `m` with `k` parts.
pub fn remixed_connected(alpha: &[usize]) -> Result<Vec<QPoly>> {
    if alpha.is_empty() || alpha.contains(&0) {
        return Err(Error::Invalid(format!(
            "{alpha:?} is not a strong composition"
        )));
    }
    let m: usize = alpha.iter().sum();
    let k = alpha.len();
    let order = m - k;
    let lhs: Vec<QPoly> = (0..=order)
        .map(|j| {
            let mut prod = QPoly::one();
            for (i, &a) in alpha.iter().enumerate() {
                let f = qint(j + i + 1);
                for _ in 0..a {
                    prod *= &f;
                }
            }
            prod
        })
        .collect();
    let out = TruncSeries::from_coeffs(lhs, order)
        .mul(&qpochhammer(m, order))
        .into_coeffs();
    let kf = qfact(k);
    for (i, a) in out.iter().enumerate() {
        if !a.has_nonneg_coeffs() || a.div_exact(&kf).is_none() {
            return Err(Error::Positivity(format!(
                "remixed Eulerian number {i} of {alpha:?} is {a}, expected a multiple of [{k}]! in N[q]"
            )));
        }
    }
    Ok(out)
}

/// Expansion of a connected degree-`m` monomial: interval start `s` maps to
/// the coefficient of `u_{[s, s+m-1]}`.
pub fn expand_connected(c: &KlyMonomial) -> Result<BTreeMap<i64, QRat>> {
    let m = c.degree();
    let Some((lo, hi)) = c.support() else {
        return Ok(BTreeMap::from([(1, QRat::one())]));
    };
    let alpha = c.composition()?;
    let k = (hi - lo + 1) as usize;
    let mf = qfact(m);
    let mut out = BTreeMap::new();
    for (i, a) in remixed_connected(&alpha)?.into_iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        // A_{0^i α 0^{m-k-i}} has α starting at position i+1 of [1, m];
        // translate so that α starts at lo.
        let start = 1 + lo - (i as i64 + 1);
        out.insert(start, QRat::new(a, mf.clone())?);
    }
    debug_assert!(out.keys().all(|&s| s <= lo && s + m as i64 > hi) && k <= m);
    Ok(out)
}

/// Coefficients of `u_{[1,m]↓k}` for `k = 0..=m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalExpansion {
    pub m: usize,
    pub coeffs: Vec<QRat>,
}

/// Expands `u(λ)` for λ in a square box.
pub fn expand_u_lambda(lambda: &BoxPartition) -> Result<IntervalExpansion> {
    let m = lambda.rows();
    let u = KlyMonomial::from_partition(lambda)?;
    let mut coeffs = vec![QRat::zero(); m + 1];
    for (start, v) in expand_connected(&u)? {
        // [1,m]↓k starts at 1 - k
        let k = 1 - start;
        if !(0..=m as i64).contains(&k) {
            return Err(Error::Invalid(format!(
                "{u} expands onto u_[{start},..] outside [1-m, m]"
            )));
        }
        coeffs[k as usize] = v;
    }
    Ok(IntervalExpansion { m, coeffs })
}
