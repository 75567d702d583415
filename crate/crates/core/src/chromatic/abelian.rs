//! Abelian subpaths, abelian Dyck graphs and their two-row e-expansions.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use super::graph::{csf_partitions, DyckGraph};
use super::orient::acyclic_orientations;
use super::qsym::{m_to_e_basis, SymE};
use crate::error::{Error, Result};
use crate::lattice::{BoxPartition, Letter, Word};
use crate::qalg::{qfact, qint, QPoly, QRat};
use crate::qhit::qhit_square_gf;

/// A factor `V = w[start..start + len]` of a Dyck word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Factor {
    pub start: usize,
    pub len: usize,
}

/// Whether `w[start..start + len]` is an abelian subpath of the Dyck word `w`.
///
/// With `(x0, y0)` the start point, `a` east and `b` north steps, the factor
/// spans columns `C = x0+1..=x0+a` and rows `R = y0+1..=y0+b`. It is abelian when
/// every cell of `C x R` is a pair `i < j` (`x0 + a <= y0`), the vertices of `R`
/// share their larger neighbours (`h` is constant on `R`), and the vertices of
/// `C` share their smaller neighbours (no east step at a height in `x0+1..x0+a`).
pub fn is_abelian_factor(w: &Word, f: Factor) -> bool {
    if f.start + f.len > w.len() || !w.is_dyck() {
        return false;
    }
    let (x0, y0) = w.point(f.start);
    let v = &w.letters()[f.start..f.start + f.len];
    let a = v.iter().filter(|&&l| l == Letter::E).count();
    let b = v.len() - a;
    if x0 + a > y0 {
        return false;
    }
    let mut heights = Vec::with_capacity(w.n());
    let mut norths = 0;
    for &l in w.letters() {
        match l {
            Letter::N => norths += 1,
            Letter::E => heights.push(norths),
        }
    }
    let rows_twin = b <= 1 || heights[y0] == heights[y0 + b - 1];
    let cols_twin = !heights.iter().any(|&t| x0 < t && t < x0 + a);
    rows_twin && cols_twin
}

/// All abelian factors with at least one `N` and one `E`, by start then length.
pub fn abelian_factors(w: &Word) -> Vec<Factor> {
    let l = w.letters();
    let mut out = Vec::new();
    for start in 0..l.len() {
        for len in 2..=l.len() - start {
            let f = Factor { start, len };
            let v = &l[start..start + len];
            if v.contains(&Letter::N) && v.contains(&Letter::E) && is_abelian_factor(w, f) {
                out.push(f);
            }
        }
    }
    out
}

/// The partition of non-edges of an abelian graph, transposed if needed so
/// that `λ_1 >= ℓ(λ)`, in the `n x n` box.
pub fn abelian_shape(g: &DyckGraph) -> Result<BoxPartition> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian(g.to_dyck_word().to_string()));
    }
    let lam = g.non_edge_partition();
    Ok(if lam.part(1) < lam.length() {
        lam.transpose()
    } else {
        lam
    })
}

/// Per-vertex exponent in the Harada–Precup recursion.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AscentSeq {
    /// `a_i = #{j > i : {i, j} ∈ E}`.
    #[default]
    Forward,
    /// `a_i = #{j < i : {j, i} ∈ E}`.
    Backward,
}

impl fmt::Display for AscentSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AscentSeq::Forward => "forward",
            AscentSeq::Backward => "backward",
        })
    }
}

impl FromStr for AscentSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "forward" => Ok(AscentSeq::Forward),
            "backward" => Ok(AscentSeq::Backward),
            _ => Err(Error::Parse(format!("unknown ascent sequence {s:?}"))),
        }
    }
}

pub fn ascent_sequence(g: &DyckGraph, kind: AscentSeq) -> Vec<usize> {
    let adj = g.adjacency();
    (0..g.n())
        .map(|i| {
            let mask = match kind {
                AscentSeq::Forward => adj[i] & !((1u32 << (i + 1)) - 1),
                AscentSeq::Backward => adj[i] & ((1u32 << i) - 1),
            };
            mask.count_ones() as usize
        })
        .collect()
}

fn memo<K: std::hash::Hash + Eq + Clone, V: Clone>(
    cell: &'static OnceLock<Mutex<HashMap<K, V>>>,
    key: K,
    f: impl FnOnce() -> Result<V>,
) -> Result<V> {
    let map = cell.get_or_init(Default::default);
    if let Some(v) = map.lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let v = f()?;
    map.lock().unwrap().insert(key, v.clone());
    Ok(v)
}

/// `X_G` in the elementary basis, from direct colouring enumeration; memoized.
pub fn x_elementary(g: &DyckGraph, bound: usize) -> Result<Arc<SymE>> {
    static CACHE: OnceLock<Mutex<HashMap<Vec<usize>, Arc<SymE>>>> = OnceLock::new();
    memo(&CACHE, g.hessenberg().to_vec(), || {
        Ok(Arc::new(m_to_e_basis(&csf_partitions(g, bound)?)))
    })
}

/// `(sources, initial)` to the ascent-weighted orientation count.
type OrientationTable = HashMap<(usize, usize), QPoly>;

/// `Σ q^{asc(A)}` over acyclic orientations, grouped by `(sources, initial)`.
fn orientation_table(g: &DyckGraph, bound: usize) -> Result<Arc<OrientationTable>> {
    static CACHE: OnceLock<Mutex<HashMap<Vec<usize>, Arc<OrientationTable>>>> = OnceLock::new();
    memo(&CACHE, g.hessenberg().to_vec(), || {
        let mut t = OrientationTable::new();
        for a in acyclic_orientations(g, bound)? {
            *t.entry((a.sources.len(), a.initial)).or_default() += &QPoly::q_pow(a.ascents as i64);
        }
        Ok(Arc::new(t))
    })
}

/// Ascent-weighted count of acyclic orientations with `k` sources.
pub fn orientations_with_sources(g: &DyckGraph, k: usize, bound: usize) -> Result<QPoly> {
    Ok(orientation_table(g, bound)?
        .iter()
        .filter(|((s, _), _)| *s == k)
        .map(|(_, p)| p.clone())
        .sum())
}

/// Ascent-weighted count of acyclic orientations with `initial(A) = j`.
pub fn orientations_with_initial(g: &DyckGraph, j: usize, bound: usize) -> Result<QPoly> {
    Ok(orientation_table(g, bound)?
        .iter()
        .filter(|((_, i), _)| *i == j)
        .map(|(_, p)| p.clone())
        .sum())
}

/// `X_G = |Acy_1^q(G)| e_n + Σ_{i<j non-edge} q^{a_i + a_j} X_{G - {i,j}}^{+(1,1)}`.
pub fn harada_precup(g: &DyckGraph, kind: AscentSeq, bound: usize) -> Result<SymE> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian(g.to_dyck_word().to_string()));
    }
    hp_rec(g, kind, bound)
}

fn hp_rec(g: &DyckGraph, kind: AscentSeq, bound: usize) -> Result<SymE> {
    type Key = (Vec<usize>, AscentSeq);
    static CACHE: OnceLock<Mutex<HashMap<Key, SymE>>> = OnceLock::new();
    let n = g.n();
    if n == 0 {
        let mut one = SymE::zero(0);
        one.add_term(Vec::new(), &QRat::one());
        return Ok(one);
    }
    memo(&CACHE, (g.hessenberg().to_vec(), kind), || {
        let mut out = SymE::zero(n);
        out.add_term(vec![n], &orientations_with_sources(g, 1, bound)?.into());
        let a = ascent_sequence(g, kind);
        for i in 1..=n {
            for j in i + 1..=n {
                if g.is_edge(i, j) {
                    continue;
                }
                let sub = hp_rec(&g.remove_vertices(&[i, j]), kind, bound)?;
                let weight = QRat::from(QPoly::q_pow((a[i - 1] + a[j - 1]) as i64));
                out = out.add(&sub.shift_parts(&[1, 1]).scale(&weight));
            }
        }
        Ok(out)
    })
}

/// `Σ_A q^{asc(A)} e_{n - initial(A), initial(A)}`.
pub fn qstanley(g: &DyckGraph, bound: usize) -> Result<SymE> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian(g.to_dyck_word().to_string()));
    }
    let n = g.n();
    let mut out = SymE::zero(n);
    for a in acyclic_orientations(g, bound)? {
        let j = a.initial;
        let mut lambda = vec![n - j, j];
        lambda.retain(|&p| p > 0);
        lambda.sort_unstable_by(|x, y| y.cmp(x));
        out.add_term(lambda, &QPoly::q_pow(a.ascents as i64).into());
    }
    Ok(out)
}

/// `q^j [j]! [n-2j] H_j^{n-j-1}(λ)`; when `λ` does not fit the
/// `(n-j-1)`-box (only `j = ℓ(λ)`, `λ_1 = n - ℓ`) this is `[j]! H_j^{n-j}(λ)`.
pub fn initial_run_closed_form(g: &DyckGraph, j: usize) -> Result<QPoly> {
    let lam = abelian_shape(g)?;
    let n = g.n();
    let ell = lam.length();
    if j > ell || 2 * j > n {
        return Ok(QPoly::zero());
    }
    let box_side = n - j - 1;
    if n > j && lam.part(1) <= box_side && ell <= box_side {
        let h = qhit_square_gf(&lam.rebox(box_side, box_side)?)?.get(j);
        Ok((qfact(j) * qint(n - 2 * j) * h).shift(j as i64))
    } else {
        let h = qhit_square_gf(&lam.rebox(n - j, n - j)?)?.get(j);
        Ok(qfact(j) * h)
    }
}

/// `Σ_{j <= ℓ} q^j [j]! [n-2j] H_j^{n-j-1}(λ) e_{n-j,j}`.
pub fn abreu_nigro(g: &DyckGraph) -> Result<SymE> {
    let lam = abelian_shape(g)?;
    let n = g.n();
    let mut out = SymE::zero(n);
    for j in 0..=lam.length() {
        let c = initial_run_closed_form(g, j)?;
        let mut lambda = vec![n - j, j];
        lambda.retain(|&p| p > 0);
        lambda.sort_unstable_by(|x, y| y.cmp(x));
        out.add_term(lambda, &c.into());
    }
    Ok(out)
}

/// The three abelian expansions, in the order Harada–Precup, q-Stanley, Abreu–Nigro.
pub fn abelian_expansions(g: &DyckGraph, kind: AscentSeq, bound: usize) -> Result<[SymE; 3]> {
    Ok([
        harada_precup(g, kind, bound)?,
        qstanley(g, bound)?,
        abreu_nigro(g)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::graph::DEFAULT_BOUND;
    use crate::lattice::dyck_words;

    fn g(s: &str) -> DyckGraph {
        DyckGraph::from_dyck_word(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn abelian_factor_condition() {
        let w: Word = "nnnnnneeneneneeeee".parse().unwrap();
        assert!(is_abelian_factor(&w, Factor { start: 7, len: 5 }));
        assert!(!is_abelian_factor(
            &"nenene".parse().unwrap(),
            Factor { start: 1, len: 3 }
        ));
        // "nen" at 1 fits above the diagonal, but rows 2 and 3 have different h
        assert!(!is_abelian_factor(
            &"nnenenee".parse().unwrap(),
            Factor { start: 1, len: 3 }
        ));
        assert!(g("nnneee").is_abelian());
        assert!(!g("nenene").is_abelian());
    }

    #[test]
    fn path_graph_expansions() {
        // X_{P3} = [3] e_3 + q e_21
        let p3 = g("nnenee");
        let want = {
            let mut s = SymE::zero(3);
            s.add_term(vec![3], &qint(3).into());
            s.add_term(vec![2, 1], &QPoly::q_pow(1).into());
            s
        };
        assert_eq!(*x_elementary(&p3, DEFAULT_BOUND).unwrap(), want);
        for kind in [AscentSeq::Forward, AscentSeq::Backward] {
            assert_eq!(harada_precup(&p3, kind, DEFAULT_BOUND).unwrap(), want);
        }
        assert_eq!(qstanley(&p3, DEFAULT_BOUND).unwrap(), want);
        assert_eq!(abreu_nigro(&p3).unwrap(), want);
    }

    #[test]
    fn complete_graph() {
        let k4 = g("nnnneeee");
        let mut want = SymE::zero(4);
        want.add_term(vec![4], &qfact(4).into());
        for e in abelian_expansions(&k4, AscentSeq::Forward, DEFAULT_BOUND).unwrap() {
            assert_eq!(e, want);
        }
    }

    #[test]
    fn abelian_triple_small() {
        for n in 1..=5 {
            for w in dyck_words(n) {
                let gr = DyckGraph::from_dyck_word(&w).unwrap();
                if !gr.is_abelian() {
                    assert!(abreu_nigro(&gr).is_err());
                    continue;
                }
                let x = x_elementary(&gr, DEFAULT_BOUND).unwrap();
                for e in abelian_expansions(&gr, AscentSeq::Forward, DEFAULT_BOUND).unwrap() {
                    assert_eq!(e, *x, "{w}");
                }
            }
        }
    }
}
