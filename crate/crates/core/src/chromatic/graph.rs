//! Dyck graphs and their chromatic quasisymmetric functions.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{word_to_partition, BoxPartition, Letter, Word};
use crate::qalg::QPoly;

use super::qsym::{compositions, QSymF};

/// Default cap on the number of vertices for exhaustive enumeration.
pub const DEFAULT_BOUND: usize = 8;

/// A graph on `1..=n` whose edges are `{i < j}` with `j <= h(i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DyckGraph {
    hess: Vec<usize>,
    /// `adj[i]` has bit `j` set for each neighbour; 0-based.
    adj: Vec<u32>,
}

impl DyckGraph {
    /// `h(1), ..., h(n)`: nondecreasing, `h(i) >= i`, `h(n) = n`.
    pub fn from_hessenberg(hess: &[usize]) -> Result<Self> {
        let n = hess.len();
        if n > 31 {
            return Err(Error::BoundExceeded { size: n, bound: 31 });
        }
        for (i, &h) in hess.iter().enumerate() {
            if h < i + 1 || h > n || (i > 0 && h < hess[i - 1]) {
                return Err(Error::Invalid(format!(
                    "{hess:?} is not a Hessenberg function"
                )));
            }
        }
        let mut adj = vec![0u32; n];
        for i in 0..n {
            for j in i + 1..hess[i] {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
        Ok(Self {
            hess: hess.to_vec(),
            adj,
        })
    }

    /// `h(i)` is the number of `N` before the `i`-th `E`.
    pub fn from_dyck_word(w: &Word) -> Result<Self> {
        if !w.is_dyck() {
            return Err(Error::NotDyck(w.to_string()));
        }
        let mut hess = Vec::with_capacity(w.n());
        let mut norths = 0;
        for &l in w.letters() {
            match l {
                Letter::N => norths += 1,
                Letter::E => hess.push(norths),
            }
        }
        Self::from_hessenberg(&hess)
    }

    pub fn to_dyck_word(&self) -> Word {
        let mut v = Vec::with_capacity(2 * self.n());
        let mut norths = 0;
        for &h in &self.hess {
            v.extend(std::iter::repeat_n(Letter::N, h - norths));
            norths = h;
            v.push(Letter::E);
        }
        Word::new(v)
    }

    pub fn n(&self) -> usize {
        self.hess.len()
    }

    pub fn hessenberg(&self) -> &[usize] {
        &self.hess
    }

    /// 1-based vertices.
    pub fn is_edge(&self, i: usize, j: usize) -> bool {
        i != j && self.adj[i - 1] >> (j - 1) & 1 == 1
    }

    /// Edges `(i, j)`, `i < j`, 1-based, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.n())
            .flat_map(|i| (i + 1..=self.hess[i - 1]).map(move |j| (i, j)))
            .collect()
    }

    pub fn num_edges(&self) -> usize {
        self.hess
            .iter()
            .enumerate()
            .map(|(i, &h)| h - (i + 1))
            .sum()
    }

    /// 0-based neighbour bitmasks.
    pub fn adjacency(&self) -> &[u32] {
        &self.adj
    }

    /// Induced subgraph on the vertices not in `removed` (1-based), relabelled in order.
    pub fn remove_vertices(&self, removed: &[usize]) -> DyckGraph {
        let keep: Vec<usize> = (1..=self.n()).filter(|v| !removed.contains(v)).collect();
        let hess: Vec<usize> = keep
            .iter()
            .enumerate()
            .map(|(a, &i)| {
                let last = keep
                    .iter()
                    .enumerate()
                    .skip(a)
                    .rfind(|&(_, &j)| j == i || self.is_edge(i, j));
                last.map_or(a + 1, |(b, _)| b + 1)
            })
            .collect();
        DyckGraph::from_hessenberg(&hess).expect("induced subgraphs of Dyck graphs are Dyck graphs")
    }

    /// Partition whose cells are the non-edges: the partition of the Dyck word.
    pub fn non_edge_partition(&self) -> BoxPartition {
        word_to_partition(&self.to_dyck_word())
    }

    /// Whether the vertices split into two cliques along the path: `λ_1 + ℓ(λ) <= n`.
    pub fn is_abelian(&self) -> bool {
        let lam = self.non_edge_partition();
        lam.part(1) + lam.length() <= self.n()
    }
}

impl fmt::Debug for DyckGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckGraph({})", self.to_dyck_word())
    }
}

fn check_bound(g: &DyckGraph, bound: usize) -> Result<()> {
    if g.n() > bound {
        Err(Error::BoundExceeded { size: g.n(), bound })
    } else {
        Ok(())
    }
}

/// Ascent-weighted counts of proper colourings using colour `c` exactly
/// `alpha[c]` times; index = number of ascents.
fn coloring_counts(g: &DyckGraph, alpha: &[usize]) -> Vec<u64> {
    fn rec(
        v: usize,
        g: &DyckGraph,
        left: &mut [usize],
        colors: &mut [usize],
        asc: usize,
        out: &mut [u64],
    ) {
        let n = g.n();
        if v == n {
            out[asc] += 1;
            return;
        }
        let earlier = g.adj[v] & ((1u32 << v) - 1);
        for c in 0..left.len() {
            if left[c] == 0 {
                continue;
            }
            let mut ok = true;
            let mut extra = 0;
            let mut bits = earlier;
            while bits != 0 {
                let u = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if colors[u] == c {
                    ok = false;
                    break;
                }
                if colors[u] < c {
                    extra += 1;
                }
            }
            if ok {
                left[c] -= 1;
                colors[v] = c;
                rec(v + 1, g, left, colors, asc + extra, out);
                left[c] += 1;
            }
        }
    }
    let mut out = vec![0u64; g.num_edges() + 1];
    rec(
        0,
        g,
        &mut alpha.to_vec(),
        &mut vec![usize::MAX; g.n()],
        0,
        &mut out,
    );
    out
}

fn counts_to_poly(counts: &[u64]) -> QPoly {
    QPoly::from_terms(
        counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(e, &c)| (e as i64, c)),
    )
}

/// `X_G` in the monomial quasisymmetric basis, every composition of `n`.
pub fn csf(g: &DyckGraph, bound: usize) -> Result<QSymF> {
    check_bound(g, bound)?;
    let mut x = QSymF::zero(g.n());
    for alpha in compositions(g.n()) {
        let p = counts_to_poly(&coloring_counts(g, &alpha));
        if !p.is_zero() {
            x.terms.insert(alpha, p);
        }
    }
    Ok(x)
}

/// `X_G` restricted to partition-shaped compositions; enough for the
/// elementary expansion once symmetry is known.
pub fn csf_partitions(g: &DyckGraph, bound: usize) -> Result<QSymF> {
    check_bound(g, bound)?;
    let mut x = QSymF::zero(g.n());
    for lambda in super::qsym::partitions(g.n()) {
        let p = counts_to_poly(&coloring_counts(g, &lambda));
        if !p.is_zero() {
            x.terms.insert(lambda, p);
        }
    }
    Ok(x)
}

/// Same colourings weighted by descents instead of ascents.
pub fn csf_descents(g: &DyckGraph, bound: usize) -> Result<QSymF> {
    check_bound(g, bound)?;
    let mut x = QSymF::zero(g.n());
    let e = g.num_edges();
    for alpha in compositions(g.n()) {
        let counts = coloring_counts(g, &alpha);
        let p = QPoly::from_terms(
            counts
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(a, &c)| ((e - a) as i64, c)),
        );
        if !p.is_zero() {
            x.terms.insert(alpha, p);
        }
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> DyckGraph {
        DyckGraph::from_dyck_word(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn extreme_graphs() {
        let k = g("nnneee");
        assert_eq!(k.edges(), vec![(1, 2), (1, 3), (2, 3)]);
        assert!(g("nenene").edges().is_empty());
        assert_eq!(g("nnenee").hessenberg(), &[2, 3, 3]);
        assert!(DyckGraph::from_dyck_word(&"ennn".parse().unwrap()).is_err());
        assert!(DyckGraph::from_hessenberg(&[1, 3, 2]).is_err());
        assert_eq!(g("nnenee").to_dyck_word().to_string(), "nnenee");
    }

    #[test]
    fn interval_property() {
        for w in crate::lattice::dyck_words(5) {
            let gr = DyckGraph::from_dyck_word(&w).unwrap();
            for (i, j) in gr.edges() {
                for a in i..j {
                    for b in a + 1..=j {
                        assert!(gr.is_edge(a, b));
                    }
                }
            }
            assert_eq!(gr.non_edge_partition().size(), 10 - gr.num_edges());
        }
    }

    #[test]
    fn remove_vertices_keeps_induced_edges() {
        let gr = g("nnnenneeee");
        let sub = gr.remove_vertices(&[2, 4]);
        let keep = [1, 3, 5];
        for a in 0..3 {
            for b in a + 1..3 {
                assert_eq!(sub.is_edge(a + 1, b + 1), gr.is_edge(keep[a], keep[b]));
            }
        }
    }

    #[test]
    fn edgeless_pair() {
        let x = csf(&g("nene"), DEFAULT_BOUND).unwrap();
        assert_eq!(x.coeff(&[2]), QPoly::one());
        assert_eq!(x.coeff(&[1, 1]), QPoly::constant(2));
        assert!(csf(&g("nene"), 1).is_err());
    }
}
