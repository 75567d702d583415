//! Acyclic orientations of Dyck graphs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::graph::DyckGraph;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orientation {
    /// Directed edges `(from, to)`, 1-based, in the graph's edge order.
    pub arcs: Vec<(usize, usize)>,
    /// Arcs `i -> j` with `i < j`.
    pub ascents: usize,
    pub sources: Vec<usize>,
    pub source_sequence: Vec<usize>,
    /// Length of the initial run of 2's in the source sequence.
    pub initial: usize,
}

impl Orientation {
    fn from_arcs(n: usize, arcs: Vec<(usize, usize)>) -> Self {
        let ascents = arcs.iter().filter(|(a, b)| a < b).count();
        let mut alive = vec![true; n + 1];
        alive[0] = false;
        let sources_of = |alive: &[bool]| -> Vec<usize> {
            (1..=n)
                .filter(|&v| alive[v] && !arcs.iter().any(|&(a, b)| b == v && alive[a]))
                .collect()
        };
        let sources = sources_of(&alive);
        let mut source_sequence = Vec::new();
        loop {
            let s = sources_of(&alive);
            if s.is_empty() {
                break;
            }
            source_sequence.push(s.len());
            for v in s {
                alive[v] = false;
            }
        }
        let initial = source_sequence.iter().take_while(|&&m| m == 2).count();
        Self {
            arcs,
            ascents,
            sources,
            source_sequence,
            initial,
        }
    }
}

/// Every acyclic orientation, as the distinct images of the `n!` vertex
/// orders, sorted by the set of reversed edges.
pub fn acyclic_orientations(g: &DyckGraph, bound: usize) -> Result<Vec<Orientation>> {
    let n = g.n();
    if n > bound {
        return Err(Error::BoundExceeded { size: n, bound });
    }
    let edges = g.edges();
    let mut seen: BTreeMap<u64, ()> = BTreeMap::new();
    let mut position = vec![0usize; n + 1];
    let mut used = vec![false; n + 1];
    fn rec(
        depth: usize,
        n: usize,
        position: &mut [usize],
        used: &mut [bool],
        edges: &[(usize, usize)],
        seen: &mut BTreeMap<u64, ()>,
    ) {
        if depth == n {
            let mask = edges
                .iter()
                .enumerate()
                .filter(|(_, &(i, j))| position[i] > position[j])
                .fold(0u64, |m, (k, _)| m | 1 << k);
            seen.insert(mask, ());
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                position[v] = depth;
                rec(depth + 1, n, position, used, edges, seen);
                used[v] = false;
            }
        }
    }
    if edges.len() > 64 {
        return Err(Error::BoundExceeded {
            size: edges.len(),
            bound: 64,
        });
    }
    rec(0, n, &mut position, &mut used, &edges, &mut seen);
    Ok(seen
        .keys()
        .map(|&mask| {
            let arcs = edges
                .iter()
                .enumerate()
                .map(|(k, &(i, j))| if mask >> k & 1 == 1 { (j, i) } else { (i, j) })
                .collect();
            Orientation::from_arcs(n, arcs)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::graph::DEFAULT_BOUND;

    fn g(s: &str) -> DyckGraph {
        DyckGraph::from_dyck_word(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn edgeless_and_complete() {
        let o = acyclic_orientations(&g("nenene"), DEFAULT_BOUND).unwrap();
        assert_eq!(o.len(), 1);
        assert_eq!(o[0].sources, vec![1, 2, 3]);
        assert_eq!(o[0].source_sequence, vec![3]);
        let k4 = acyclic_orientations(&g("nnnneeee"), DEFAULT_BOUND).unwrap();
        assert_eq!(k4.len(), 24);
        assert!(k4.iter().all(|a| a.sources.len() == 1 && a.initial == 0));
    }

    #[test]
    fn path_orientations() {
        // path 1-2-3: 4 orientations, sources sequence examples
        let o = acyclic_orientations(&g("nnenee"), DEFAULT_BOUND).unwrap();
        assert_eq!(o.len(), 4);
        let two_sources: Vec<_> = o.iter().filter(|a| a.sources.len() == 2).collect();
        assert_eq!(two_sources.len(), 1);
        assert_eq!(two_sources[0].sources, vec![1, 3]);
        assert_eq!(two_sources[0].source_sequence, vec![2, 1]);
        assert_eq!(two_sources[0].initial, 1);
        assert!(acyclic_orientations(&g("nnenee"), 2).is_err());
    }
}
