//! q-hit numbers of Ferrers boards.
//!
//! Two conventions live here. [`qhit_square_gf`] and [`qhit_rect`] use the
//! generating function in `t`; this is the convention the path-algebra and
//! q-Klyachko computations agree with. [`qhit_rook_stat`] counts unattacked
//! cells of rook placements and differs from it by powers of `q`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{area_sequence, BoxPartition};
use crate::qalg::{qfact, qint, qpochhammer, QPoly, TruncSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Generating-function definition.
    Gf,
    /// Unattacked-cell statistic on rook placements.
    Stat,
}

impl std::fmt::Display for Convention {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Convention::Gf => "gf",
            Convention::Stat => "stat",
        })
    }
}

impl std::str::FromStr for Convention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gf" => Ok(Convention::Gf),
            "stat" => Ok(Convention::Stat),
            _ => Err(Error::Parse(format!(
                "unknown q-hit method {s:?}; expected gf or stat"
            ))),
        }
    }
}

/// `H_0, H_1, ...` tagged with the convention that produced them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QHitVector {
    pub convention: Convention,
    pub values: Vec<QPoly>,
}

impl QHitVector {
    pub fn get(&self, k: usize) -> QPoly {
        self.values.get(k).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> QPoly {
        self.values.iter().cloned().sum()
    }
}

/// `H^m_j(λ)` for `j = 0..=m`: the `t^j` coefficient of
/// `(Σ_k t^k ∏_i [a_i + k]) · (t;q)_{m+1}`, with `a` the area sequence.
pub fn qhit_square_gf(lambda: &BoxPartition) -> Result<QHitVector> {
    let a = area_sequence(lambda)?.0;
    let m = a.len();
    // a(λ) is an interval containing 0 or 1, so a factor [a_i + k] with
    // a_i + k < 0 always comes with another factor [0]; such terms vanish.
    let series: Vec<QPoly> = (0..=m as i64)
        .map(|k| {
            if a.iter().any(|&ai| ai + k <= 0) {
                QPoly::zero()
            } else {
                a.iter().map(|&ai| qint((ai + k) as usize)).product()
            }
        })
        .collect();
    let values = TruncSeries::from_coeffs(series, m)
        .mul(&qpochhammer(m, m))
        .into_coeffs();
    Ok(QHitVector {
        convention: Convention::Gf,
        values,
    })
}

/// `H^{m,n}_k(λ)` for `k = 0..=n`, `m >= n`: the square numbers of λ padded
/// into the `m x m` box, divided by `[m-n]!`.
pub fn qhit_rect(lambda: &BoxPartition) -> Result<QHitVector> {
    let (m, n) = (lambda.rows(), lambda.cols());
    if m < n {
        return Err(Error::TallBoxRequired { m, n });
    }
    let square = qhit_square_gf(&lambda.rebox(m, m)?)?;
    let d = qfact(m - n);
    let mut values = Vec::with_capacity(n + 1);
    for (k, h) in square.values.iter().enumerate() {
        let reduced = h.div_exact(&d).ok_or_else(|| {
            Error::Divisibility(format!(
                "H_{k} of {lambda} is {h}, not divisible by [{}]!",
                m - n
            ))
        })?;
        if k <= n {
            values.push(reduced);
        } else if !reduced.is_zero() {
            return Err(Error::Divisibility(format!(
                "H_{k} of {lambda} is nonzero beyond k = {n}"
            )));
        }
    }
    Ok(QHitVector {
        convention: Convention::Gf,
        values,
    })
}

/// A maximal nonattacking rook placement; cells are `(row, col)`, 1-based,
/// rows counted from the top, sorted by column then row.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RookPlacement {
    pub rooks: Vec<(usize, usize)>,
}

impl RookPlacement {
    /// Number of rooks inside the Ferrers board of λ.
    pub fn inside(&self, lambda: &BoxPartition) -> usize {
        self.rooks
            .iter()
            .filter(|&&(r, c)| in_board(lambda, r, c))
            .count()
    }
}

fn in_board(lambda: &BoxPartition, r: usize, c: usize) -> bool {
    c <= lambda.part(r)
}

/// All maximal placements on the `m x n` board (one rook per column when
/// `m >= n`, one per row otherwise), in lexicographic order.
fn all_placements(m: usize, n: usize) -> Vec<RookPlacement> {
    fn rec(
        slot: usize,
        slots: usize,
        range: usize,
        used: &mut Vec<bool>,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if slot == slots {
            out.push(cur.clone());
            return;
        }
        for x in 0..range {
            if !used[x] {
                used[x] = true;
                cur.push(x + 1);
                rec(slot + 1, slots, range, used, cur, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let (slots, range) = if m >= n { (n, m) } else { (m, n) };
    let mut maps = Vec::new();
    rec(
        0,
        slots,
        range,
        &mut vec![false; range],
        &mut Vec::new(),
        &mut maps,
    );
    let mut out: Vec<RookPlacement> = maps
        .into_iter()
        .map(|map| {
            let mut rooks: Vec<(usize, usize)> = map
                .iter()
                .enumerate()
                .map(|(i, &x)| if m >= n { (x, i + 1) } else { (i + 1, x) })
                .collect();
            rooks.sort_by_key(|&(r, c)| (c, r));
            RookPlacement { rooks }
        })
        .collect();
    out.sort();
    out
}

/// The placements of `R(m, n, λ, k)`: maximal, with exactly `k` rooks in λ.
pub fn enumerate_placements(lambda: &BoxPartition, k: usize) -> Vec<RookPlacement> {
    all_placements(lambda.rows(), lambda.cols())
        .into_iter()
        .filter(|p| p.inside(lambda) == k)
        .collect()
}

/// Number of unattacked cells. A rook attacks the cells below it in its
/// column and to its left in its row; a rook outside λ also attacks the
/// cells of λ to its right in its row.
pub fn rook_stat(lambda: &BoxPartition, p: &RookPlacement) -> usize {
    let (m, n) = (lambda.rows(), lambda.cols());
    let mut count = 0;
    for r in 1..=m {
        for c in 1..=n {
            if p.rooks.contains(&(r, c)) {
                continue;
            }
            let below = p.rooks.iter().any(|&(rr, rc)| rc == c && rr < r);
            let left = p.rooks.iter().any(|&(rr, rc)| rr == r && rc > c);
            let right_of_outside = in_board(lambda, r, c)
                && p.rooks
                    .iter()
                    .any(|&(rr, rc)| rr == r && rc < c && !in_board(lambda, rr, rc));
            if !below && !left && !right_of_outside {
                count += 1;
            }
        }
    }
    count
}

/// `Σ_{p ∈ R(m,n,λ,k)} q^{stat(p)}`.
pub fn qhit_rook_stat(lambda: &BoxPartition, k: usize) -> QPoly {
    enumerate_placements(lambda, k)
        .iter()
        .map(|p| QPoly::q_pow(rook_stat(lambda, p) as i64))
        .sum()
}

/// The full rook-statistic vector `k = 0..=min(m, n)`.
pub fn qhit_rook_stat_vector(lambda: &BoxPartition) -> QHitVector {
    let kmax = lambda.rows().min(lambda.cols());
    QHitVector {
        convention: Convention::Stat,
        values: (0..=kmax).map(|k| qhit_rook_stat(lambda, k)).collect(),
    }
}

/// Every partition in the `m x n` box, ordered by size and then reverse-lexicographically.
pub fn partitions_in_box(m: usize, n: usize) -> Vec<BoxPartition> {
    fn rec(m: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for p in (0..=max).rev() {
            cur.push(p);
            rec(m, p, cur, out);
            cur.pop();
        }
    }
    let mut raw = Vec::new();
    rec(m, n, &mut Vec::new(), &mut raw);
    let mut out: Vec<BoxPartition> = raw
        .iter()
        .map(|p| BoxPartition::new(p, m, n).unwrap())
        .collect();
    out.sort_by(|a, b| {
        a.size()
            .cmp(&b.size())
            .then_with(|| b.parts().cmp(a.parts()))
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qalg::qfalling;

    fn bp(parts: &[usize], m: usize, n: usize) -> BoxPartition {
        BoxPartition::new(parts, m, n).unwrap()
    }

    fn p(s: &str) -> QPoly {
        s.parse().unwrap()
    }

    #[test]
    fn square_gf_examples() {
        let h = qhit_square_gf(&bp(&[1, 1], 3, 3)).unwrap();
        assert_eq!(
            h.values,
            vec![
                p("1 + q"),
                p("q + 2*q^2 + q^3"),
                QPoly::zero(),
                QPoly::zero()
            ]
        );
        for m in 0..=4 {
            let h = qhit_square_gf(&BoxPartition::empty(m, m)).unwrap();
            assert_eq!(h.get(0), qfact(m));
            assert!(h.values[1..].iter().all(QPoly::is_zero));
        }
    }

    #[test]
    fn rect_examples() {
        let h = qhit_rect(&bp(&[1, 1, 0], 3, 2)).unwrap();
        assert_eq!(
            h.values,
            vec![p("1 + q"), p("q + 2*q^2 + q^3"), QPoly::zero()]
        );
        let h = qhit_rect(&BoxPartition::empty(5, 2)).unwrap();
        assert_eq!(h.values, vec![qfalling(5, 2), QPoly::zero(), QPoly::zero()]);
        let full = qhit_rect(&bp(&[2, 2, 2, 2], 4, 2)).unwrap();
        assert_eq!(
            full.values,
            vec![QPoly::zero(), QPoly::zero(), qfalling(4, 2)]
        );
        assert!(qhit_rect(&BoxPartition::empty(2, 3)).is_err());
    }

    #[test]
    fn rook_stat_matches_small_example() {
        let lam = bp(&[1, 1, 0], 3, 2);
        assert_eq!(qhit_rook_stat(&lam, 0), p("q + q^2"));
        assert_eq!(qhit_rook_stat(&lam, 1), p("1 + q + q^2 + q^3"));
        assert_eq!(qhit_rook_stat(&lam, 2), QPoly::zero());
        let total: usize = (0..=2).map(|k| enumerate_placements(&lam, k).len()).sum();
        assert_eq!(total, 6);
    }

    #[test]
    fn placement_counts() {
        assert_eq!(enumerate_placements(&BoxPartition::empty(2, 2), 0).len(), 2);
        assert!(enumerate_placements(&bp(&[1, 1], 2, 2), 2).is_empty());
        for (m, n) in [(3, 3), (4, 2), (2, 4), (5, 3)] {
            for lam in partitions_in_box(m, n) {
                let total: usize = (0..=m.min(n))
                    .map(|k| enumerate_placements(&lam, k).len())
                    .sum();
                let (a, b) = (m.max(n), m.min(n));
                assert_eq!(total, ((a - b + 1)..=a).product::<usize>());
            }
        }
    }

    #[test]
    fn square_totals_are_q_factorials() {
        for m in 0..=5 {
            for lam in partitions_in_box(m, m) {
                let h = qhit_square_gf(&lam).unwrap();
                assert_eq!(h.total(), qfact(m), "{lam}");
                assert!(h.values.iter().all(QPoly::has_nonneg_coeffs));
            }
        }
    }

    #[test]
    fn partitions_in_box_counts() {
        assert_eq!(partitions_in_box(3, 2).len(), 10);
        assert_eq!(partitions_in_box(4, 4).len(), 70);
        assert_eq!(partitions_in_box(0, 3).len(), 1);
    }
}
