//! Exhaustive identity sweeps with per-instance reports.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::chromatic::abelian::{abelian_factors, is_abelian_factor, Factor};
use crate::chromatic::checks;
use crate::chromatic::graph::{DyckGraph, DEFAULT_BOUND};
use crate::error::{Error, Result};
use crate::klyachko::expand_u_lambda;
use crate::lattice::{dyck_words, word_to_partition, words_up_to, BoxPartition, Letter, Word};
use crate::pathalg::{
    expand, expand_word, expand_word_with, expand_zigzag, signed_coeffs, top_chain, Basis, Policy,
};
use crate::qalg::{qfact, qint, QPoly, QRat};
use crate::qhit::{partitions_in_box, qhit_rect, qhit_rook_stat_vector, qhit_square_gf};

/// Outcome of one identity on one instance. Both sides are always present.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub identity: String,
    pub instance: String,
    pub pass: bool,
    pub left: String,
    pub right: String,
}

impl VerifyReport {
    pub fn new(
        identity: &str,
        instance: impl Into<String>,
        pass: bool,
        left: String,
        right: String,
    ) -> Self {
        Self {
            identity: identity.into(),
            instance: instance.into(),
            pass,
            left,
            right,
        }
    }

    pub fn compare<T: PartialEq + fmt::Display>(
        identity: &str,
        instance: impl Into<String>,
        left: &T,
        right: &T,
    ) -> Self {
        Self::new(
            identity,
            instance,
            left == right,
            left.to_string(),
            right.to_string(),
        )
    }

    pub fn compare_seq<T: PartialEq + fmt::Display>(
        identity: &str,
        instance: impl Into<String>,
        left: &[T],
        right: &[T],
    ) -> Self {
        Self::new(
            identity,
            instance,
            left == right,
            fmt_seq(left),
            fmt_seq(right),
        )
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} [{}]: {} == {}",
            self.identity, self.instance, self.left, self.right
        )
    }
}

fn fmt_seq<T: fmt::Display>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(", "))
}

/// The identity suites, in the order `--all` runs them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    Triangle,
    Cmp,
    Qhit,
    Discrepancy,
    Simple,
    Symmetry,
    Rho,
    SumClambda,
    Modular,
    GuayPaquet,
    AbelianTriple,
    InitialRun,
}

impl Identity {
    pub const ALL: [Identity; 12] = [
        Identity::Triangle,
        Identity::Cmp,
        Identity::Qhit,
        Identity::Discrepancy,
        Identity::Simple,
        Identity::Symmetry,
        Identity::Rho,
        Identity::SumClambda,
        Identity::Modular,
        Identity::GuayPaquet,
        Identity::AbelianTriple,
        Identity::InitialRun,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Triangle => "triangle",
            Identity::Cmp => "cmp",
            Identity::Qhit => "qhit",
            Identity::Discrepancy => "discrepancy",
            Identity::Simple => "simple",
            Identity::Symmetry => "symmetry",
            Identity::Rho => "rho",
            Identity::SumClambda => "sum-clambda",
            Identity::Modular => "modular",
            Identity::GuayPaquet => "guay-paquet",
            Identity::AbelianTriple => "abelian-triple",
            Identity::InitialRun => "initial-run",
        }
    }

    /// Default size bound, in the suite's own unit: word length `m + n` for
    /// `triangle` and `cmp`, box side for `qhit` and `simple`, number of
    /// vertices for the chromatic suites.
    pub fn default_max(self) -> usize {
        match self {
            Identity::Triangle | Identity::Cmp => 10,
            Identity::Qhit => 6,
            Identity::Discrepancy => 0,
            Identity::Simple => 8,
            Identity::Symmetry | Identity::AbelianTriple | Identity::InitialRun => 7,
            Identity::Rho | Identity::SumClambda | Identity::GuayPaquet => 6,
            Identity::Modular => 5,
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown identity {s:?}")))
    }
}

/// Runs one suite; reports follow instance enumeration order.
pub fn run(identity: Identity, max: Option<usize>) -> Result<Vec<VerifyReport>> {
    let max = max.unwrap_or(identity.default_max());
    let bound = DEFAULT_BOUND.max(max);
    match identity {
        Identity::Triangle => sweep(words_up_to(max), check_triangle),
        Identity::Cmp => sweep(words_up_to(max), check_cmp),
        Identity::Qhit => sweep(qhit_instances(max), |(m, lam)| check_qhit(*m, lam)),
        Identity::Discrepancy => Ok(vec![check_discrepancy()?]),
        Identity::Simple => sweep(simple_instances(max), |(n, lam)| check_simple(*n, lam)),
        Identity::Symmetry => sweep(graphs(max, false), |g| checks::verify_symmetry(g, bound)),
        Identity::Rho => sweep(graphs(max, false), |g| checks::verify_rho(g, bound)),
        Identity::SumClambda => sweep(graphs(max, false), |g| checks::verify_sum_clambda(g, bound)),
        Identity::Modular => sweep(modular_instances(max), |(w, p)| {
            checks::verify_modular_law(w, *p, bound)
        }),
        Identity::GuayPaquet => sweep(gp_instances(max), |(w, f)| {
            checks::verify_guay_paquet(w, *f, bound)
        }),
        Identity::AbelianTriple => sweep(graphs(max, true), |g| {
            checks::verify_abelian_triple(g, bound)
        }),
        Identity::InitialRun => sweep(graphs(max, true), |g| checks::verify_initial_run(g, bound)),
    }
}

fn sweep<T: Sync>(
    items: Vec<T>,
    f: impl Fn(&T) -> Result<VerifyReport> + Sync + Send,
) -> Result<Vec<VerifyReport>> {
    items.par_iter().map(f).collect()
}

fn graphs(max: usize, abelian_only: bool) -> Vec<DyckGraph> {
    (1..=max)
        .flat_map(dyck_words)
        .map(|w| DyckGraph::from_dyck_word(&w).expect("dyck_words yields Dyck words"))
        .filter(|g| !abelian_only || g.is_abelian())
        .collect()
}

/// Every `ene`/`nen` factor lying in an abelian subpath, Dyck words of semilength `<= max`.
pub fn modular_instances(max: usize) -> Vec<(Word, usize)> {
    use Letter::{E, N};
    let mut out = Vec::new();
    for w in (1..=max).flat_map(dyck_words) {
        for p in 0..w.len().saturating_sub(2) {
            let l = &w.letters()[p..p + 3];
            if (l == [E, N, E] || l == [N, E, N])
                && is_abelian_factor(&w, Factor { start: p, len: 3 })
            {
                out.push((w.clone(), p));
            }
        }
    }
    out
}

/// Every abelian factor with both letters, Dyck words of semilength `<= max`.
pub fn gp_instances(max: usize) -> Vec<(Word, Factor)> {
    (1..=max)
        .flat_map(dyck_words)
        .flat_map(|w| abelian_factors(&w).into_iter().map(move |f| (w.clone(), f)))
        .collect()
}

fn qhit_instances(max: usize) -> Vec<(usize, BoxPartition)> {
    let mut out = Vec::new();
    for m in 1..=max {
        for n in 0..=m {
            out.extend(partitions_in_box(m, n).into_iter().map(|l| (m, l)));
        }
    }
    out
}

/// `(n, λ)` with `ℓ(λ) <= λ_1` and `λ_1 + ℓ(λ) <= n - 1`, `λ` in the `(n - ℓ) x (n - ℓ)` box.
fn simple_instances(max: usize) -> Vec<(usize, BoxPartition)> {
    let mut out = Vec::new();
    for n in 1..=max {
        for lam in partitions_in_box(n, n) {
            let ell = lam.length();
            if ell <= lam.part(1) && lam.part(1) + ell < n {
                out.push((n, lam.rebox(n - ell, n - ell).expect("fits")));
            }
        }
    }
    out
}

/// Rectangular and zigzag expansions re-expanded into staircases agree with
/// the staircase expansion; for square grades the rectangular coefficients
/// are the interval coefficients of `u(λ)`.
pub fn check_triangle(w: &Word) -> Result<VerifyReport> {
    let (m, n) = w.grade();
    let st = expand(Basis::Staircase, w)?;
    let show = |e: &crate::pathalg::Expansion| fmt_seq(&e.coeffs);
    let rect = expand(Basis::Rectangular, w)?;
    let via_rect = rect.to_staircase();
    if via_rect != st {
        return Ok(VerifyReport::new(
            "triangle",
            format!("{w} rectangular"),
            false,
            show(&st),
            show(&via_rect),
        ));
    }
    let (zw, zst) = if m >= n {
        (w.clone(), st.clone())
    } else {
        (w.eta(), expand(Basis::Staircase, &w.eta())?)
    };
    let via_zig = expand_zigzag(&zw)?.to_staircase();
    if via_zig != zst {
        return Ok(VerifyReport::new(
            "triangle",
            format!("{zw} zigzag"),
            false,
            show(&zst),
            show(&via_zig),
        ));
    }
    if m == n {
        let kly = expand_u_lambda(&word_to_partition(w))?.coeffs;
        return Ok(VerifyReport::compare_seq(
            "triangle",
            format!("{w} klyachko"),
            &rect.coeffs,
            &kly,
        ));
    }
    Ok(VerifyReport::new(
        "triangle",
        w.to_string(),
        true,
        show(&st),
        show(&via_rect),
    ))
}

/// Signs and positivity of staircase coefficients, policy independence, and
/// the top coefficient as a product of q-integers.
pub fn check_cmp(w: &Word) -> Result<VerifyReport> {
    let (mw, c) = match signed_coeffs(w) {
        Ok(x) => x,
        Err(e) => {
            return Ok(VerifyReport::new(
                "cmp",
                w.to_string(),
                false,
                e.to_string(),
                "N[q]".into(),
            ))
        }
    };
    let right = expand_word_with(w, Policy::Rightmost);
    if right != *expand_word(w) {
        return Ok(VerifyReport::compare_seq(
            "cmp",
            format!("{w} policies"),
            &expand_word(w),
            &right,
        ));
    }
    let chain: QPoly = top_chain(w).into_iter().map(qint).product();
    Ok(VerifyReport::compare(
        "cmp",
        format!("{w} m_w={mw}"),
        &c[mw],
        &chain,
    ))
}

/// `Σ_j H_j = [m]!` and the Klyachko bridge in the square case; exact
/// divisibility by `[m-n]!` in the rectangular case.
pub fn check_qhit(m: usize, lam: &BoxPartition) -> Result<VerifyReport> {
    let inst = lam.to_string();
    if lam.cols() < m {
        return Ok(match qhit_rect(lam) {
            Ok(h) => VerifyReport::new("qhit", inst, true, fmt_seq(&h.values), "divisible".into()),
            Err(e) => VerifyReport::new("qhit", inst, false, e.to_string(), "divisible".into()),
        });
    }
    let h = qhit_square_gf(lam)?;
    if h.total() != qfact(m) || !h.values.iter().all(QPoly::is_nonneg_poly) {
        return Ok(VerifyReport::new(
            "qhit",
            inst,
            false,
            fmt_seq(&h.values),
            format!("sum {}", qfact(m)),
        ));
    }
    let kly: Vec<QRat> = expand_u_lambda(lam)?
        .coeffs
        .iter()
        .map(|c| c.mul_poly(&qfact(m)))
        .collect();
    let gf: Vec<QRat> = h.values.iter().cloned().map(QRat::from).collect();
    Ok(VerifyReport::compare_seq("qhit", inst, &gf, &kly))
}

/// `H_ℓ^{n-ℓ}(λ) = q^ℓ [n-2ℓ] H_ℓ^{n-ℓ-1}(λ)`.
pub fn check_simple(n: usize, lam: &BoxPartition) -> Result<VerifyReport> {
    let ell = lam.length();
    let left = qhit_square_gf(lam)?.get(ell);
    let small = lam.rebox(n - ell - 1, n - ell - 1)?;
    let right = (qint(n - 2 * ell) * qhit_square_gf(&small)?.get(ell)).shift(ell as i64);
    Ok(VerifyReport::compare(
        "simple",
        format!("n={n} λ=({})", lam.shape_string()),
        &left,
        &right,
    ))
}

/// GF and rook-statistic conventions on `λ = (1,1,0)` in `3 x 2` differ, and
/// only the GF numbers reproduce the rectangular expansion of `nenne`.
pub fn check_discrepancy() -> Result<VerifyReport> {
    let lam = BoxPartition::new(&[1, 1, 0], 3, 2)?;
    let gf = qhit_rect(&lam)?;
    let stat = qhit_rook_stat_vector(&lam);
    let w: Word = "nenne".parse()?;
    let oracle = crate::pathalg::expand_rectangular_oracle(&w)?.coeffs;
    let d = crate::qalg::qfalling(3, 2);
    let as_coeffs = |v: &[QPoly]| -> Result<Vec<QRat>> {
        v.iter().map(|h| QRat::new(h.clone(), d.clone())).collect()
    };
    let gf_ok = as_coeffs(&gf.values)? == oracle;
    let stat_ok = as_coeffs(&stat.values)? == oracle;
    let pass = gf.values != stat.values && gf_ok && !stat_ok;
    Ok(VerifyReport::new(
        "discrepancy",
        format!("{lam} gf_matches_nenne={gf_ok} stat_matches_nenne={stat_ok}"),
        pass,
        format!("gf {}", fmt_seq(&gf.values)),
        format!("stat {}", fmt_seq(&stat.values)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_names_round_trip() {
        for i in Identity::ALL {
            assert_eq!(i.name().parse::<Identity>().unwrap(), i);
        }
        assert!("nope".parse::<Identity>().is_err());
    }

    #[test]
    fn small_sweeps_pass() {
        for i in Identity::ALL {
            let reports = run(i, Some(4)).unwrap();
            assert!(!reports.is_empty(), "{i}");
            for r in reports {
                assert!(r.pass, "{r}");
            }
        }
    }

    #[test]
    fn discrepancy_report() {
        let r = check_discrepancy().unwrap();
        assert!(r.pass, "{r}");
        assert!(r.instance.contains("gf_matches_nenne=true"));
    }
}
