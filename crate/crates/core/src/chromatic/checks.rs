//! Per-instance checks of the chromatic identities.

use super::abelian::{
    abelian_expansions, abelian_shape, initial_run_closed_form, is_abelian_factor,
    orientations_with_initial, orientations_with_sources, x_elementary, AscentSeq, Factor,
};
use super::graph::{csf, DyckGraph};
use super::qsym::SymE;
use crate::error::{Error, Result};
use crate::lattice::{Letter, Word};
use crate::pathalg::{expand, Basis};
use crate::qalg::{QPoly, QRat};
use crate::verify::VerifyReport;

fn x_of(w: &Word, bound: usize) -> Result<SymE> {
    Ok((*x_elementary(&DyckGraph::from_dyck_word(w)?, bound)?).clone())
}

fn qrat(p: QPoly) -> QRat {
    p.into()
}

/// `(1+q) X_{U ene W} = q X_{U een W} + X_{U nee W}`, or the `nen` variant,
/// for the three letters at `pos`.
pub fn verify_modular_law(w: &Word, pos: usize, bound: usize) -> Result<VerifyReport> {
    use Letter::{E, N};
    let l = w.letters();
    if pos + 3 > l.len() {
        return Err(Error::OutOfRange {
            index: pos,
            max: l.len().saturating_sub(3),
        });
    }
    let (swapped, folded): ([Letter; 3], [Letter; 3]) = match l[pos..pos + 3] {
        [E, N, E] => ([E, E, N], [N, E, E]),
        [N, E, N] => ([E, N, N], [N, N, E]),
        _ => {
            return Err(Error::Invalid(format!(
                "no ene or nen factor at {pos} in {w}"
            )))
        }
    };
    if !is_abelian_factor(w, Factor { start: pos, len: 3 }) {
        return Err(Error::NotAbelian(format!("factor at {pos} of {w}")));
    }
    let one_plus_q = qrat("1 + q".parse().expect("literal"));
    let left = x_of(w, bound)?.scale(&one_plus_q);
    let right = x_of(&w.splice(pos, 3, &swapped), bound)?
        .scale(&qrat(QPoly::q_pow(1)))
        .add(&x_of(&w.splice(pos, 3, &folded), bound)?);
    Ok(VerifyReport::compare(
        "modular",
        format!("{w} at {pos}"),
        &left,
        &right,
    ))
}

/// `X_{UVW} = Σ_k c_k X_{U b_k W}` with `c_k` the rectangular coefficients of `V`.
pub fn verify_guay_paquet(w: &Word, f: Factor, bound: usize) -> Result<VerifyReport> {
    if !is_abelian_factor(w, f) {
        return Err(Error::NotAbelian(format!(
            "factor {}..{} of {w}",
            f.start,
            f.start + f.len
        )));
    }
    let v = w.slice(f.start, f.start + f.len);
    let (m, n) = v.grade();
    let exp = expand(Basis::Rectangular, &v)?;
    let left = x_of(w, bound)?;
    let mut right = SymE::zero(w.n());
    for (k, c) in exp.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let b = Basis::Rectangular.word(k, m, n)?;
        right = right.add(&x_of(&w.splice(f.start, f.len, b.letters()), bound)?.scale(c));
    }
    Ok(VerifyReport::compare(
        "guay-paquet",
        format!("{w} V={v}@{}", f.start),
        &left,
        &right,
    ))
}

/// `Σ_{ℓ(λ)=k} c_λ` against ascent-weighted orientations with `k` sources, all `k`.
pub fn verify_sum_clambda(g: &DyckGraph, bound: usize) -> Result<VerifyReport> {
    let x = x_elementary(g, bound)?;
    let left: Vec<QRat> = (1..=g.n()).map(|k| x.length_sum(k)).collect();
    let right = (1..=g.n())
        .map(|k| Ok(qrat(orientations_with_sources(g, k, bound)?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport::compare_seq(
        "sum-clambda",
        g.to_dyck_word().to_string(),
        &left,
        &right,
    ))
}

/// Orientations with `initial(A) = j` against the closed form, every `j`.
pub fn verify_initial_run(g: &DyckGraph, bound: usize) -> Result<VerifyReport> {
    abelian_shape(g)?;
    let js = 0..=g.n() / 2;
    let left = js
        .clone()
        .map(|j| orientations_with_initial(g, j, bound))
        .collect::<Result<Vec<_>>>()?;
    let right = js
        .map(|j| initial_run_closed_form(g, j))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport::compare_seq(
        "initial-run",
        g.to_dyck_word().to_string(),
        &left,
        &right,
    ))
}

/// Harada–Precup (both ascent sequences), q-Stanley and Abreu–Nigro against
/// the direct computation; also at most two parts and e-positivity.
pub fn verify_abelian_triple(g: &DyckGraph, bound: usize) -> Result<VerifyReport> {
    let x = x_elementary(g, bound)?;
    let instance = g.to_dyck_word().to_string();
    let mut candidates = abelian_expansions(g, AscentSeq::Forward, bound)?.to_vec();
    candidates.push(abelian_expansions(g, AscentSeq::Backward, bound)?[0].clone());
    for (name, e) in [
        "harada-precup",
        "qstanley",
        "abreu-nigro",
        "harada-precup-backward",
    ]
    .iter()
    .zip(&candidates)
    {
        if *e != *x {
            return Ok(VerifyReport::compare(
                "abelian-triple",
                format!("{instance} {name}"),
                &*x,
                e,
            ));
        }
    }
    let ok = x.terms.keys().all(|l| l.len() <= 2) && x.is_e_positive();
    Ok(VerifyReport::new(
        "abelian-triple",
        instance,
        ok,
        x.to_string(),
        candidates[2].to_string(),
    ))
}

/// Symmetry of `X_G` and e-positivity of its elementary expansion.
pub fn verify_symmetry(g: &DyckGraph, bound: usize) -> Result<VerifyReport> {
    let x = csf(g, bound)?;
    let instance = g.to_dyck_word().to_string();
    Ok(match x.check_symmetric() {
        Err(Error::Asymmetric { left, right }) => VerifyReport::new(
            "symmetry",
            instance,
            false,
            format!("M{left:?}: {}", x.coeff(&left)),
            format!("M{right:?}: {}", x.coeff(&right)),
        ),
        Err(e) => return Err(e),
        Ok(()) => {
            let e = super::qsym::to_e_basis(&x)?;
            VerifyReport::new(
                "symmetry",
                instance,
                e.is_e_positive(),
                e.to_string(),
                "e-positive".into(),
            )
        }
    })
}

/// `q^{|E|} X_G(q^{-1}) = ρ(X_G)`.
pub fn verify_rho(g: &DyckGraph, bound: usize) -> Result<VerifyReport> {
    let x = csf(g, bound)?;
    let left = x.invert_q_shift(g.num_edges() as i64);
    let right = x.rho();
    Ok(VerifyReport::compare(
        "rho",
        g.to_dyck_word().to_string(),
        &left,
        &right,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::graph::DEFAULT_BOUND;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn modular_law_smallest_instances() {
        // "nen" at 2 starts at (0, 2) and has one E: abelian
        assert!(
            verify_modular_law(&w("nnneneee"), 2, DEFAULT_BOUND)
                .unwrap()
                .pass
        );
        // "ene" at 3 starts at (1, 3) and has two E
        assert!(
            verify_modular_law(&w("nnneneee"), 3, DEFAULT_BOUND)
                .unwrap()
                .pass
        );
        assert!(verify_modular_law(&w("nenene"), 1, DEFAULT_BOUND).is_err());
        assert!(verify_modular_law(&w("nnneee"), 0, DEFAULT_BOUND).is_err());
    }

    #[test]
    fn guay_paquet_rectangular_factor_is_trivial() {
        let r = verify_guay_paquet(&w("nnnnneeeee"), Factor { start: 2, len: 5 }, DEFAULT_BOUND)
            .unwrap();
        assert!(r.pass);
    }
}
