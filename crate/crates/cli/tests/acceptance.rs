//! Acceptance criteria. Prints one PASS/FAIL line per criterion (and an
//! indented line per sub-check), then exits nonzero if any criterion fails
//! that is not listed in `KNOWN_RED`.
//!
//! Every comparison is exact equality in Z[q] or Q(q).

use std::process::Command;
use std::time::{Duration, Instant};

use qpaths::chromatic::DyckGraph;
use qpaths::klyachko::KlyMonomial;
use qpaths::lattice::{
    area_sequence, b_sequence, rectangular_word, word_to_partition, BoxPartition, Word,
};
use qpaths::pathalg::{expand, signed_coeffs, top_chain, Basis, PathElem};
use qpaths::qalg::{qfalling, qint, QPoly, QRat};
use qpaths::qhit::{enumerate_placements, qhit_rect, qhit_rook_stat_vector, rook_stat};
use qpaths::verify::{run, Identity};

/// Coefficient comparisons allow no slack: values are exact.
const TOLERANCE: u32 = 0;

/// Criteria expected to fail, with the reason recorded in the decisions ledger.
const KNOWN_RED: &[(u32, &str)] = &[(
    1,
    "the published δ₂ coefficient of NNEEENEN and the published wt-factorization of N²E⁴N⁶EN²EN disagree with the algebra",
)];

struct Check {
    name: String,
    pass: bool,
    detail: String,
}

fn check(name: &str, pass: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        pass,
        detail: detail.into(),
    }
}

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn p(s: &str) -> QPoly {
    s.parse().unwrap()
}

fn r(x: QPoly) -> QRat {
    x.into()
}

fn shape(parts: &[usize], m: usize, n: usize) -> BoxPartition {
    BoxPartition::new(parts, m, n).unwrap()
}

/// All reports of the suites pass, and each suite is nonempty.
fn suites(list: &[(Identity, usize)]) -> Vec<Check> {
    list.iter()
        .map(|&(id, max)| match run(id, Some(max)) {
            Ok(reports) => {
                let bad: Vec<_> = reports.iter().filter(|r| !r.pass).collect();
                let detail = match bad.first() {
                    Some(f) => format!("{}/{} fail; first: {f}", bad.len(), reports.len()),
                    None => format!("{} instances, max {max}", reports.len()),
                };
                check(id.name(), !reports.is_empty() && bad.is_empty(), detail)
            }
            Err(e) => check(id.name(), false, format!("error: {e}")),
        })
        .collect()
}

/// `a·x + b·y` for path-algebra elements of the same grade.
fn lin(a: QRat, x: &PathElem, b: QRat, y: &PathElem) -> PathElem {
    x.scale(&a).checked_add(&y.scale(&b)).unwrap()
}

fn criterion_1() -> Vec<Check> {
    let mut out = Vec::new();

    let lam = shape(&[5, 5, 3, 3, 3, 0], 6, 6);
    let area = area_sequence(&lam).unwrap().0;
    out.push(check(
        "area sequence of (5,5,3,3,3,0)",
        area == vec![1, -1, 0, 1, 0, 1],
        format!("{area:?}"),
    ));
    let u = KlyMonomial::from_partition(&lam).unwrap();
    let want = KlyMonomial::from_indices([-1, 0, 0, 1, 1, 1]);
    out.push(check("u(λ) = u_-1 u_0^2 u_1^3", u == want, u.to_string()));

    let lam = shape(&[1, 1, 0], 3, 2);
    let stat = qhit_rook_stat_vector(&lam).values;
    let want = vec![p("q + q^2"), p("1 + q + q^2 + q^3"), QPoly::zero()];
    out.push(check(
        "rook-stat q-hit of (1,1,0) in 3x2",
        stat == want,
        format!("{stat:?}"),
    ));
    let placed: usize = (0..=2).map(|k| enumerate_placements(&lam, k).len()).sum();
    out.push(check(
        "maximal placements on (1,1,0) in 3x2",
        placed == 6,
        format!("{placed} maximal placements"),
    ));
    let big = shape(&[3, 3, 1, 0], 4, 5);
    let six = enumerate_placements(&big, 2)
        .iter()
        .filter(|pl| rook_stat(&big, pl) == 6)
        .count();
    out.push(check(
        "k=2 placement on (3,3,1,0) in 4x5 with stat 6",
        six > 0,
        format!("{six} placements with stat 6"),
    ));

    let (_, coeffs) = signed_coeffs(&w("nneeenen")).unwrap();
    let printed = -p("2*q + 3*q^2 + q^3");
    let got = expand(Basis::Staircase, &w("nneeenen")).unwrap().coeffs[2].clone();
    out.push(check(
        "δ₂ coefficient of NNEEENEN = -q(1+q)(2+q)",
        got == r(printed.clone()),
        format!("computed {got}, printed {printed}; signed {}", coeffs[2]),
    ));

    // Representative word for the drawn top-coefficient example.
    let fig5 = w("nnnnneeneeeneneneenee");
    let (mw, c) = signed_coeffs(&fig5).unwrap();
    let display: QPoly = [3, 2, 3, 2, 3, 3, 4, 5, 6, 5]
        .iter()
        .map(|&j| qint(j))
        .product();
    let chain: QPoly = top_chain(&fig5).iter().map(|&j| qint(j)).product();
    out.push(check(
        "top coefficient of nnnnneeneeeneneneenee = [3][2][3][2][3][3][4][5][6][5]",
        c[mw] == display && chain == display,
        format!("m_w = {mw}, chain {:?}", top_chain(&fig5)),
    ));

    let fig6 = w("nneeeennnnnnennen");
    let b = b_sequence(&word_to_partition(&fig6)).unwrap().0;
    out.push(check(
        "b-sequence of N²E⁴N⁶EN²EN = (2,1,-1,0,4,5)",
        b == vec![2, 1, -1, 0, 4, 5],
        format!("{b:?}"),
    ));

    let s = PathElem::from_word(&w("en"));
    let t = PathElem::from_word(&w("ne"));
    let q = |e: i64| r(QPoly::q_pow(e));
    let neg = |x: QRat| -x;
    let factors = [
        lin(r(qint(2)), &s, neg(q(1)), &t),
        s.clone(),
        lin(q(-1) * r(qint(2)), &t, neg(q(-1)), &s),
        t.clone(),
        lin(r(qint(4)), &s, neg(q(1) * r(qint(3))), &t),
        lin(r(qint(5)), &s, neg(q(1) * r(qint(4))), &t),
        PathElem::from_word(&Word::power(qpaths::lattice::Letter::N, 5)),
    ];
    let displayed = factors
        .iter()
        .skip(1)
        .fold(factors[0].clone(), |acc, f| acc.multiply(f));
    let literal = displayed.equal(&PathElem::from_word(&fig6));
    let zz = expand(Basis::Zigzag, &fig6).unwrap();
    let by_definition = zz.to_elem().equal(&PathElem::from_word(&fig6));
    // the same coefficients with the roles of s and t exchanged
    let mut exchanged = PathElem::zero((11, 6));
    for (k, c) in zz.coeffs.iter().enumerate() {
        exchanged.add_term(&Basis::Zigzag.word(6 - k, 11, 6).unwrap(), c);
    }
    out.push(check(
        "displayed wt-factorization of N²E⁴N⁶EN²EN equals w",
        literal,
        format!(
            "definition product equals w: {by_definition}; display equals w with s and t exchanged: {}",
            displayed.equal(&exchanged)
        ),
    ));
    out
}

fn criterion_5() -> Vec<Check> {
    let mut out = Vec::new();
    let lam = shape(&[1, 1, 0], 3, 2);
    let gf = qhit_rect(&lam).unwrap().values;
    let stat = qhit_rook_stat_vector(&lam).values;
    let gf_want = vec![p("1 + q"), p("q + 2*q^2 + q^3"), QPoly::zero()];
    let stat_want = vec![p("q + q^2"), p("1 + q + q^2 + q^3"), QPoly::zero()];
    out.push(check(
        "GF convention (1+q, q(1+q)^2, 0)",
        gf == gf_want,
        format!("{gf:?}"),
    ));
    out.push(check(
        "stat convention (q+q^2, 1+q+q^2+q^3, 0)",
        stat == stat_want,
        format!("{stat:?}"),
    ));
    out.push(check("conventions flagged unequal", gf != stat, ""));

    // Oracle: a candidate coefficient vector is right iff Σ c_k R_k equals
    // nenne after staircase normalisation, independent of the rectangular code.
    let nenne = PathElem::from_word(&w("nenne"));
    let d = qfalling(3, 2);
    let reproduces = |h: &[QPoly]| -> bool {
        let mut x = PathElem::zero((3, 2));
        for (k, c) in h.iter().enumerate() {
            x.add_term(
                &rectangular_word(k, 3, 2).unwrap(),
                &QRat::new(c.clone(), d.clone()).unwrap(),
            );
        }
        x.equal(&nenne)
    };
    let third = qint(3);
    let derived = vec![
        QRat::new(QPoly::one(), third.clone()).unwrap(),
        QRat::new(p("q + q^2"), third).unwrap(),
        QRat::zero(),
    ];
    let computed = expand(Basis::Rectangular, &w("nenne")).unwrap().coeffs;
    out.push(check(
        "NENNE rectangular coefficients 1/[3], q(1+q)/[3], 0",
        computed == derived,
        format!("{computed:?}"),
    ));
    out.push(check(
        "only GF satisfies the oracle triangle",
        reproduces(&gf) && !reproduces(&stat),
        "",
    ));
    out.extend(suites(&[(Identity::Discrepancy, 0)]));
    out
}

fn criterion_7() -> Vec<Check> {
    let bin = env!("CARGO_BIN_EXE_qpaths");
    let go = || {
        Command::new(bin)
            .args(["verify", "--all"])
            .output()
            .expect("spawn qpaths")
    };
    let (a, b) = (go(), go());
    vec![
        check(
            "byte-identical stdout",
            a.stdout == b.stdout && !a.stdout.is_empty(),
            format!("{} bytes", a.stdout.len()),
        ),
        check("byte-identical stderr", a.stderr == b.stderr, ""),
        check(
            "exit code 0",
            a.status.success() && b.status.success(),
            format!("{:?} {:?}", a.status, b.status),
        ),
    ]
}

fn main() {
    // Spot check that the chromatic machinery links in the acceptance build.
    assert_eq!(
        DyckGraph::from_dyck_word(&w("nnenee")).unwrap().num_edges(),
        2
    );

    type Crit = (u32, &'static str, Duration, fn() -> Vec<Check>);
    let criteria: [Crit; 7] = [
        (1, "reference examples", Duration::from_secs(1), criterion_1),
        (2, "oracle triangle", Duration::from_secs(120), || {
            suites(&[(Identity::Triangle, 10)])
        }),
        (3, "staircase sign theorem", Duration::from_secs(120), || {
            suites(&[(Identity::Cmp, 10)])
        }),
        (4, "q-hit consistency", Duration::from_secs(60), || {
            suites(&[(Identity::Qhit, 6), (Identity::Simple, 8)])
        }),
        (5, "known discrepancy", Duration::from_secs(1), criterion_5),
        (6, "chromatic suite", Duration::from_secs(600), || {
            suites(&[
                (Identity::Symmetry, 6),
                (Identity::Rho, 6),
                (Identity::Modular, 5),
                (Identity::GuayPaquet, 6),
                (Identity::SumClambda, 6),
                (Identity::AbelianTriple, 7),
                (Identity::InitialRun, 7),
            ])
        }),
        (7, "determinism", Duration::from_secs(600), criterion_7),
    ];

    println!("tolerance: {TOLERANCE} (exact equality)");
    let mut unexpected = Vec::new();
    for (id, name, target, f) in criteria {
        let start = Instant::now();
        let checks = f();
        let elapsed = start.elapsed();
        let in_time = elapsed <= target;
        let pass = in_time && checks.iter().all(|c| c.pass);
        let status = if pass { "PASS" } else { "FAIL" };
        println!("{status} criterion {id}: {name} ({elapsed:.2?}, target {target:?})");
        for c in &checks {
            let s = if c.pass { "ok  " } else { "FAIL" };
            println!(
                "    {s} {}{}",
                c.name,
                if c.detail.is_empty() {
                    String::new()
                } else {
                    format!(": {}", c.detail)
                }
            );
        }
        if !in_time {
            println!("    FAIL over time target");
        }
        match (pass, KNOWN_RED.iter().find(|(k, _)| *k == id)) {
            (false, Some((_, why))) => println!("    known red: {why}"),
            (false, None) => unexpected.push(format!("criterion {id} failed")),
            (true, Some(_)) => {
                unexpected.push(format!("criterion {id} passes but is listed as known red"))
            }
            (true, None) => {}
        }
    }
    if !unexpected.is_empty() {
        eprintln!("{}", unexpected.join("\n"));
        std::process::exit(1);
    }
}
