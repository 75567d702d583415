use qpaths::klyachko::IntervalExpansion;
use qpaths::pathalg::{Basis, Expansion};
use qpaths::qalg::{qint, QPoly, QRat};
use qpaths::qhit::{Convention, QHitVector};
use qpaths::verify::VerifyReport;

fn qpaths(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("qpaths").chain(args.iter().copied());
    let code = qpaths_cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn poly(s: &str) -> QPoly {
    s.parse().unwrap()
}

#[test]
fn expand_rectangular_json() {
    let (code, out, _) = qpaths(&[
        "--format",
        "json",
        "expand",
        "--basis",
        "rectangular",
        "--word",
        "nenne",
    ]);
    assert_eq!(code, 0);
    let e: Expansion = serde_json::from_str(&out).unwrap();
    assert_eq!(e.grade, (3, 2));
    assert_eq!(e.basis, Basis::Rectangular);
    let third = qint(3);
    let want = vec![
        QRat::new(QPoly::one(), third.clone()).unwrap(),
        QRat::new(poly("q + q^2"), third).unwrap(),
        QRat::zero(),
    ];
    assert_eq!(e.coeffs, want);
}

#[test]
fn expand_round_trips_for_every_basis() {
    for basis in ["staircase", "rectangular", "zigzag"] {
        for word in ["nnenee", "eennen", "nenen", "ne"] {
            let (code, out, _) = qpaths(&[
                "--format", "json", "expand", "--basis", basis, "--word", word,
            ]);
            assert_eq!(code, 0, "{basis} {word}");
            let e: Expansion = serde_json::from_str(&out).unwrap();
            let direct =
                qpaths::pathalg::expand(basis.parse().unwrap(), &word.parse().unwrap()).unwrap();
            assert_eq!(e, direct);
        }
    }
}

#[test]
fn evaluation_at_rational_q() {
    // 1/[3] and (q+q^2)/[3] at q = 2
    let (code, out, _) = qpaths(&[
        "--format",
        "json",
        "expand",
        "--basis",
        "rectangular",
        "--word",
        "nenne",
        "--q",
        "2",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["evaluated"], serde_json::json!(["1/7", "6/7", "0"]));
}

#[test]
fn qhit_stat_convention() {
    let (code, out, _) = qpaths(&[
        "--format", "json", "qhit", "--box", "3x2", "--shape", "1,1,0", "--method", "stat",
    ]);
    assert_eq!(code, 0);
    let h: QHitVector = serde_json::from_str(&out).unwrap();
    assert_eq!(h.convention, Convention::Stat);
    assert_eq!(
        h.values,
        vec![poly("q + q^2"), poly("1 + q + q^2 + q^3"), QPoly::zero()]
    );
}

#[test]
fn qhit_defaults_to_gf() {
    let (code, out, _) = qpaths(&[
        "--format", "json", "qhit", "--box", "3x2", "--shape", "1,1,0",
    ]);
    assert_eq!(code, 0);
    let h: QHitVector = serde_json::from_str(&out).unwrap();
    assert_eq!(h.convention, Convention::Gf);
    assert_eq!(
        h.values,
        vec![poly("1 + q"), poly("q + 2*q^2 + q^3"), QPoly::zero()]
    );
}

#[test]
fn klyachko_expand_round_trips() {
    let (code, out, _) = qpaths(&[
        "--format",
        "json",
        "klyachko-expand",
        "--shape",
        "2,1",
        "--box",
        "3x3",
    ]);
    assert_eq!(code, 0);
    let e: IntervalExpansion = serde_json::from_str(&out).unwrap();
    let lam = qpaths::lattice::BoxPartition::new(&[2, 1], 3, 3).unwrap();
    assert_eq!(e, qpaths::klyachko::expand_u_lambda(&lam).unwrap());
    let (code, _, err) = qpaths(&["klyachko-expand", "--shape", "1", "--box", "3x2"]);
    assert_ne!(code, 0);
    assert!(!err.is_empty());
}

#[test]
fn remixed_text() {
    let (code, out, _) = qpaths(&["remixed", "--alpha", "2,1"]);
    assert_eq!(code, 0);
    assert!(out.contains("A[0] = 1 + q"));
    let (code, _, _) = qpaths(&["remixed", "--alpha", "2,1", "--m", "4"]);
    assert_ne!(code, 0);
}

#[test]
fn csf_of_path_graph() {
    let (code, out, _) = qpaths(&["csf", "--word", "nnenee", "--basis", "e"]);
    assert_eq!(code, 0);
    assert!(out.contains("e[3]: 1 + q + q^2"));
    assert!(out.contains("e[2,1]: q"));
    let (code, _, _) = qpaths(&["csf", "--word", "nnenee", "--basis", "x"]);
    assert_ne!(code, 0);
}

#[test]
fn orient_lists_and_aggregates() {
    let (code, out, _) = qpaths(&["--format", "json", "orient", "--word", "nnenee"]);
    assert_eq!(code, 0);
    let all: Vec<qpaths::chromatic::Orientation> = serde_json::from_str(&out).unwrap();
    assert_eq!(all.len(), 4);
    let (code, out, _) = qpaths(&["orient", "--word", "nnenee", "--stats"]);
    assert_eq!(code, 0);
    assert!(out.contains("sources = 2: q"));
}

#[test]
fn verify_modular_passes() {
    let (code, out, err) = qpaths(&["verify", "modular", "--max", "5"]);
    assert_eq!(code, 0, "{out}{err}");
    assert!(out.starts_with("PASS modular"));
}

#[test]
fn verify_json_reports_parse() {
    let (code, out, _) = qpaths(&["--format", "json", "verify", "rho", "--max", "4"]);
    assert_eq!(code, 0);
    let reports: Vec<VerifyReport> = serde_json::from_str(&out).unwrap();
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r.pass && r.identity == "rho"));
}

#[test]
fn usage_errors_are_nonzero() {
    for args in [
        &["bogus"][..],
        &["verify"],
        &["verify", "nonsense"],
        &["expand", "--word", "nxe"],
        &["qhit", "--box", "3", "--shape", "1"],
        &["csf", "--word", "en"],
    ] {
        let (code, _, err) = qpaths(args);
        assert_ne!(code, 0, "{args:?}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["--format", "json", "verify", "abelian-triple", "--max", "5"];
    assert_eq!(qpaths(&args), qpaths(&args));
}
