//! Command-line front end; `run` is the whole program minus process exit.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use qpaths::chromatic::abelian::{orientations_with_initial, orientations_with_sources};
use qpaths::chromatic::{acyclic_orientations, csf, qsym, DyckGraph, DEFAULT_BOUND};
use qpaths::klyachko::{expand_u_lambda, remixed_connected};
use qpaths::lattice::{parse_box, parse_shape, BoxPartition, Word};
use qpaths::pathalg::{expand, Basis};
use qpaths::qalg::{QPoly, QRat};
use qpaths::qhit::{qhit_rect, qhit_rook_stat_vector, Convention};
use qpaths::verify::{self, Identity, VerifyReport};
use qpaths::{Error, Result};

#[derive(Parser, Debug)]
#[command(
    name = "qpaths",
    version,
    about = "Exact path-algebra, q-hit and chromatic computations"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand a word in the staircase, rectangular or zigzag basis.
    Expand {
        #[arg(long, default_value = "staircase")]
        basis: Basis,
        #[arg(long)]
        word: Word,
        #[command(flatten)]
        eval: Eval,
    },
    /// q-hit numbers of a shape in a box.
    Qhit {
        #[arg(long = "box")]
        board: String,
        #[arg(long, default_value = "")]
        shape: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value = "gf")]
        method: Convention,
        #[command(flatten)]
        eval: Eval,
    },
    /// Connected remixed Eulerian numbers of a strong composition.
    Remixed {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Interval expansion of u(λ) for a shape in a square box.
    KlyachkoExpand {
        #[arg(long, default_value = "")]
        shape: String,
        #[arg(long = "box")]
        board: String,
    },
    /// Chromatic quasisymmetric function of the Dyck graph of a word.
    Csf {
        #[arg(long)]
        word: Word,
        #[arg(long, default_value = "M")]
        basis: String,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
        #[command(flatten)]
        eval: Eval,
    },
    /// Acyclic orientations of the Dyck graph of a word.
    Orient {
        #[arg(long)]
        word: Word,
        /// Aggregate by number of sources and by initial run instead of listing.
        #[arg(long)]
        stats: bool,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
    },
    /// Run identity suites; exit status 0 iff every instance passes.
    Verify {
        identity: Option<Identity>,
        #[arg(long, conflicts_with = "identity")]
        all: bool,
        /// Size bound in the suite's own unit (word length, box side or vertex count).
        #[arg(long)]
        max: Option<usize>,
    },
}

#[derive(Args, Debug)]
struct Eval {
    /// Evaluate at a rational value of q, e.g. 2 or 3/2.
    #[arg(long)]
    q: Option<BigRational>,
}

fn usage(msg: String) -> Error {
    Error::Invalid(msg)
}

/// Parses `args` (including the program name) and executes the command.
/// Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{e}");
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    let s = serde_json::to_string_pretty(value).map_err(|e| Error::Invalid(e.to_string()))?;
    writeln!(out, "{s}").map_err(|e| Error::Invalid(e.to_string()))
}

fn line(out: &mut dyn Write, s: impl AsRef<str>) -> Result<()> {
    writeln!(out, "{}", s.as_ref()).map_err(|e| Error::Invalid(e.to_string()))
}

fn eval_rat(c: &QRat, q: &BigRational) -> Result<String> {
    Ok(c.eval(q)?.to_string())
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let json = cli.format == Format::Json;
    match &cli.command {
        Command::Expand { basis, word, eval } => {
            let e = expand(*basis, word)?;
            let (m, n) = e.grade;
            if json {
                let mut v = serde_json::to_value(&e).map_err(|x| Error::Invalid(x.to_string()))?;
                if let Some(q) = &eval.q {
                    let vals = e
                        .coeffs
                        .iter()
                        .map(|c| eval_rat(c, q))
                        .collect::<Result<Vec<_>>>()?;
                    v["q"] = json!(q.to_string());
                    v["evaluated"] = json!(vals);
                }
                emit(out, &v)?;
            } else {
                line(out, format!("{word} in the {basis} basis of grade {m}x{n}"))?;
                for (k, c) in e.coeffs.iter().enumerate() {
                    let b = basis.word(k, m, n)?;
                    match &eval.q {
                        Some(q) => line(out, format!("  [{k}] {b}: {}", eval_rat(c, q)?))?,
                        None => line(out, format!("  [{k}] {b}: {c}"))?,
                    }
                }
            }
        }
        Command::Qhit {
            board,
            shape,
            k,
            method,
            eval,
        } => {
            let (m, n) = parse_box(board)?;
            let lam = BoxPartition::new(&parse_shape(shape)?, m, n)?;
            let h = match method {
                Convention::Gf => {
                    if m < n {
                        return Err(usage(format!(
                            "the gf convention needs a tall box, got {m}x{n}"
                        )));
                    }
                    qhit_rect(&lam)?
                }
                Convention::Stat => qhit_rook_stat_vector(&lam),
            };
            let ks: Vec<usize> = match k {
                Some(k) if *k < h.values.len() => vec![*k],
                Some(k) => {
                    return Err(Error::OutOfRange {
                        index: *k,
                        max: h.values.len() - 1,
                    })
                }
                None => (0..h.values.len()).collect(),
            };
            let shown = |j: usize| -> Result<String> {
                match &eval.q {
                    Some(q) => Ok(h.values[j].eval(q)?.to_string()),
                    None => Ok(h.values[j].to_string()),
                }
            };
            if json {
                let mut v = serde_json::to_value(&h).map_err(|x| Error::Invalid(x.to_string()))?;
                v["box"] = json!([m, n]);
                v["shape"] = json!(lam.parts());
                if let Some(k) = k {
                    v["k"] = json!(k);
                    v["value"] = json!(shown(*k)?);
                }
                if let Some(q) = &eval.q {
                    v["q"] = json!(q.to_string());
                    v["evaluated"] =
                        json!(ks.iter().map(|&j| shown(j)).collect::<Result<Vec<_>>>()?);
                }
                emit(out, &v)?;
            } else {
                line(
                    out,
                    format!("q-hit numbers of {lam} ({} convention)", h.convention),
                )?;
                for j in ks {
                    line(out, format!("  H_{j} = {}", shown(j)?))?;
                }
            }
        }
        Command::Remixed { alpha, m } => {
            let alpha = parse_shape(alpha)?;
            let total: usize = alpha.iter().sum();
            if let Some(m) = m {
                if *m != total {
                    return Err(usage(format!("--m {m} differs from |alpha| = {total}")));
                }
            }
            let a = remixed_connected(&alpha)?;
            if json {
                emit(out, &json!({"alpha": alpha, "m": total, "values": a}))?;
            } else {
                line(
                    out,
                    format!("remixed Eulerian numbers of {alpha:?} (m = {total})"),
                )?;
                for (i, v) in a.iter().enumerate() {
                    line(out, format!("  A[{i}] = {v}"))?;
                }
            }
        }
        Command::KlyachkoExpand { shape, board } => {
            let (m, n) = parse_box(board)?;
            if m != n {
                return Err(Error::NotSquare { m, n });
            }
            let lam = BoxPartition::new(&parse_shape(shape)?, m, n)?;
            let e = expand_u_lambda(&lam)?;
            if json {
                emit(out, &e)?;
            } else {
                let u = qpaths::klyachko::KlyMonomial::from_partition(&lam)?;
                line(out, format!("u({}) = {u}", lam.shape_string()))?;
                for (k, c) in e.coeffs.iter().enumerate() {
                    line(
                        out,
                        format!("  u_[{},{}]: {c}", 1 - k as i64, m as i64 - k as i64),
                    )?;
                }
            }
        }
        Command::Csf {
            word,
            basis,
            bound,
            eval,
        } => {
            let g = DyckGraph::from_dyck_word(word)?;
            let x = csf(&g, *bound)?;
            let fmt_poly = |p: &QPoly| -> Result<String> {
                match &eval.q {
                    Some(q) => Ok(p.eval(q)?.to_string()),
                    None => Ok(p.to_string()),
                }
            };
            let fmt_rat = |c: &QRat| -> Result<String> {
                match &eval.q {
                    Some(q) => eval_rat(c, q),
                    None => Ok(c.to_string()),
                }
            };
            let terms: Vec<(Vec<usize>, String)> = match basis.as_str() {
                "M" => x
                    .terms
                    .iter()
                    .map(|(a, c)| Ok((a.clone(), fmt_poly(c)?)))
                    .collect::<Result<_>>()?,
                "m" => {
                    x.check_symmetric()?;
                    x.m_coeffs()
                        .iter()
                        .rev()
                        .map(|(a, c)| Ok((a.clone(), fmt_poly(c)?)))
                        .collect::<Result<_>>()?
                }
                "e" => qsym::to_e_basis(&x)?
                    .terms
                    .iter()
                    .rev()
                    .map(|(a, c)| Ok((a.clone(), fmt_rat(c)?)))
                    .collect::<Result<_>>()?,
                other => {
                    return Err(usage(format!(
                        "unknown basis {other:?}; expected M, m or e"
                    )))
                }
            };
            if json {
                let t: Vec<Value> = terms
                    .iter()
                    .map(|(a, c)| json!({"index": a, "value": c}))
                    .collect();
                emit(
                    out,
                    &json!({"word": word.to_string(), "n": g.n(), "basis": basis, "terms": t}),
                )?;
            } else {
                line(
                    out,
                    format!(
                        "X_G for {word} (n = {}, {} edges), basis {basis}",
                        g.n(),
                        g.num_edges()
                    ),
                )?;
                for (a, c) in terms {
                    let idx: Vec<String> = a.iter().map(|p| p.to_string()).collect();
                    line(out, format!("  {basis}[{}]: {c}", idx.join(",")))?;
                }
            }
        }
        Command::Orient { word, stats, bound } => {
            let g = DyckGraph::from_dyck_word(word)?;
            if *stats {
                let by_sources = (1..=g.n())
                    .map(|k| Ok((k, orientations_with_sources(&g, k, *bound)?)))
                    .collect::<Result<Vec<_>>>()?;
                let by_initial = (0..=g.n() / 2)
                    .map(|j| Ok((j, orientations_with_initial(&g, j, *bound)?)))
                    .collect::<Result<Vec<_>>>()?;
                let nonzero = |v: Vec<(usize, QPoly)>| -> Vec<(usize, QPoly)> {
                    v.into_iter().filter(|(_, p)| !p.is_zero()).collect()
                };
                let (by_sources, by_initial) = (nonzero(by_sources), nonzero(by_initial));
                if json {
                    let s: Vec<Value> = by_sources
                        .iter()
                        .map(|(k, p)| json!({"sources": k, "weight": p}))
                        .collect();
                    let i: Vec<Value> = by_initial
                        .iter()
                        .map(|(j, p)| json!({"initial": j, "weight": p}))
                        .collect();
                    emit(
                        out,
                        &json!({"word": word.to_string(), "by_sources": s, "by_initial": i}),
                    )?;
                } else {
                    line(
                        out,
                        format!("acyclic orientations of {word}, weighted by q^ascents"),
                    )?;
                    for (k, p) in by_sources {
                        line(out, format!("  sources = {k}: {p}"))?;
                    }
                    for (j, p) in by_initial {
                        line(out, format!("  initial = {j}: {p}"))?;
                    }
                }
            } else {
                let all = acyclic_orientations(&g, *bound)?;
                if json {
                    emit(out, &all)?;
                } else {
                    line(out, format!("{} acyclic orientations of {word}", all.len()))?;
                    for a in all {
                        let arcs: Vec<String> =
                            a.arcs.iter().map(|(x, y)| format!("{x}>{y}")).collect();
                        line(
                            out,
                            format!(
                                "  {} asc={} sources={:?} src={:?} initial={}",
                                arcs.join(" "),
                                a.ascents,
                                a.sources,
                                a.source_sequence,
                                a.initial
                            ),
                        )?;
                    }
                }
            }
        }
        Command::Verify { identity, all, max } => {
            let suites: Vec<Identity> = match (identity, all) {
                (Some(i), false) => vec![*i],
                (None, true) => Identity::ALL.to_vec(),
                _ => return Err(usage("verify needs an identity name or --all".into())),
            };
            let mut reports: Vec<VerifyReport> = Vec::new();
            for s in &suites {
                let r = verify::run(*s, *max)?;
                if !json {
                    let passed = r.iter().filter(|x| x.pass).count();
                    let status = if passed == r.len() { "PASS" } else { "FAIL" };
                    line(out, format!("{status} {s}: {passed}/{} instances", r.len()))?;
                    for f in r.iter().filter(|x| !x.pass) {
                        line(out, format!("  {f}"))?;
                    }
                }
                reports.extend(r);
            }
            if json {
                emit(out, &reports)?;
            }
            if let Some(first) = reports.iter().find(|r| !r.pass) {
                let _ = writeln!(err, "first failure: {first}");
                return Ok(1);
            }
        }
    }
    Ok(0)
}
