//! The `recalg` command line: one subcommand per operation, a parallel sweep and the fixture
//! runner. JSON output carries `schema: 1`; exit codes are 0 on pass, 1 on a failed check and
//! 2 on unusable flags.

use crate::artin::{
    exponent_matrices, generator_set, kernel_report, qdet_ideal, saturating_product_e, verify_theorem, GeneratorSet,
    QuasiMatrix, VerifyMode,
};
use crate::combinatorics::{hj_dual, hj_primary, ij_series, GroupParams};
use crate::deform::{
    chart_eliminate, chart_indices, deformed_relations, fiber_dimension, pi_fiber_ideal, pi_map_eval,
    rep_variety_empty_check, DeformationParams, Lambda,
};
use crate::fixtures::replay_all;
use crate::groebner::Limits;
use crate::lattice::IntMatrix;
use crate::poly::{parse_rational, Coeff};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::io::Write;

pub const SCHEMA: u64 = 1;

#[derive(Debug, Parser)]
#[command(name = "recalg", version, about = "Reconstruction algebras of cyclic quotient surface singularities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Seed for sampled deformation parameters.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Cap on S-pairs processed by any Buchberger completion.
    #[arg(long, global = true, env = "RECALG_MAX_PAIRS", default_value_t = Limits::default().max_pairs)]
    pub max_pairs: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct GroupArgs {
    #[arg(long)]
    pub r: u64,
    #[arg(long)]
    pub a: u64,
}

#[derive(Debug, Clone, Args)]
pub struct LambdaArgs {
    /// λ as a JSON array of steps, each an array of rationals `["λ_{i,β-1}", …, "λ_{i,0}"]`.
    #[arg(long)]
    pub lambda: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hirzebruch–Jung expansions of r/a and r/(r−a).
    Hj(GroupArgs),
    /// Arrows of the quiver.
    Quiver(GroupArgs),
    /// The generators z_{i,j} with degrees and cycles.
    Generators(GroupArgs),
    /// Quasimatrix, quasiminors and the product E.
    Qdet(GroupArgs),
    /// The exponent matrix M.
    MatrixM(GroupArgs),
    /// The kernel matrix K, the completion Q and the kernel certificate.
    MatrixK(GroupArgs),
    /// Checks that the quasiminors form the Artin component.
    Verify {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value_t = VerifyMode::BuchbergerOnly)]
        mode: VerifyMode,
    },
    /// The deformed relations, symbolic or at a given λ.
    Deform {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        lambda: LambdaArgs,
    },
    /// Chart certificates at λ (zero when omitted).
    Charts {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        lambda: LambdaArgs,
        /// Only this chart.
        #[arg(long)]
        chart: Option<usize>,
    },
    /// The fiber of π over λ and its dimension.
    Fiber {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        lambda: LambdaArgs,
    },
    /// Evaluates π at a point given over the generators in order.
    Pi {
        #[command(flatten)]
        group: GroupArgs,
        /// JSON array of rationals, one per generator.
        #[arg(long)]
        point: String,
    },
    /// Runs the checks for every group with r ≤ N.
    Sweep {
        #[arg(long)]
        max_r: u64,
        #[arg(long, default_value_t = VerifyMode::BuchbergerOnly)]
        mode: VerifyMode,
        /// Sampled points of Δ per group, besides λ = 0.
        #[arg(long, default_value_t = 3)]
        samples: usize,
    },
    /// Replays the bundled reference fixtures.
    Fixtures,
}

/// Result of one subcommand before rendering.
struct Outcome {
    passed: bool,
    json: Value,
    text: String,
}

impl Outcome {
    fn ok(json: Value, text: String) -> Self {
        Self { passed: true, json, text }
    }
}

enum Failure {
    Usage(String),
    Run(String),
}

type Run = Result<Outcome, Failure>;

fn group(g: GroupArgs) -> Result<GroupParams, Failure> {
    GroupParams::new(g.r, g.a).map_err(|e| Failure::Usage(e.to_string()))
}

fn rationals(v: &Value) -> Option<Vec<Coeff>> {
    v.as_array()?
        .iter()
        .map(|x| match x {
            Value::String(s) => parse_rational(s).ok(),
            Value::Number(n) => parse_rational(&n.to_string()).ok(),
            _ => None,
        })
        .collect()
}

fn parse_lambda(g: GroupParams, text: &str) -> Result<DeformationParams, Failure> {
    let bad = |why: String| Failure::Usage(format!("--lambda: {why}"));
    let v: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    let steps = v
        .as_array()
        .and_then(|a| a.iter().map(rationals).collect::<Option<Vec<_>>>())
        .ok_or_else(|| bad("expected an array of arrays of rationals".into()))?;
    DeformationParams::new(g, steps).map_err(|e| bad(e.to_string()))
}

fn lambda_or_zero(g: GroupParams, l: &LambdaArgs) -> Result<DeformationParams, Failure> {
    l.lambda.as_deref().map_or_else(|| Ok(DeformationParams::zero(g)), |t| parse_lambda(g, t))
}

fn run_err(e: impl std::fmt::Display) -> Failure {
    Failure::Run(e.to_string())
}

fn matrix_text(rows: &[String], cols: &[String], m: &IntMatrix) -> String {
    let cells = m.to_string_rows();
    let w = cells
        .iter()
        .flatten()
        .map(String::len)
        .chain(cols.iter().map(String::len))
        .max()
        .unwrap_or(1);
    let rw = rows.iter().map(String::len).max().unwrap_or(0);
    let mut out = format!("{:rw$}", "");
    for c in cols {
        write!(out, " {c:>w$}").unwrap();
    }
    out.push('\n');
    for (k, row) in cells.iter().enumerate() {
        write!(out, "{:<rw$}", rows.get(k).map_or("", String::as_str)).unwrap();
        for x in row {
            write!(out, " {x:>w$}").unwrap();
        }
        out.push('\n');
    }
    out
}

fn hj(g: GroupParams) -> Run {
    let alpha = hj_primary(g).terms;
    let beta = hj_dual(g).terms;
    let ij = ij_series(g);
    let ell: u64 = alpha.iter().map(|a| a - 2).sum();
    let text = format!("{}/{} = {:?}\n{}/{} = {:?}\n", g.r(), g.a(), alpha, g.r(), g.r() - g.a(), beta);
    Ok(Outcome::ok(
        json!({"r": g.r(), "a": g.a(), "alpha": alpha, "beta": beta, "ell": ell,
               "embedding_dimension": beta.len() + 2, "i_series": ij.i_seq, "j_series": ij.j_seq}),
        text,
    ))
}

fn quiver(g: GroupParams) -> Run {
    let q = crate::combinatorics::build_quiver(g);
    Ok(Outcome::ok(serde_json::to_value(&q).map_err(run_err)?, q.render_table()))
}

fn generators(s: &GeneratorSet) -> Run {
    let rows: Vec<Value> = s
        .vars
        .iter()
        .map(|v| json!({"name": v.name, "i": v.i, "j": v.j, "degree": v.degree, "cycle": s.quiver.labels(&v.path)}))
        .collect();
    let w = s.vars.iter().map(|v| v.name.len()).max().unwrap_or(1);
    let mut text = format!("{} generators for {}\n", s.len(), s.group);
    for v in &s.vars {
        writeln!(text, "  {:<w$}  deg {:>4}  {}", v.name, v.degree, s.quiver.labels(&v.path).join("*")).unwrap();
    }
    Ok(Outcome::ok(json!({"r": s.group.r(), "a": s.group.a(), "generators": rows}), text))
}

fn qdet(s: &GeneratorSet) -> Run {
    let q = QuasiMatrix::new(s);
    let names = |v: &[usize]| v.iter().map(|&k| s.name(k).to_string()).collect::<Vec<_>>();
    let rels = qdet_ideal(s).to_strings();
    let e = s.z_ring.format_monomial(&saturating_product_e(s));
    let mut text = q.render(s);
    text.push('\n');
    for r in &rels {
        writeln!(text, "{r}").unwrap();
    }
    writeln!(text, "E = {e}").unwrap();
    Ok(Outcome::ok(
        json!({"r": s.group.r(), "a": s.group.a(),
               "quasimatrix": {"top": names(&q.top), "bottom": names(&q.bottom),
                               "middle": q.middle.iter().map(|m| names(m)).collect::<Vec<_>>()},
               "relations": rels, "e": e}),
        text,
    ))
}

fn matrix_m(s: &GeneratorSet) -> Run {
    let b = exponent_matrices(s);
    let text = matrix_text(&b.row_labels, &b.col_labels, &b.m);
    Ok(Outcome::ok(
        json!({"r": s.group.r(), "a": s.group.a(), "rows": b.row_labels, "columns": b.col_labels,
               "entries": b.m.to_string_rows()}),
        text,
    ))
}

fn matrix_k(s: &GeneratorSet) -> Run {
    let b = exponent_matrices(s);
    let report = kernel_report(s);
    let kcols: Vec<String> = (1..=b.k.cols()).map(|c| format!("k{c}")).collect();
    let qcols: Vec<String> = (1..=b.q.cols()).map(|c| format!("q{c}")).collect();
    let text = format!(
        "K\n{}\nQ\n{}\nkernel spans equal: {}, det Q = {}\n",
        matrix_text(&b.col_labels, &kcols, &b.k),
        matrix_text(&b.col_labels, &qcols, &b.q),
        report.spans_equal,
        report.q_determinant
    );
    Ok(Outcome {
        passed: report.passed(),
        json: json!({"r": s.group.r(), "a": s.group.a(), "rows": b.col_labels, "k": b.k.to_string_rows(),
                     "q": b.q.to_string_rows(), "report": report}),
        text,
    })
}

fn verify(s: &GeneratorSet, mode: VerifyMode, limits: Limits) -> Run {
    let report = verify_theorem(s, mode, limits).map_err(run_err)?;
    let mut text = format!("{} {}: {}\n", s.group, mode, if report.passed { "pass" } else { "FAIL" });
    writeln!(text, "  quasiminors {}, homogeneous {}", report.quasiminors, report.homogeneous).unwrap();
    writeln!(text, "  phi kills QDet {}", report.phi_kills_qdet).unwrap();
    for c in [&report.degrevlex, &report.block] {
        writeln!(text, "  {}: {} ({} pairs)", c.order, c.passed, c.pairs_checked).unwrap();
        if let Some(w) = &c.witness {
            writeln!(text, "    S({}, {}) reduces to {}", w.first, w.second, w.remainder).unwrap();
        }
    }
    writeln!(text, "  elimination matches {}", report.elimination_matches).unwrap();
    if let Some(o) = &report.oracle {
        writeln!(text, "  oracle ideal equal {}", o.ideal_equal).unwrap();
    }
    Ok(Outcome {
        passed: report.passed,
        json: serde_json::to_value(&report).map_err(run_err)?,
        text,
    })
}

fn deform(s: &GeneratorSet, l: &LambdaArgs) -> Run {
    let rel = deformed_relations(s);
    let lines = rel.render();
    let mut json = json!({"r": s.group.r(), "a": s.group.a(), "relations": lines});
    let mut text = lines.join("\n") + "\n";
    if let Some(t) = &l.lambda {
        let lam = parse_lambda(s.group, t)?;
        let polys: Vec<String> =
            rel.polynomials(Lambda::Concrete(&lam)).map_err(run_err)?.iter().map(|p| p.to_string()).collect();
        let empty = rep_variety_empty_check(&rel, &lam).map_err(run_err)?;
        writeln!(text, "at λ = {:?}: representation space empty = {empty}", lam.to_strings()).unwrap();
        json["lambda"] = serde_json::to_value(&lam).map_err(run_err)?;
        json["polynomials"] = json!(polys);
        json["representation_space_empty"] = json!(empty);
    }
    Ok(Outcome::ok(json, text))
}

fn charts(s: &GeneratorSet, l: &LambdaArgs, only: Option<usize>) -> Run {
    let lam = lambda_or_zero(s.group, l)?;
    let which: Vec<usize> = match only {
        Some(t) => vec![t],
        None => chart_indices(s),
    };
    let mut out = Vec::new();
    let mut text = String::new();
    let mut passed = true;
    for t in which {
        let c = chart_eliminate(s, t, Lambda::Concrete(&lam)).map_err(run_err)?.to_json();
        passed &= c.certified;
        writeln!(
            text,
            "W{t}: units {:?}, coordinates {:?}, residual {:?}, certified {}",
            c.units, c.coordinates, c.residual, c.certified
        )
        .unwrap();
        for (a, e) in &c.solved {
            writeln!(text, "    {a} = {e}").unwrap();
        }
        out.push(c);
    }
    Ok(Outcome {
        passed,
        json: json!({"r": s.group.r(), "a": s.group.a(), "lambda": lam, "charts": out}),
        text,
    })
}

fn fiber(s: &GeneratorSet, l: &LambdaArgs, limits: Limits) -> Run {
    let lam = lambda_or_zero(s.group, l)?;
    let ideal = pi_fiber_ideal(s, &lam).map_err(run_err)?.to_strings();
    let dim = fiber_dimension(s, &lam, limits).map_err(run_err)?;
    let text = format!("{}\ndimension {}\n", ideal.join("\n"), dim.map_or("empty".into(), |d| d.to_string()));
    Ok(Outcome {
        passed: dim == Some(2),
        json: json!({"r": s.group.r(), "a": s.group.a(), "lambda": lam, "ideal": ideal, "dimension": dim}),
        text,
    })
}

fn pi(s: &GeneratorSet, point: &str) -> Run {
    let v: Value = serde_json::from_str(point).map_err(|e| Failure::Usage(format!("--point: {e}")))?;
    let p = rationals(&v).ok_or_else(|| Failure::Usage("--point: expected an array of rationals".into()))?;
    let lam = pi_map_eval(s, &p).map_err(|e| Failure::Usage(format!("--point: {e}")))?;
    let text = format!("{:?}\nin Δ: {}\n", lam.to_strings(), lam.in_delta());
    Ok(Outcome::ok(json!({"r": s.group.r(), "a": s.group.a(), "lambda": lam, "in_delta": lam.in_delta()}), text))
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepEntry {
    pub r: u64,
    pub a: u64,
    pub passed: bool,
    pub failures: Vec<String>,
}

fn sweep_one(g: GroupParams, mode: VerifyMode, seed: u64, samples: usize, limits: Limits) -> SweepEntry {
    let mut failures = Vec::new();
    let s = generator_set(g);
    match verify_theorem(&s, mode, limits) {
        Ok(r) if r.passed => {}
        Ok(r) => failures.push(format!("verify: {}", serde_json::to_string(&r).unwrap_or_default())),
        Err(e) => failures.push(format!("verify: {e}")),
    }
    if !kernel_report(&s).passed() {
        failures.push("kernel spanning".into());
    }
    for lam in DeformationParams::seeded_samples(g, seed, samples) {
        for t in chart_indices(&s) {
            match chart_eliminate(&s, t, Lambda::Concrete(&lam)) {
                Ok(c) if c.is_affine_plane() => {}
                Ok(c) => failures.push(format!("chart W{t} at {:?}: residual {:?}", lam.to_strings(), c.to_json().residual)),
                Err(e) => failures.push(format!("chart W{t} at {:?}: {e}", lam.to_strings())),
            }
        }
    }
    SweepEntry {
        r: g.r(),
        a: g.a(),
        passed: failures.is_empty(),
        failures,
    }
}

/// Checks every group with r ≤ `max_r` in parallel; results are ordered by (r, a) and a
/// failing or panicking group never stops the others.
pub fn sweep(max_r: u64, mode: VerifyMode, seed: u64, samples: usize, limits: Limits) -> Vec<SweepEntry> {
    GroupParams::all_up_to(max_r)
        .into_par_iter()
        .map(|g| {
            std::panic::catch_unwind(|| sweep_one(g, mode, seed, samples, limits)).unwrap_or_else(|_| SweepEntry {
                r: g.r(),
                a: g.a(),
                passed: false,
                failures: vec!["panicked".into()],
            })
        })
        .collect()
}

fn sweep_cmd(max_r: u64, mode: VerifyMode, seed: u64, samples: usize, limits: Limits) -> Run {
    if max_r < 2 {
        return Err(Failure::Usage("--max-r must be at least 2".into()));
    }
    let entries = sweep(max_r, mode, seed, samples, limits);
    let failed: Vec<&SweepEntry> = entries.iter().filter(|e| !e.passed).collect();
    let mut text = format!("{} groups, {} failed\n", entries.len(), failed.len());
    for e in &failed {
        writeln!(text, "  1/{}(1,{}): {}", e.r, e.a, e.failures.join("; ")).unwrap();
    }
    Ok(Outcome {
        passed: failed.is_empty(),
        json: json!({"max_r": max_r, "mode": mode, "seed": seed, "groups": entries.len(),
                     "failed": failed.len(), "results": entries}),
        text,
    })
}

fn fixtures() -> Run {
    let outcomes = replay_all();
    let mut text = String::new();
    for o in &outcomes {
        let status = if o.passed { "PASS" } else { "FAIL" };
        writeln!(text, "{status} {}{}", o.name, o.detail.as_ref().map_or(String::new(), |d| format!(": {d}"))).unwrap();
    }
    Ok(Outcome {
        passed: outcomes.iter().all(|o| o.passed),
        json: json!({"fixtures": outcomes}),
        text,
    })
}

fn name(c: &Command) -> &'static str {
    match c {
        Command::Hj(_) => "hj",
        Command::Quiver(_) => "quiver",
        Command::Generators(_) => "generators",
        Command::Qdet(_) => "qdet",
        Command::MatrixM(_) => "matrix-m",
        Command::MatrixK(_) => "matrix-k",
        Command::Verify { .. } => "verify",
        Command::Deform { .. } => "deform",
        Command::Charts { .. } => "charts",
        Command::Fiber { .. } => "fiber",
        Command::Pi { .. } => "pi",
        Command::Sweep { .. } => "sweep",
        Command::Fixtures => "fixtures",
    }
}

fn dispatch(cli: &Cli) -> Run {
    let limits = Limits {
        max_pairs: cli.max_pairs,
    };
    let gs = |g: GroupArgs| group(g).map(generator_set);
    match &cli.command {
        Command::Hj(g) => hj(group(*g)?),
        Command::Quiver(g) => quiver(group(*g)?),
        Command::Generators(g) => generators(&gs(*g)?),
        Command::Qdet(g) => qdet(&gs(*g)?),
        Command::MatrixM(g) => matrix_m(&gs(*g)?),
        Command::MatrixK(g) => matrix_k(&gs(*g)?),
        Command::Verify { group, mode } => verify(&gs(*group)?, *mode, limits),
        Command::Deform { group, lambda } => deform(&gs(*group)?, lambda),
        Command::Charts { group, lambda, chart } => charts(&gs(*group)?, lambda, *chart),
        Command::Fiber { group, lambda } => fiber(&gs(*group)?, lambda, limits),
        Command::Pi { group, point } => pi(&gs(*group)?, point),
        Command::Sweep { max_r, mode, samples } => sweep_cmd(*max_r, *mode, cli.seed, *samples, limits),
        Command::Fixtures => fixtures(),
    }
}

fn envelope(command: &str, passed: bool, body: Value) -> Value {
    let mut out = json!({"schema": SCHEMA, "command": command, "passed": passed});
    if let (Value::Object(o), Value::Object(b)) = (&mut out, body) {
        o.extend(b);
    }
    out
}

/// Parses `args` (including the program name), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let command = name(&cli.command);
    let result = dispatch(&cli);
    let (code, value, text) = match result {
        Ok(o) => {
            let code = if o.passed { 0 } else { 1 };
            (code, envelope(command, o.passed, o.json), o.text)
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}\n\nFor more information, try '--help'.");
            return 2;
        }
        Err(Failure::Run(msg)) => {
            let v = envelope(command, false, json!({"error": msg}));
            (1, v, format!("error: {msg}\n"))
        }
    };
    let _ = match cli.format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&value).unwrap_or_default()),
        Format::Text => write!(out, "{text}"),
    };
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("recalg").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn hj_of_165_104() {
        let (code, out, _) = call(&["hj", "--r", "165", "--a", "104"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["alpha"], json!([2, 3, 2, 4, 3, 2, 2]));
    }

    #[test]
    fn invalid_group_is_a_usage_error() {
        let (code, _, err) = call(&["qdet", "--r", "6", "--a", "3"]);
        assert_eq!(code, 2);
        assert!(err.contains("gcd"));
        assert_eq!(call(&["qdet", "--r", "7"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
    }

    #[test]
    fn malformed_lambda_is_a_usage_error() {
        assert_eq!(call(&["charts", "--r", "7", "--a", "3", "--lambda", "[[1]]"]).0, 2);
        assert_eq!(call(&["charts", "--r", "7", "--a", "3", "--lambda", "nope"]).0, 2);
    }

    #[test]
    fn lambda_outside_delta_fails_with_report() {
        let (code, out, _) = call(&["charts", "--r", "7", "--a", "3", "--lambda", r#"[["1","0"],["0","0","0","0"]]"#]);
        assert_eq!(code, 1);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["passed"], false);
        assert!(v["error"].as_str().unwrap().contains("Δ"));
    }

    #[test]
    fn qdet_text_has_three_rows() {
        let (code, out, _) = call(&["qdet", "--r", "7", "--a", "3", "--format", "text"]);
        assert_eq!(code, 0);
        assert!(out.lines().next().unwrap().contains("z0_0"));
        assert!(out.contains("z2_2*z2_1"));
    }

    #[test]
    fn output_is_deterministic() {
        let args = ["charts", "--r", "11", "--a", "4", "--lambda", r#"[["1/2","-1/2"],["3","-1","-2"],["0","0"],["5","-5"]]"#];
        let first = call(&args);
        assert_eq!(first.0, 0, "{}", first.1);
        assert_eq!(first, call(&args));
    }

    #[test]
    fn sweep_orders_results() {
        let (code, out, _) = call(&["sweep", "--max-r", "6", "--samples", "1"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        let pairs: Vec<(u64, u64)> = v["results"]
            .as_array()
            .unwrap()
            .iter()
            .map(|e| (e["r"].as_u64().unwrap(), e["a"].as_u64().unwrap()))
            .collect();
        let mut sorted = pairs.clone();
        sorted.sort();
        assert_eq!(pairs, sorted);
        assert_eq!(pairs.len(), GroupParams::all_up_to(6).len());
    }
}
