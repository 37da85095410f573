//! Command-line front end. Every subcommand prints a [`RunReport`]; with
//! `--json` it is a single JSON document on stdout, otherwise a short text
//! listing. Wall time goes to stderr so stdout stays byte-stable.

use std::collections::BTreeSet;
use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::blocks::{census, search, DivClass};
use crate::catalog::{self, ExampleReport, EXAMPLE_IDS};
use crate::error::{Error, Result};
use crate::families::{
    build_first_kind, build_fourth_kind, build_second_kind, build_third_kind, verify_family, BridgeVariant,
    Certificate, Check, EquationFamily, Layout, Param,
};
use crate::pell::{find_seeds, fundamental_unit, generate, Orientation, Pair, PellEquation, SolutionSeq};
use crate::poly::Poly;
use crate::pte::{construct_pte3, construct_pte4, construct_pte6, decompose, verify_pte, PteSet};
use crate::rational::{parse_rational, serde_str, Rational};
use crate::reps::{reps_hex_form, reps_sum_two_squares, reps_unrestricted, QuadForm};
use crate::stdpairs::{classify_degrees, feasible_kinds, param_factorization, verify_factorization};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFICATION: u8 = 2;
pub const EXIT_INPUT: u8 = 3;
pub const EXIT_RESOURCE: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "dickson-pte", version, about = "Exact Dickson factorizations, PTE sets and f(x) = g(y) families")]
pub struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,
    /// Number of sequence elements checked for Pell-driven families.
    #[arg(long, global = true, default_value_t = 10)]
    pub horizon: usize,
    /// Seed for randomized runs.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Primitive representations by x^2 + y^2 or x^2 + xy + y^2.
    Reps(RepsArgs),
    /// Construct, decompose or verify PTE sets.
    #[command(subcommand)]
    Pte(PteCmd),
    /// Explicit Dickson factorizations and feasible kinds.
    #[command(subcommand)]
    Stdpair(StdpairCmd),
    /// Degree triples (m, n, s) compatible with deg f = k, deg g = l.
    Classify(ClassifyArgs),
    /// Solution sequences of x^2 - D y^2 = N.
    Pell(PellArgs),
    /// Build and verify an equation family.
    #[command(subcommand)]
    Family(FamilyCmd),
    /// Equal products from disjoint blocks of consecutive integers.
    #[command(subcommand)]
    Blocks(BlocksCmd),
    /// Run the worked-instance regression suite.
    VerifyPaper(VerifyArgs),
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum FormArg {
    Sq,
    Hex,
}

#[derive(Args, Debug)]
pub struct RepsArgs {
    #[arg(long, value_enum)]
    pub form: FormArg,
    #[arg(long)]
    pub m: u64,
    /// Scan every pair instead of requiring an admissible modulus.
    #[arg(long)]
    pub unrestricted: bool,
}

#[derive(Subcommand, Debug)]
pub enum PteCmd {
    Construct {
        /// Block size: 3, 4 or 6.
        #[arg(long)]
        m: u32,
        #[arg(long = "M")]
        big_m: u64,
    },
    Decompose {
        /// Poly JSON, inline or a file path.
        #[arg(long)]
        f: String,
        #[arg(long)]
        m: usize,
    },
    Verify {
        /// PteSet JSON, inline or a file path.
        #[arg(long)]
        set: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum StdpairCmd {
    Factorize {
        #[arg(long = "N")]
        n: u32,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        w1: Rational,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true, default_value = "0")]
        w2: Rational,
        #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
        b: Option<Rational>,
    },
    /// Which kinds of standard pair can underlie f.
    Feasible {
        /// Poly JSON, inline or a file path.
        #[arg(long)]
        f: String,
    },
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[arg(long)]
    pub k: u32,
    #[arg(long)]
    pub l: u32,
    #[arg(long)]
    pub both_simple: bool,
}

#[derive(Args, Debug)]
pub struct PellArgs {
    #[arg(long = "D", allow_hyphen_values = true)]
    pub d: i64,
    #[arg(long = "N", allow_hyphen_values = true)]
    pub n: i64,
    /// Seed search bound on |y|.
    #[arg(long, default_value_t = 1000)]
    pub bound: u64,
    #[arg(long, default_value_t = 10)]
    pub count: usize,
    /// Report pairs (p, q) with q^2 - D p^2 = N.
    #[arg(long)]
    pub swapped: bool,
}

#[derive(Subcommand, Debug)]
pub enum FamilyCmd {
    Build {
        #[arg(long, conflicts_with_all = ["kind", "params"])]
        example: Option<String>,
        #[arg(long, value_enum, requires = "params")]
        kind: Option<KindArg>,
        /// Builder parameters as JSON, inline or a file path.
        #[arg(long)]
        params: Option<String>,
    },
}

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum KindArg {
    First,
    Second,
    Third,
    Fourth,
}

#[derive(Subcommand, Debug)]
pub enum BlocksCmd {
    Search {
        #[arg(long = "N")]
        n: u32,
        #[arg(long)]
        max_start: u64,
        #[arg(long)]
        kmax: usize,
        #[arg(long)]
        lmax: usize,
        /// Keep only this class: k-div-l, k-div-2l or k-ndiv-2l.
        #[arg(long)]
        class: Option<String>,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Example ids, or `all`.
    #[arg(default_value = "all")]
    pub ids: Vec<String>,
}

fn rational_arg(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Inline JSON if the argument looks like JSON, else a file path.
fn read_json<T: for<'de> Deserialize<'de>>(arg: &str) -> Result<T> {
    let text = if arg.trim_start().starts_with(['{', '[']) {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| Error::Parse(format!("{arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub passed: bool,
    pub checks: Vec<Check>,
    pub result: Value,
}

impl RunReport {
    fn new(command: &str, checks: Vec<Check>, result: Value) -> RunReport {
        let passed = checks.iter().all(|c| c.passed);
        RunReport { command: command.to_string(), passed, checks, result }
    }

    pub fn exit_code(&self) -> u8 {
        if self.passed {
            EXIT_OK
        } else {
            EXIT_VERIFICATION
        }
    }
}

pub fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::ResourceBoundExceeded(_)
        | Error::SearchBoundExceeded(_)
        | Error::FactorizationOverflow(_)
        | Error::FundamentalSearchOverflow(_) => EXIT_RESOURCE,
        Error::OffCurve { .. } => EXIT_VERIFICATION,
        _ => EXIT_INPUT,
    }
}

fn error_kind(e: &Error) -> String {
    let dbg = format!("{e:?}");
    dbg.split(['(', ' ', '{']).next().unwrap_or_default().to_string()
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn pair_json(p: &Pair) -> Value {
    json!([p.0.to_string(), p.1.to_string()])
}

/// Runs a parsed command line and returns the report.
pub fn execute(cli: &Cli) -> Result<RunReport> {
    match &cli.command {
        Command::Reps(a) => run_reps(a),
        Command::Pte(c) => run_pte(c),
        Command::Stdpair(c) => run_stdpair(c),
        Command::Classify(a) => run_classify(a),
        Command::Pell(a) => run_pell(a),
        Command::Family(FamilyCmd::Build { example, kind, params }) => {
            run_family(example.as_deref(), *kind, params.as_deref(), cli.horizon)
        }
        Command::Blocks(BlocksCmd::Search { n, max_start, kmax, lmax, class }) => {
            run_blocks(*n, *max_start, *kmax, *lmax, class.as_deref())
        }
        Command::VerifyPaper(a) => run_verify(&a.ids, cli.horizon, cli.seed),
    }
}

fn run_reps(a: &RepsArgs) -> Result<RunReport> {
    let form = match a.form {
        FormArg::Sq => QuadForm::SumSquares,
        FormArg::Hex => QuadForm::Hex,
    };
    let reps = match (a.unrestricted, form) {
        (true, _) => reps_unrestricted(a.m, form)?,
        (false, QuadForm::SumSquares) => reps_sum_two_squares(a.m)?,
        (false, QuadForm::Hex) => reps_hex_form(a.m)?,
    };
    let checks = reps
        .iter()
        .map(|r| {
            let v = r.form.eval(r.x, r.y);
            Check::new(format!("Q({}, {}) = {}", r.x, r.y, a.m), v, a.m, v == a.m)
        })
        .collect();
    Ok(RunReport::new("reps", checks, to_value(&reps)))
}

fn pte_checks(set: &PteSet) -> Vec<Check> {
    vec![
        Check::new("power sums agree", verify_pte(set), true, verify_pte(set)),
        Check::new("blocks expand to shared + offset", set.is_consistent(), true, set.is_consistent()),
    ]
}

fn run_pte(c: &PteCmd) -> Result<RunReport> {
    match c {
        PteCmd::Construct { m, big_m } => {
            let set = match m {
                3 => construct_pte3(*big_m)?,
                4 => construct_pte4(*big_m)?,
                6 => construct_pte6(*big_m)?,
                _ => return Err(Error::InvalidParameters(format!("m = {m} is not one of 3, 4, 6"))),
            };
            Ok(RunReport::new("pte construct", pte_checks(&set), to_value(&set)))
        }
        PteCmd::Decompose { f, m } => {
            let f: Poly = read_json(f)?;
            let d = decompose(&f, *m)?;
            let back = d.phi.compose(&d.inner);
            let checks = vec![Check::eq_poly("phi(F) = f", &back, &f)];
            Ok(RunReport::new("pte decompose", checks, to_value(&d)))
        }
        PteCmd::Verify { set } => {
            let set: PteSet = read_json(set)?;
            Ok(RunReport::new("pte verify", pte_checks(&set), to_value(&set)))
        }
    }
}

fn run_stdpair(c: &StdpairCmd) -> Result<RunReport> {
    match c {
        StdpairCmd::Factorize { n, w1, w2, b } => {
            let df = param_factorization(*n, w1, w2, b.as_ref())?;
            let ok = verify_factorization(&df);
            let checks = vec![Check::new(format!("D_{n}(x, b) + u = prod (x + w_i)"), ok, true, ok)];
            Ok(RunReport::new("stdpair factorize", checks, to_value(&df)))
        }
        StdpairCmd::Feasible { f } => {
            let f: Poly = read_json(f)?;
            let kinds = feasible_kinds(&f)?;
            Ok(RunReport::new("stdpair feasible", Vec::new(), to_value(&kinds)))
        }
    }
}

fn run_classify(a: &ClassifyArgs) -> Result<RunReport> {
    if a.k == 0 || a.l == 0 {
        return Err(Error::InvalidParameters("degrees must be positive".into()));
    }
    let triples = classify_degrees(a.k, a.l, a.both_simple);
    let rows: Vec<Value> = triples.iter().map(|(m, n, s)| json!({"m": m, "n": n, "s": s})).collect();
    Ok(RunReport::new("classify", Vec::new(), Value::Array(rows)))
}

fn swap(p: &Pair) -> Pair {
    (p.1.clone(), p.0.clone())
}

fn run_pell(a: &PellArgs) -> Result<RunReport> {
    let eq = PellEquation::new(a.d, a.n)?;
    let seeds = find_seeds(&eq, a.bound)?;
    let (x0, y0) = fundamental_unit(a.d)?;
    let d = BigInt::from(a.d);
    let back = |p: &Pair| (&x0 * &p.0 - &d * &y0 * &p.1, &x0 * &p.1 - &y0 * &p.0);
    let fwd = |p: &Pair| (&x0 * &p.0 + &d * &y0 * &p.1, &x0 * &p.1 + &y0 * &p.0);
    let bound = BigInt::from(a.bound);
    // one orbit per class of seeds with y > 0, started at its least |y|
    let mut covered: BTreeSet<Pair> = BTreeSet::new();
    let mut seqs = Vec::new();
    let mut checks = Vec::new();
    for s in seeds.iter().filter(|s| s.1.is_positive()) {
        if covered.contains(s) {
            continue;
        }
        let mut start = s.clone();
        loop {
            let prev = back(&start);
            if prev.1.abs() >= start.1.abs() {
                break;
            }
            start = prev;
        }
        let mut p = start.clone();
        while p.1.abs() <= bound {
            covered.insert(p.clone());
            p = fwd(&p);
        }
        let mut p = back(&start);
        while p.1.abs() <= bound && !covered.contains(&p) {
            covered.insert(p.clone());
            p = back(&p);
        }
        let mut seq = SolutionSeq::from_unit(eq.clone(), start)?;
        if a.swapped {
            seq = SolutionSeq::new(eq.clone(), swap(&seq.seeds[0]), swap(&seq.seeds[1]), seq.t, Orientation::Swapped)?;
        }
        let elems = generate(&seq, a.count)?;
        for (i, p) in elems.iter().enumerate() {
            let on = seq.on_curve(p);
            checks.push(Check::new(format!("orbit {} element {i} on curve", seqs.len()), on, true, on));
        }
        seqs.push(json!({
            "sequence": to_value(&seq),
            "elements": elems.iter().map(pair_json).collect::<Vec<_>>(),
        }));
    }
    let result = json!({
        "eq": to_value(&eq),
        "seeds": seeds.iter().map(pair_json).collect::<Vec<_>>(),
        "orbits": seqs,
    });
    Ok(RunReport::new("pell", checks, result))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FirstParams {
    phi: Poly,
    #[serde(rename = "G")]
    big_g: Poly,
    #[serde(default)]
    layout: Layout,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SecondParams {
    phi: Poly,
    #[serde(rename = "G")]
    big_g: Poly,
    source: Param,
    #[serde(default)]
    layout: Layout,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ThirdParams {
    #[serde(rename = "nF")]
    n_f: u32,
    #[serde(rename = "nG")]
    n_g: u32,
    #[serde(with = "serde_str")]
    b: Rational,
    reps: Vec<[String; 2]>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FourthParams {
    variant: BridgeVariant,
    #[serde(with = "serde_str")]
    a: Rational,
    #[serde(with = "serde_str")]
    b: Rational,
    reps: Vec<[String; 2]>,
    seq: SolutionSeq,
}

fn parse_reps(raw: &[[String; 2]]) -> Result<Vec<(Rational, Rational)>> {
    raw.iter().map(|[a, b]| Ok((parse_rational(a)?, parse_rational(b)?))).collect()
}

fn build_generic(kind: KindArg, params: &str) -> Result<EquationFamily> {
    let fam = match kind {
        KindArg::First => {
            let p: FirstParams = read_json(params)?;
            build_first_kind(&p.phi, &p.big_g, p.layout)?
        }
        KindArg::Second => {
            let p: SecondParams = read_json(params)?;
            build_second_kind(&p.phi, &p.big_g, p.source, p.layout)?
        }
        KindArg::Third => {
            let p: ThirdParams = read_json(params)?;
            build_third_kind(p.n_f, p.n_g, &p.b, &parse_reps(&p.reps)?)?
        }
        KindArg::Fourth => {
            let p: FourthParams = read_json(params)?;
            build_fourth_kind(p.variant, &p.a, &p.b, &parse_reps(&p.reps)?, p.seq)?
        }
    };
    Ok(fam.with_id("custom", "built from command-line parameters"))
}

fn run_family(example: Option<&str>, kind: Option<KindArg>, params: Option<&str>, horizon: usize) -> Result<RunReport> {
    let fams = match (example, kind, params) {
        (Some(id), _, _) => {
            let fams = catalog::families(id)?;
            if fams.is_empty() {
                return Err(Error::InvalidParameters(format!("example {id} has no equation family")));
            }
            fams
        }
        (None, Some(k), Some(p)) => vec![build_generic(k, p)?],
        _ => return Err(Error::InvalidParameters("give --example, or --kind with --params".into())),
    };
    let certs: Vec<Certificate> = fams.iter().map(|f| verify_family(f, horizon)).collect();
    let checks = certs.iter().flat_map(|c| c.transcript.iter().cloned()).collect();
    let result = if certs.len() == 1 { to_value(&certs[0]) } else { to_value(&certs) };
    Ok(RunReport::new("family build", checks, result))
}

fn run_blocks(n: u32, max_start: u64, kmax: usize, lmax: usize, class: Option<&str>) -> Result<RunReport> {
    let filter = class.map(DivClass::parse).transpose()?;
    let mut found = search(n, max_start, kmax, lmax)?;
    if let Some(c) = filter {
        found.retain(|i| i.class == c);
    }
    let bad = found.iter().filter(|i| !i.is_valid()).count();
    let checks = vec![Check::new(
        "every instance re-verifies",
        format!("{bad} invalid of {}", found.len()),
        format!("0 invalid of {}", found.len()),
        bad == 0,
    )];
    let result = json!({ "instances": to_value(&found), "census": to_value(&census(&found)) });
    Ok(RunReport::new("blocks search", checks, result))
}

/// Resolves `all` and validates every id before running anything.
pub fn resolve_ids(ids: &[String]) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for id in ids {
        if id == "all" {
            out.extend(EXAMPLE_IDS.iter().map(|s| s.to_string()));
        } else if EXAMPLE_IDS.contains(&id.as_str()) {
            out.push(id.clone());
        } else {
            return Err(Error::UnknownExampleId(id.clone()));
        }
    }
    let mut seen = BTreeSet::new();
    out.retain(|id| seen.insert(id.clone()));
    Ok(out)
}

/// Runs the selected examples on worker threads; the report keeps the
/// requested order.
pub fn verify_paper(ids: &[String], horizon: usize, seed: u64) -> Result<Vec<ExampleReport>> {
    let ids = resolve_ids(ids)?;
    std::thread::scope(|scope| {
        let handles: Vec<_> = ids
            .iter()
            .map(|id| scope.spawn(move || catalog::run_example(id, horizon, seed)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("example thread panicked")).collect()
    })
}

fn run_verify(ids: &[String], horizon: usize, seed: u64) -> Result<RunReport> {
    let reports = verify_paper(ids, horizon, seed)?;
    let checks = reports
        .iter()
        .flat_map(|r| {
            r.checks.iter().map(move |c| Check { label: format!("[{}] {}", r.id, c.label), ..c.clone() })
        })
        .collect();
    let summary: Vec<Value> = reports
        .iter()
        .map(|r| json!({"id": r.id, "title": r.title, "checks": r.checks.len(), "passed": r.passed}))
        .collect();
    Ok(RunReport::new("verify-paper", checks, Value::Array(summary)))
}

// Writes ignore errors so a closed pipe (`| head`) is not a panic.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn print_text(rep: &RunReport) {
    let mut out = format!("{}: {}\n", rep.command, if rep.passed { "ok" } else { "FAILED" });
    for c in &rep.checks {
        if c.passed {
            out += &format!("  pass  {}\n", c.label);
        } else {
            out += &format!("  FAIL  {}: {} != {}\n", c.label, c.lhs, c.rhs);
        }
    }
    out += &serde_json::to_string_pretty(&rep.result).expect("serializable");
    emit(&out);
}

/// Parses `args`, runs the command and prints the outcome. Returns the
/// process exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let start = Instant::now();
    let outcome = execute(&cli);
    let code = match &outcome {
        Ok(rep) => {
            if cli.json {
                emit(&serde_json::to_string_pretty(rep).expect("serializable"));
            } else {
                print_text(rep);
            }
            rep.exit_code()
        }
        Err(e) => {
            let code = exit_code_for(e);
            if cli.json {
                let v = json!({"error": {"kind": error_kind(e), "message": e.to_string()}, "exit_code": code});
                emit(&serde_json::to_string_pretty(&v).expect("serializable"));
            } else {
                eprintln!("error: {e}");
            }
            code
        }
    };
    eprintln!("wall time: {:.3} s", start.elapsed().as_secs_f64());
    code
}

pub fn main() -> ExitCode {
    ExitCode::from(run(std::env::args_os()))
}
