//! `lieortho`: load Lie algebras and operators from JSON, decide Lie
//! orthogonality, and run the classification and verification suites.
//!
//! Exit status: 0 when the verdict holds, 1 when it does not, 2 on bad input.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use lieortho::classify::{classify_from_params, verify_family, ClassifyParams};
use lieortho::ortho::{
    are_equivalent, canonicalize, essential_block, fitting, invariance_report, is_lie_orthogonal, rational_spectrum,
    residuals, Operator,
};
use lieortho::{catalog, suites, Error, LieAlgebra, Matrix, Subspace};

/// Caps the bit size of every rational read from input files.
const MAX_BITS_VAR: &str = "LIEORTHO_MAX_BITS";

/// `print!` that exits quietly once the reader has gone away.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if write!(std::io::stdout(), $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

macro_rules! outln {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if writeln!(std::io::stdout(), $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

#[derive(Parser)]
#[command(name = "lieortho", version)]
#[command(about = "Exact computations with Lie-orthogonal operators on finite-dimensional Lie algebras")]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the JSON of a catalog algebra
    Catalog {
        /// abelian, g2, sl2, gl, sl, heisenberg, almost-abelian,
        /// sl2-semidirect or minimal-nilradical
        family: String,
        /// Size parameter where the family needs one
        n: Option<usize>,
        /// Matrix A for almost-abelian, as JSON rows
        #[arg(long)]
        a: Option<String>,
    },
    /// Structure report: center, series, Killing form, radical
    Analyze {
        /// Algebra JSON file, or - for stdin
        algebra: PathBuf,
    },
    /// Decide Lie orthogonality and run the invariance checks
    Check {
        algebra: PathBuf,
        operator: PathBuf,
        /// JSON list of basis vectors of an ideal whose quotient should be
        /// checked for invariance; may be repeated
        #[arg(long = "ideal")]
        ideals: Vec<PathBuf>,
    },
    /// Decide whether two operators differ by a center-valued map
    Equiv {
        algebra: PathBuf,
        first: PathBuf,
        second: PathBuf,
    },
    /// Fitting decomposition L = ker J^n + im J^n
    Fitting { algebra: PathBuf, operator: PathBuf },
    /// Rational eigenvalues and characteristic polynomial
    Spectrum { algebra: PathBuf, operator: PathBuf },
    /// Build an operator of a classified family and verify the family
    Classify {
        /// semisimple, reductive, heisenberg, almost-abelian,
        /// minimal-nilradical or sl2-semidirect
        family: String,
        /// Parameters as inline JSON or @file
        #[arg(long, default_value = "{}")]
        params: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Run a named property suite (or all)
    Verify {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

/// An input error; reported with exit status 2.
struct InputError(String);

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

type CliResult = Result<bool, InputError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Catalog { family, n, a } => catalog_cmd(family, *n, a.as_deref()),
        Command::Analyze { algebra } => analyze(&load_algebra(algebra)?, cli.json),
        Command::Check {
            algebra,
            operator,
            ideals,
        } => {
            let l = Arc::new(load_algebra(algebra)?);
            let j = load_operator(&l, operator)?;
            let ideals = ideals
                .iter()
                .map(|p| load_subspace(l.dim(), p))
                .collect::<Result<Vec<_>, _>>()?;
            check(&j, &ideals, cli.json)
        }
        Command::Equiv { algebra, first, second } => {
            let l = Arc::new(load_algebra(algebra)?);
            let a = load_operator(&l, first)?;
            let b = load_operator(&l, second)?;
            equiv(&a, &b, cli.json)
        }
        Command::Fitting { algebra, operator } => {
            let l = Arc::new(load_algebra(algebra)?);
            fitting_cmd(&load_operator(&l, operator)?, cli.json)
        }
        Command::Spectrum { algebra, operator } => {
            let l = Arc::new(load_algebra(algebra)?);
            spectrum_cmd(&load_operator(&l, operator)?, cli.json)
        }
        Command::Classify {
            family,
            params,
            seed,
            samples,
        } => classify(family, params, *seed, *samples, cli.json),
        Command::Verify { suite, seed, samples } => verify(suite, *seed, *samples, cli.json),
    }
}

fn read_source(path: &Path) -> Result<String, InputError> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| InputError(format!("reading stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| InputError(format!("reading {}: {e}", path.display())))
}

fn bit_cap() -> Result<Option<u64>, InputError> {
    match std::env::var(MAX_BITS_VAR) {
        Err(_) => Ok(None),
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| InputError(format!("{MAX_BITS_VAR} must be a nonnegative integer, got {v:?}"))),
    }
}

fn enforce_cap(bits: u64, what: &str) -> Result<(), InputError> {
    match bit_cap()? {
        Some(cap) if bits > cap => Err(InputError(format!(
            "{what} has an entry of {bits} bits, above {MAX_BITS_VAR}={cap}"
        ))),
        _ => Ok(()),
    }
}

fn load_algebra(path: &Path) -> Result<LieAlgebra, InputError> {
    let l = LieAlgebra::from_json(&read_source(path)?)?;
    let bits = l.structure_matrices().iter().map(Matrix::max_bits).max().unwrap_or(0);
    enforce_cap(bits, "algebra")?;
    Ok(l)
}

fn load_operator(l: &Arc<LieAlgebra>, path: &Path) -> Result<Operator, InputError> {
    let j = Operator::from_json(Arc::clone(l), &read_source(path)?)?;
    enforce_cap(j.matrix().max_bits(), "operator")?;
    Ok(j)
}

fn load_subspace(n: usize, path: &Path) -> Result<Subspace, InputError> {
    let vectors: Vec<Vec<lieortho::Rational>> =
        serde_json::from_str(&read_source(path)?).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let bits = vectors.iter().flatten().map(|x| x.bits()).max().unwrap_or(0);
    enforce_cap(bits, "ideal")?;
    Ok(Subspace::from_vectors(n, &vectors)?)
}

fn print_json(v: &Value) {
    outln!("{}", serde_json::to_string_pretty(v).expect("JSON values serialize"));
}

fn catalog_cmd(family: &str, n: Option<usize>, a: Option<&str>) -> CliResult {
    let l = match family {
        "almost-abelian" => {
            let a = a.ok_or_else(|| InputError("almost-abelian needs --a '[[...]]'".into()))?;
            let m: Matrix = serde_json::from_str(a).map_err(|e| InputError(format!("--a: {e}")))?;
            catalog::almost_abelian(&m)?
        }
        _ => catalog::by_name(family, n)?,
    };
    let doc: Value = serde_json::from_str(&l.to_json()).expect("algebra JSON is valid");
    print_json(&doc);
    Ok(true)
}

fn series_json(series: &[Subspace]) -> Value {
    Value::Array(series.iter().map(|s| json!(s)).collect())
}

fn dims(series: &[Subspace], sep: &str) -> String {
    series.iter().map(|s| s.dim().to_string()).collect::<Vec<_>>().join(sep)
}

fn indented(m: &Matrix) -> String {
    m.to_string().lines().map(|l| format!("  {l}\n")).collect()
}

fn degree(d: Option<usize>) -> String {
    d.map_or_else(|| "none".to_string(), |d| d.to_string())
}

fn analyze(l: &LieAlgebra, as_json: bool) -> CliResult {
    let center = l.center();
    let derived = l.derived_series();
    let lower = l.lower_central_series();
    let upper = l.ascending_central_series();
    let killing_rank = l.killing_form().rank();
    let radical = l.radical();
    if as_json {
        print_json(&json!({
            "dim": l.dim(),
            "names": l.names(),
            "center": center,
            "derived_series": series_json(&derived),
            "lower_central_series": series_json(&lower),
            "ascending_central_series": series_json(&upper),
            "killing_rank": killing_rank,
            "radical": radical,
            "solvability_degree": l.solvability_degree(),
            "nilpotency_degree": l.nilpotency_degree(),
        }));
    } else {
        outln!("dim                       {}", l.dim());
        outln!("basis                     {}", l.names().join(", "));
        outln!("center (dim {})            {center}", center.dim());
        outln!("derived series            {}", dims(&derived, " > "));
        outln!("lower central series      {}", dims(&lower, " > "));
        outln!("ascending central series  {}", dims(&upper, " < "));
        outln!("Killing form rank         {killing_rank}");
        outln!("radical (dim {})           {radical}", radical.dim());
        outln!("solvability degree        {}", degree(l.solvability_degree()));
        outln!("nilpotency degree         {}", degree(l.nilpotency_degree()));
    }
    Ok(true)
}

/// Basis pairs `(i, j)`, `i < j`, with `[J e_i, J e_j] ≠ [e_i, e_j]`, and
/// the difference.
fn violated_relations(j: &Operator) -> Vec<(usize, usize, Vec<lieortho::Rational>)> {
    let res = residuals(j);
    let n = j.dim();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let diff: Vec<_> = res.iter().map(|r| r.get(a, b).clone()).collect();
            if diff.iter().any(|x| !x.is_zero()) {
                out.push((a, b, diff));
            }
        }
    }
    out
}

fn vector(v: &[lieortho::Rational]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn check(j: &Operator, ideals: &[Subspace], as_json: bool) -> CliResult {
    let names = j.algebra().names().to_vec();
    let violated = violated_relations(j);
    let ok = violated.is_empty();
    let report = if ok { Some(invariance_report(j, ideals)?) } else { None };
    if as_json {
        let rel: Vec<Value> = violated
            .iter()
            .map(|(a, b, d)| json!({"pair": [names[*a], names[*b]], "difference": d}))
            .collect();
        print_json(&json!({
            "lie_orthogonal": ok,
            "violated_relations": rel,
            "essential_block": essential_block(j),
            "report": report,
        }));
    } else if ok {
        outln!("Lie-orthogonal: yes");
        out!("essential block:\n{}", indented(&essential_block(j)));
        out!("{}", report.as_ref().expect("computed when orthogonal"));
    } else {
        outln!("Lie-orthogonal: no ({} violated relations)", violated.len());
        for (a, b, d) in &violated {
            outln!("  [J{0}, J{1}] - [{0}, {1}] = {2}", names[*a], names[*b], vector(d));
        }
    }
    Ok(ok && !report.is_some_and(|r| r.has_failures()))
}

fn equiv(a: &Operator, b: &Operator, as_json: bool) -> CliResult {
    let eq = are_equivalent(a, b);
    let (ca, cb) = (canonicalize(a), canonicalize(b));
    if as_json {
        print_json(&json!({
            "equivalent": eq,
            "canonical": [ca.matrix(), cb.matrix()],
        }));
    } else {
        outln!("equivalent: {}", if eq { "yes" } else { "no" });
        out!("canonical first:\n{}", indented(ca.matrix()));
        out!("canonical second:\n{}", indented(cb.matrix()));
    }
    Ok(eq)
}

fn fitting_cmd(j: &Operator, as_json: bool) -> CliResult {
    let (l0, lhat) = fitting(j);
    if as_json {
        print_json(&json!({"nilpotent_part": l0, "invertible_part": lhat}));
    } else {
        outln!("L0   (dim {}) {l0}", l0.dim());
        outln!("Lhat (dim {}) {lhat}", lhat.dim());
    }
    Ok(true)
}

fn spectrum_cmd(j: &Operator, as_json: bool) -> CliResult {
    let s = rational_spectrum(j);
    let p = j.matrix().char_poly()?;
    if as_json {
        let ev: Vec<Value> = s
            .eigenvalues
            .iter()
            .map(|(l, m)| json!({"value": l, "multiplicity": m}))
            .collect();
        print_json(&json!({
            "char_poly": p.coeffs(),
            "eigenvalues": ev,
            "splits": s.splits,
        }));
    } else {
        outln!("characteristic polynomial: {p}");
        for (l, m) in &s.eigenvalues {
            outln!("  eigenvalue {l} with multiplicity {m}");
        }
        outln!("splits over Q: {}", if s.splits { "yes" } else { "no" });
    }
    Ok(true)
}

fn classify(family: &str, params: &str, seed: u64, samples: usize, as_json: bool) -> CliResult {
    let text = match params.strip_prefix('@') {
        Some(path) => read_source(Path::new(path))?,
        None => params.to_string(),
    };
    let p = ClassifyParams::parse(family, &text)?;
    let (j, spec) = classify_from_params(&p)?;
    enforce_cap(j.matrix().max_bits(), "parameters")?;
    let ok = is_lie_orthogonal(&j);
    let report = verify_family(&spec, samples, samples, seed);
    if as_json {
        let algebra: Value = serde_json::from_str(&j.algebra().to_json()).expect("algebra JSON is valid");
        print_json(&json!({
            "algebra": algebra,
            "operator": {"matrix": j.matrix()},
            "lie_orthogonal": ok,
            "verification": report,
        }));
    } else {
        outln!("{}", j.to_json());
        outln!("Lie-orthogonal: {}", if ok { "yes" } else { "no" });
        outln!("{report}");
    }
    Ok(ok && report.passed())
}

fn verify(suite: &str, seed: u64, samples: usize, as_json: bool) -> CliResult {
    let outcomes = suites::run(suite, seed, samples)?;
    let ok = outcomes.iter().all(|o| o.ok());
    if as_json {
        print_json(&json!({"seed": seed, "samples": samples, "passed": ok, "suites": outcomes}));
    } else {
        for o in &outcomes {
            outln!("{o}");
        }
        outln!("{}", if ok { "all suites passed" } else { "some suites failed" });
    }
    Ok(ok)
}
