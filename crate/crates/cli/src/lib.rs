//! Command-line front end for `arlink-core`.
//!
//! Every subcommand prints one JSON document on standard output. Exit code
//! 0 means success, 1 a domain error (reported as `{"error", "detail"}`),
//! 2 a usage error.

pub mod config;
pub mod parse;

use std::ffi::OsString;
use std::fmt;
use std::path::PathBuf;

use arlink_core::cspartition::{theorem_sweep, verify_theorem, CompareMode, PairingInstance};
use arlink_core::cyclotomic::{CycloElement, CycloField};
use arlink_core::ideals::{split_prime, GeneratorSearch};
use arlink_core::linking::{
    certify_trivial, height_pairing, probe_well_definedness, roots_of_unity, Certificate, LinkingInstance,
};
use arlink_core::symbols::{power_residue_symbol, tame_hilbert, ModFraction};
use arlink_core::Error;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::config::RunConfig;
use crate::parse::{parse_element, parse_ideal, parse_prime, parse_rows, ParseError};

const GRAMMAR: &str = "\
Element expressions (z denotes zeta_m):
  expr   := term (('+' | '-') term)*
  term   := unary ('*' unary)*
  unary  := '-' unary | factor
  factor := atom ('^' integer)?        negative exponents invert
  atom   := integer | 'z' | '(' expr ')'

Ideal SPEC:
  ideal  := part ('*' part)*
  part   := (prime | '(' expr ')') ('^' integer)?
  prime  := 'P(' p ',' '[' g0 ',' g1 ',' ... ']' ')'
            g lists the coefficients of a monic irreducible factor of the
            cyclotomic polynomial mod p, constant term first

Configuration file (--config): key = value lines with keys
  bound_factor, digits, term_cap, seed, workers; '#' starts a comment.
  Command-line flags override file values.";

#[derive(Debug, Parser)]
#[command(name = "arlink", version, about = "Exact linking numbers in cyclotomic fields and finite Chern-Simons sums", after_help = GRAMMAR)]
struct Cli {
    /// Read configuration defaults from a key = value file
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Master seed for every randomized step [default: 0]
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads [default: all available]
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Decimal digits for numeric values [default: 30]
    #[arg(long, global = true)]
    digits: Option<u32>,
    /// Maximum number of terms in a brute-force sum [default: 10000000]
    #[arg(long, global = true)]
    term_cap: Option<u64>,
    /// Generator search radius as a multiple of the norm floor, e.g. 4 or 9/2 [default: 4]
    #[arg(long, global = true, value_name = "B")]
    bound_factor: Option<String>,
    /// Human-readable summary on standard error
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SymbolKind {
    Power,
    Hilbert,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Exact,
    Numeric,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the primes of Z[zeta_m] above a rational prime
    #[command(after_help = GRAMMAR)]
    Factor {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        prime: u64,
    },
    /// Power residue symbol (a/P)_n or tame Hilbert symbol (a, b)_P
    #[command(after_help = GRAMMAR)]
    Symbol {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum)]
        kind: SymbolKind,
        /// First argument, an element expression
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// Second argument for --kind hilbert
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        /// The prime, as P(p, [g0, g1, ...])
        #[arg(long, value_name = "PRIME")]
        at: String,
    },
    /// Height pairing of ideals I and J whose n-th powers are principal
    #[command(after_help = GRAMMAR)]
    Link {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        /// Ideal SPEC for I
        #[arg(long, value_name = "SPEC")]
        ideal_i: String,
        /// Ideal SPEC for J
        #[arg(long, value_name = "SPEC")]
        ideal_j: String,
        /// Also evaluate with f replaced by zeta^k f for every k
        #[arg(long)]
        probe_units: bool,
        /// Also compute ht(J, I) and compare
        #[arg(long)]
        check_symmetry: bool,
        /// Random uniformizer re-selections per prime of J
        #[arg(long, default_value_t = 10)]
        trials: usize,
    },
    /// Brute-force partition sum against its closed form
    #[command(after_help = GRAMMAR)]
    Partition {
        /// Odd prime
        #[arg(long)]
        p: u64,
        /// Dimension a of F_p^a
        #[arg(long)]
        dim: usize,
        /// Symmetric matrix, rows separated by ';', entries by ',' or spaces
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        /// Source vectors separated by ';'
        #[arg(long, allow_hyphen_values = true)]
        sources: Option<String>,
        #[arg(long, value_enum, default_value = "exact")]
        mode: Mode,
        /// Relative tolerance for --mode numeric
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Seeded random sweep of the partition identity
    #[command(after_help = GRAMMAR)]
    VerifyTheorem {
        /// Comma-separated odd primes
        #[arg(long, value_delimiter = ',', required = true)]
        p_list: Vec<u64>,
        /// Comma-separated dimensions
        #[arg(long, value_delimiter = ',', required = true)]
        dim_list: Vec<usize>,
        /// Instances per (p, dim)
        #[arg(long)]
        trials: usize,
        #[arg(long, value_enum, default_value = "exact")]
        mode: Mode,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

/// Every way a command can fail.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(ParseError),
    Domain(Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(s) => write!(f, "{s}"),
            CliError::Parse(e) => write!(f, "{e}"),
            CliError::Domain(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

/// Exit code and the text destined for standard output and standard error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn big(n: impl ToString) -> Value {
    Value::Number(serde_json::from_str(&n.to_string()).expect("decimal integer"))
}

fn fraction(v: ModFraction) -> Value {
    json!({ "num": v.k(), "den": v.n() })
}

fn element(x: &CycloElement, digits: u32) -> Value {
    let (num, den) = x.split_denominator();
    let (re, im) = x.embed_numeric(digits)[0].to_decimal_strings();
    json!({
        "m": x.field().m(),
        "coeffs": num.iter().map(big).collect::<Vec<_>>(),
        "den": big(den),
        "numeric": { "re": re, "im": im },
    })
}

fn certificate(c: &Certificate) -> Value {
    json!({ "name": c.name, "passed": c.passed, "detail": c.detail })
}

fn field_for(m: u64) -> Result<std::sync::Arc<CycloField>, CliError> {
    if m == 0 {
        return Err(CliError::Usage("--m must be positive".into()));
    }
    Ok(CycloField::new(m))
}

struct Ctx {
    cfg: RunConfig,
    log: Vec<String>,
}

impl Ctx {
    fn search(&self) -> GeneratorSearch {
        GeneratorSearch {
            bound_factor: self.cfg.bound_factor.clone(),
            max_nodes: None,
        }
    }
}

fn reduce_rows(rows: Vec<Vec<i64>>, p: u64) -> Vec<Vec<u64>> {
    rows.into_iter()
        .map(|r| r.into_iter().map(|x| x.rem_euclid(p as i64) as u64).collect())
        .collect()
}

fn compare_mode(mode: Mode, tol: f64, digits: u32) -> CompareMode {
    match mode {
        Mode::Exact => CompareMode::Exact,
        Mode::Numeric => CompareMode::Numeric { tol, digits },
    }
}

fn execute(cmd: Command, ctx: &mut Ctx) -> Result<Value, CliError> {
    let seed = ctx.cfg.seed;
    let digits = ctx.cfg.digits;
    match cmd {
        Command::Factor { m, prime } => {
            let field = field_for(m)?;
            let primes = split_prime(&field, prime, seed)?;
            for q in &primes {
                ctx.log.push(format!("{q}: residue degree {}", q.residue_degree()));
            }
            Ok(Value::Array(
                primes
                    .iter()
                    .map(|q| json!({ "p": q.p(), "g": q.g(), "f": q.residue_degree(), "label": q.label() }))
                    .collect(),
            ))
        }
        Command::Symbol { m, n, kind, a, b, at } => {
            let field = field_for(m)?;
            let prime = parse_prime(&at, &field, seed)?;
            let a = parse_element(&a, &field)?;
            let value = match (kind, b) {
                (SymbolKind::Power, None) => power_residue_symbol(&a, &prime, n)?,
                (SymbolKind::Power, Some(_)) => {
                    return Err(CliError::Usage("--b is only used with --kind hilbert".into()))
                }
                (SymbolKind::Hilbert, Some(b)) => tame_hilbert(&a, &parse_element(&b, &field)?, &prime, n)?,
                (SymbolKind::Hilbert, None) => return Err(CliError::Usage("--kind hilbert needs --b".into())),
            };
            ctx.log.push(format!("symbol at {prime}: {value}"));
            Ok(json!({ "value": fraction(value) }))
        }
        Command::Link {
            m,
            n,
            ideal_i,
            ideal_j,
            probe_units,
            check_symmetry,
            trials,
        } => {
            let field = field_for(m)?;
            let i = parse_ideal(&ideal_i, &field, seed)?;
            let j = parse_ideal(&ideal_j, &field, seed)?;
            let inst = LinkingInstance::new(i, j, n)?;
            let opts = ctx.search();
            let f = certify_trivial(inst.i(), n, &opts)?;
            let units = if probe_units { roots_of_unity(&field) } else { Vec::new() };
            let report = probe_well_definedness(&inst, &f, &units, trials, seed)?;
            let mut certificates: Vec<Value> = report.certificates.iter().map(certificate).collect();
            if check_symmetry {
                let cert = match certify_trivial(inst.j(), n, &opts) {
                    Ok(fj) => {
                        let back = height_pairing(&inst.swapped(), &fj)?;
                        Certificate {
                            name: "symmetry".into(),
                            passed: back == report.value,
                            detail: format!("ht(I, J) = {}, ht(J, I) = {back}", report.value),
                        }
                    }
                    Err(Error::TrivialityUndetermined(d)) => Certificate {
                        name: "symmetry".into(),
                        passed: false,
                        detail: format!("J not certified: {d}"),
                    },
                    Err(e) => return Err(e.into()),
                };
                certificates.push(certificate(&cert));
            }
            ctx.log.push(format!(
                "ht({}, {}) = {} with f = {}",
                inst.i(),
                inst.j(),
                report.value,
                report.f_used
            ));
            let probes: Map<String, Value> = report.probes.iter().map(|(k, v)| (k.clone(), fraction(*v))).collect();
            Ok(json!({
                "value": fraction(report.value),
                "f_used": element(&report.f_used, digits),
                "certificates": certificates,
                "probes": probes,
                "uniformizer_values": report.uniformizer_values.iter().map(|v| fraction(*v)).collect::<Vec<_>>(),
            }))
        }
        Command::Partition {
            p,
            dim,
            matrix,
            sources,
            mode,
            tol,
        } => {
            let rows = parse_rows(&matrix).map_err(CliError::Usage)?;
            if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
                return Err(CliError::Usage(format!("--matrix must be {dim} x {dim}")));
            }
            if p < 3 {
                return Err(Error::InvalidInput(format!("{p} is not an odd prime")).into());
            }
            let srcs = match sources {
                Some(s) if !s.trim().is_empty() => parse_rows(&s).map_err(CliError::Usage)?,
                _ => Vec::new(),
            };
            let inst = PairingInstance::new(p, reduce_rows(rows, p), reduce_rows(srcs, p))?;
            let r = verify_theorem(&inst, compare_mode(mode, tol, digits), ctx.cfg.term_cap)?;
            ctx.log.push(format!("lhs = {}\nrhs = {}\nequal = {}", r.lhs, r.rhs, r.equal));
            Ok(json!({
                "lhs": element(&r.lhs, digits),
                "rhs": element(&r.rhs, digits),
                "equal": r.equal,
            }))
        }
        Command::VerifyTheorem {
            p_list,
            dim_list,
            trials,
            mode,
            tol,
        } => {
            let entries = theorem_sweep(
                &p_list,
                &dim_list,
                trials,
                seed,
                compare_mode(mode, tol, digits),
                ctx.cfg.term_cap,
            )?;
            let passed = entries.iter().filter(|e| e.report.equal).count();
            let instances: Vec<Value> = entries
                .iter()
                .map(|e| {
                    let inst = &e.instance;
                    json!({
                        "p": inst.p(),
                        "dim": inst.dim(),
                        "trial": e.trial,
                        "matrix": inst.matrix(),
                        "sources": inst.sources(),
                        "equal": e.report.equal,
                    })
                })
                .collect();
            ctx.log.push(format!("{passed} of {} instances equal", entries.len()));
            Ok(json!({
                "seed": seed,
                "mode": match mode { Mode::Exact => "exact", Mode::Numeric => "numeric" },
                "total": entries.len(),
                "passed": passed,
                "failed": entries.len() - passed,
                "all_equal": passed == entries.len(),
                "instances": instances,
            }))
        }
    }
}

fn error_json(e: &CliError) -> Value {
    match e {
        CliError::Parse(p) => json!({ "error": "ParseError", "detail": p.to_string(), "column": p.column }),
        CliError::Domain(d) => json!({ "error": d.name(), "detail": d.to_string() }),
        CliError::Usage(u) => json!({ "error": "UsageError", "detail": u }),
    }
}

fn build_config(cli: &Cli) -> Result<RunConfig, String> {
    let mut cfg = RunConfig::default();
    if let Some(path) = &cli.config {
        cfg.apply_file(path)?;
    }
    if let Some(s) = cli.seed {
        cfg.set("seed", &s.to_string())?;
    }
    if let Some(w) = cli.workers {
        cfg.set("workers", &w.to_string())?;
    }
    if let Some(d) = cli.digits {
        cfg.set("digits", &d.to_string())?;
    }
    if let Some(t) = cli.term_cap {
        cfg.set("term_cap", &t.to_string())?;
    }
    if let Some(b) = &cli.bound_factor {
        cfg.set("bound_factor", b)?;
    }
    Ok(cfg)
}

/// Runs one command line (including the program name).
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let cfg = match build_config(&cli) {
        Ok(c) => c,
        Err(msg) => {
            return Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: {msg}\n"),
            }
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cfg.workers).build() {
        Ok(p) => p,
        Err(e) => {
            return Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    let verbose = cli.verbose;
    let mut ctx = Ctx { cfg, log: Vec::new() };
    let result = pool.install(|| execute(cli.command, &mut ctx));
    let mut stderr = String::new();
    if verbose {
        for line in &ctx.log {
            stderr.push_str(line);
            stderr.push('\n');
        }
    }
    match result {
        Ok(v) => Outcome {
            code: 0,
            stdout: serde_json::to_string_pretty(&v).expect("serializable") + "\n",
            stderr,
        },
        Err(CliError::Usage(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: stderr + &format!("error: {msg}\n"),
        },
        Err(e) => {
            if verbose {
                stderr.push_str(&format!("error: {e}\n"));
            }
            Outcome {
                code: 1,
                stdout: serde_json::to_string_pretty(&error_json(&e)).expect("serializable") + "\n",
                stderr,
            }
        }
    }
}
