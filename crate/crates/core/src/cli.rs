//! Command-line front end. The binary only forwards to [`run`], so the
//! commands can be driven from tests with captured output.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::bounds::BoundId;
use crate::digraph::Digraph;
use crate::edgelist;
use crate::error::Error;
use crate::report::{self, Format, Report};
use crate::spectral::{SolverOptions, DEFAULT_MAX_ITER, DEFAULT_TOL};
use crate::verify::{self, CorpusSpec, Invariant, Preset, ReconstructionTarget, TABLE_TOL};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_FAILED: i32 = 3;
pub const EXIT_NOT_CONVERGED: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "signless", version, about = "Signless Laplacian spectral radius of digraphs and its upper bounds")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Spectral radius and every bound for one digraph.
    Compute(ComputeArgs),
    /// Check all invariants on a seeded corpus of random digraphs.
    Sweep(SweepArgs),
    /// Search small digraphs for ones matching a table row.
    Reconstruct(ReconstructArgs),
}

#[derive(Debug, Args)]
pub struct SolverArgs {
    /// Relative width of the Collatz–Wielandt enclosure at which iteration stops.
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
    pub max_iter: usize,
}

impl SolverArgs {
    fn options(&self) -> SolverOptions {
        SolverOptions { tol: self.tol, max_iter: self.max_iter }
    }
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    /// Edge-list file, `-` for stdin.
    #[arg(long, conflicts_with = "edges")]
    pub input: Option<PathBuf>,
    /// Inline edge list, arcs separated by `;` or `,` (e.g. "1 2; 2 3; 3 1").
    #[arg(long)]
    pub edges: Option<String>,
    #[arg(long, default_value = "table")]
    pub format: Format,
    /// Also compare against a reference row (gstar, g1, g2).
    #[arg(long)]
    pub preset: Option<String>,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 500)]
    pub count: usize,
    /// Vertex range `a..b` (inclusive) or a single count.
    #[arg(long, default_value = "3..12")]
    pub n: String,
    /// Comma-separated arc probabilities, used round-robin.
    #[arg(long, default_value = "0.2,0.3,0.5")]
    pub p: String,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value = "table")]
    pub format: Format,
    #[command(flatten)]
    pub solver: SolverArgs,
}

#[derive(Debug, Args)]
pub struct ReconstructArgs {
    /// Named row: gstar, g1 or g2.
    #[arg(long)]
    pub preset: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Fix the arc count.
    #[arg(long)]
    pub m: Option<usize>,
    /// Expected spectral radius.
    #[arg(long)]
    pub q: Option<f64>,
    /// Expected bound values, e.g. "(1)=6,(cm)=5".
    #[arg(long)]
    pub values: Option<String>,
    /// Require strong connectivity of candidates.
    #[arg(long)]
    pub strong: bool,
    /// Matching tolerance per value.
    #[arg(long, default_value_t = TABLE_TOL)]
    pub match_tol: f64,
    /// Exit 0 even when nothing matches.
    #[arg(long)]
    pub allow_empty: bool,
    #[arg(long, default_value = "table")]
    pub format: Format,
    #[command(flatten)]
    pub solver: SolverArgs,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{text}");
            } else {
                let _ = write!(stdout, "{text}");
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::Compute(a) => compute(&a, stdout),
        Command::Sweep(a) => sweep(&a, stdout),
        Command::Reconstruct(a) => reconstruct(&a, stdout),
    };
    match result {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(stderr, "error: {}", failure.message);
            failure.code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::LoopArc(_) | Error::VertexOutOfRange { .. } | Error::NoArcs => EXIT_PARSE,
            Error::NotConverged { .. } => EXIT_NOT_CONVERGED,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    Failure { code: EXIT_USAGE, message: e.to_string() }
}

fn load_digraph(a: &ComputeArgs) -> Result<Digraph, Failure> {
    let text = match (&a.input, &a.edges) {
        (Some(path), _) if path.as_os_str() == "-" => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(io_failure)?;
            s
        }
        (Some(path), _) => {
            std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?
        }
        (None, Some(inline)) => inline.replace([';', ','], "\n"),
        (None, None) => return Err(usage("give --input <file> or --edges \"1 2; 2 1\"")),
    };
    Ok(edgelist::parse(&text)?)
}

fn parse_preset(name: &str) -> Result<Preset, Failure> {
    Preset::parse(name).ok_or_else(|| usage(format!("unknown preset `{name}` (expected gstar, g1 or g2)")))
}

fn compute(a: &ComputeArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let g = load_digraph(a)?;
    let mut report = Report::compute(&g, a.solver.options())?;
    let mut code = EXIT_OK;
    if let Some(name) = &a.preset {
        let preset = parse_preset(name)?;
        let cmp = preset.target().compare(&g, a.solver.options())?;
        if !cmp.matches() {
            code = EXIT_FAILED;
        }
        report.comparison = Some((preset.name().to_string(), cmp));
    }
    write!(out, "{}", report.render(a.format)).map_err(io_failure)?;
    Ok(code)
}

/// `"3..12"`, `"3..=12"` or `"5"`.
fn parse_range(s: &str) -> Result<(usize, usize), Failure> {
    let bad = || usage(format!("invalid vertex range `{s}`"));
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    match s.split_once("..") {
        Some((lo, hi)) => Ok((parse(lo)?, parse(hi.trim_start_matches('='))?)),
        None => {
            let n = parse(s)?;
            Ok((n, n))
        }
    }
}

fn sweep(a: &SweepArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let (n_min, n_max) = parse_range(&a.n)?;
    let probabilities =
        a.p.split(',')
            .map(|t| t.trim().parse::<f64>().map_err(|_| usage(format!("invalid probability `{t}`"))))
            .collect::<Result<Vec<_>, _>>()?;
    let spec = CorpusSpec { count: a.count, n_min, n_max, probabilities, seed: a.seed };
    let report = verify::sweep(&spec, &Invariant::ALL, a.solver.options())?;
    write!(out, "{}", report::render_sweep(&report, a.format)).map_err(io_failure)?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAILED })
}

fn parse_values(s: &str) -> Result<Vec<(BoundId, f64)>, Failure> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let (id, v) = t.split_once('=').ok_or_else(|| usage(format!("expected `<bound>=<value>`, got `{t}`")))?;
            let id = BoundId::parse(id).ok_or_else(|| usage(format!("unknown bound `{id}`")))?;
            let v = v.trim().parse::<f64>().map_err(|_| usage(format!("invalid value in `{t}`")))?;
            Ok((id, v))
        })
        .collect()
}

fn reconstruct(a: &ReconstructArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let mut target = match &a.preset {
        Some(name) => parse_preset(name)?.target(),
        None => {
            let n = a.n.ok_or_else(|| usage("give --preset or --n"))?;
            ReconstructionTarget::new("custom", n)
        }
    };
    if let Some(n) = a.n {
        target.n = n;
    }
    if a.m.is_some() {
        target.m = a.m;
    }
    if a.q.is_some() {
        target.expected_q = a.q;
    }
    if let Some(values) = &a.values {
        target.expected = parse_values(values)?;
    }
    target.require_strong |= a.strong;
    target.tolerance = a.match_tol;

    let outcome = verify::reconstruct(&target, a.solver.options())?;
    write!(out, "{}", report::render_reconstruction(&outcome, a.format)).map_err(io_failure)?;
    Ok(if outcome.matches.is_empty() && !a.allow_empty { EXIT_FAILED } else { EXIT_OK })
}
