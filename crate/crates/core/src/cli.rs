//! Command-line front end: `solve`, `gen`, `verify`, `compare`, `bench`.
//!
//! Every command reads and writes JSON (reports, instances) or CSV (bench).
//! Failures surface as [`Error`] and map to exit code 2 in [`main_with_args`].

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::greedy::{self, greedy_solve};
use crate::instance::Instance;
use crate::localsearch::{self, local_search_with, Improvement, LocalSearchOptions, Start};
use crate::matroid::ConstraintSpec;
use crate::report::{greedy_bound, local_search_bound, RatioReport, SolveReport};
use crate::testkit::{
    compare_instance, exact_solve, gen_instance, verify_instance, ConstraintKind, GenParams,
    ObjectiveKind,
};

pub const EXACT: &str = "exact";

#[derive(Debug, Parser)]
#[command(name = "divmax", version, about = "Max-sum diversification solvers and checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve one instance and write a JSON report.
    Solve(SolveArgs),
    /// Generate seeded random instances.
    Gen(GenArgs),
    /// Run the inequality checks on one instance, one JSON object per line.
    Verify(VerifyArgs),
    /// Compare heuristics against the exact optimum.
    Compare(CompareArgs),
    /// Benchmark a directory of instances into a CSV report.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Greedy,
    Local,
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ImproveArg {
    First,
    Best,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long)]
    pub instance: PathBuf,
    #[arg(long, value_enum, default_value = "greedy")]
    pub algorithm: Algorithm,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Swap acceptance rule for local search.
    #[arg(long, value_enum, default_value = "first")]
    pub improve: ImproveArg,
    /// Swap budget for local search (default 10·n·rank).
    #[arg(long)]
    pub max_iters: Option<usize>,
    /// Start local search from a random basis with this seed instead of the best pair.
    #[arg(long)]
    pub random_start: Option<u64>,
    /// Attach the ratio against the exact optimum.
    #[arg(long)]
    pub compare: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ObjectiveArg {
    Modular,
    Coverage,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConstraintArg {
    Uniform,
    Partition,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1.0)]
    pub beta: f64,
    #[arg(long, value_enum, default_value = "modular")]
    pub objective: ObjectiveArg,
    #[arg(long, value_enum, default_value = "uniform")]
    pub constraint: ConstraintArg,
    /// Matroid rank (`p` for uniform constraints).
    #[arg(long, visible_alias = "p", default_value_t = 2)]
    pub rank: usize,
    /// Number of parts for partition constraints.
    #[arg(long, default_value_t = 2)]
    pub parts: usize,
    #[arg(long, default_value_t = 1.0)]
    pub lambda: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Number of instances; seeds run from `seed` to `seed + count - 1`.
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    /// Output file, or directory when `count > 1`. Stdout if omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub instance: PathBuf,
    /// Random disjoint set pairs for the cross-sum check.
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[arg(long)]
    pub instance: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Directory of `*.json` instance files.
    #[arg(long)]
    pub dir: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match run(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

pub fn run(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Solve(args) => {
            let report = cmd_solve(args)?;
            write_output(args.out.as_deref(), &json_pretty(&report)?)
        }
        Command::Gen(args) => cmd_gen(args),
        Command::Verify(args) => {
            let reports = cmd_verify(args)?;
            write_output(args.out.as_deref(), &json_lines(&reports)?)
        }
        Command::Compare(args) => {
            let reports = cmd_compare(args)?;
            write_output(args.out.as_deref(), &json_lines(&reports)?)
        }
        Command::Bench(args) => {
            let csv = cmd_bench(&args.dir)?;
            write_output(args.out.as_deref(), &csv)
        }
    }
}

pub fn cmd_solve(args: &SolveArgs) -> Result<SolveReport> {
    let inst = Instance::load(&args.instance)?;
    let opts = LocalSearchOptions {
        improve: match args.improve {
            ImproveArg::First => Improvement::First,
            ImproveArg::Best => Improvement::Best,
        },
        max_iters: args.max_iters,
        start: args.random_start.map_or(Start::BestPair, Start::RandomBasis),
    };
    let mut report = solve_with(&inst, args.algorithm, &opts)?;
    if args.compare && args.algorithm != Algorithm::Exact {
        let (_, exact) = exact_solve(&inst)?;
        report.comparison = Some(RatioReport::new(
            &report.algorithm,
            report.objective_value,
            exact,
            report.bound,
            report.alpha,
        ));
    }
    Ok(report)
}

pub fn solve_with(inst: &Instance, algorithm: Algorithm, opts: &LocalSearchOptions) -> Result<SolveReport> {
    match algorithm {
        Algorithm::Greedy => greedy_solve(inst),
        Algorithm::Local => local_search_with(inst, opts),
        Algorithm::Exact => exact_report(inst),
    }
}

/// Exact optimum packaged as a report with bound 1.
pub fn exact_report(inst: &Instance) -> Result<SolveReport> {
    let (selected, _) = exact_solve(inst)?;
    Ok(SolveReport::new(inst, EXACT, 1.0, selected, 0, Vec::new()))
}

pub fn gen_params(args: &GenArgs, seed: u64) -> GenParams {
    GenParams {
        n: args.n,
        beta: args.beta,
        objective: match args.objective {
            ObjectiveArg::Modular => ObjectiveKind::Modular,
            ObjectiveArg::Coverage => ObjectiveKind::Coverage,
        },
        constraint: match args.constraint {
            ConstraintArg::Uniform => ConstraintKind::Uniform { p: args.rank },
            ConstraintArg::Partition => ConstraintKind::Partition {
                parts: args.parts,
                rank: args.rank,
            },
        },
        lambda: args.lambda,
        seed,
    }
}

pub fn cmd_gen(args: &GenArgs) -> Result<()> {
    if args.count <= 1 {
        let inst = gen_instance(&gen_params(args, args.seed))?;
        return write_output(args.out.as_deref(), &inst.to_json());
    }
    let dir = args.out.as_deref().ok_or_else(|| {
        Error::InvalidInstance("--out <dir> is required when --count > 1".into())
    })?;
    fs::create_dir_all(dir)?;
    for i in 0..args.count {
        let seed = args.seed + i as u64;
        let inst = gen_instance(&gen_params(args, seed))?;
        inst.save(dir.join(format!("instance_{i:04}.json")))?;
    }
    Ok(())
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<Vec<crate::testkit::LemmaReport>> {
    let inst = Instance::load(&args.instance)?;
    verify_instance(&inst, args.trials, args.seed)
}

pub fn cmd_compare(args: &CompareArgs) -> Result<Vec<RatioReport>> {
    let inst = Instance::load(&args.instance)?;
    compare_instance(&inst)
}

/// One CSV row of a benchmark run. Summary rows use `instance = "SUMMARY"`
/// and carry the minimum ratio observed for the algorithm.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub instance: String,
    pub algorithm: String,
    pub n: Option<usize>,
    pub rank: Option<usize>,
    pub alpha: Option<f64>,
    pub phi: Option<f64>,
    pub exact_phi: Option<f64>,
    pub ratio: Option<f64>,
    pub bound: Option<f64>,
    pub satisfied: Option<bool>,
    pub wall_ms: Option<f64>,
    pub error: Option<String>,
}

pub const BENCH_HEADER: [&str; 12] = [
    "instance",
    "algorithm",
    "n",
    "rank",
    "alpha",
    "phi",
    "exact_phi",
    "ratio",
    "bound",
    "satisfied",
    "wall_ms",
    "error",
];

impl BenchRow {
    fn empty(instance: &str, algorithm: &str) -> Self {
        Self {
            instance: instance.to_string(),
            algorithm: algorithm.to_string(),
            n: None,
            rank: None,
            alpha: None,
            phi: None,
            exact_phi: None,
            ratio: None,
            bound: None,
            satisfied: None,
            wall_ms: None,
            error: None,
        }
    }
}

/// Benchmarks every `*.json` file in `dir` and returns the CSV text.
pub fn cmd_bench(dir: &Path) -> Result<String> {
    let rows = bench_rows(dir)?;
    let mut writer = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(Vec::new());
    writer.write_record(BENCH_HEADER)?;
    for row in &rows {
        writer.serialize(row)?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Benchmark rows sorted by instance name, followed by per-algorithm summaries.
pub fn bench_rows(dir: &Path) -> Result<Vec<BenchRow>> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_some_and(|ext| ext == "json"))
        .collect();
    files.sort();

    let mut rows: Vec<BenchRow> = files.par_iter().flat_map_iter(|path| bench_instance(path)).collect();
    rows.sort_by(|a, b| a.instance.cmp(&b.instance).then_with(|| algo_order(&a.algorithm).cmp(&algo_order(&b.algorithm))));

    for algorithm in [greedy::ALGORITHM, localsearch::ALGORITHM] {
        let measured: Vec<&BenchRow> = rows
            .iter()
            .filter(|r| r.algorithm == algorithm && r.ratio.is_some())
            .collect();
        if measured.is_empty() {
            continue;
        }
        let mut summary = BenchRow::empty("SUMMARY", algorithm);
        summary.ratio = measured.iter().filter_map(|r| r.ratio).reduce(f64::min);
        summary.satisfied = Some(measured.iter().all(|r| r.satisfied == Some(true)));
        rows.push(summary);
    }
    Ok(rows)
}

fn algo_order(name: &str) -> u8 {
    match name {
        EXACT => 0,
        greedy::ALGORITHM => 1,
        localsearch::ALGORITHM => 2,
        _ => 3,
    }
}

fn bench_instance(path: &Path) -> Vec<BenchRow> {
    let name = path
        .file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    let inst = match Instance::load(path) {
        Ok(inst) => inst,
        Err(e) => {
            let mut row = BenchRow::empty(&name, "-");
            row.error = Some(e.to_string());
            return vec![row];
        }
    };
    let base = |algorithm: &str| BenchRow {
        n: Some(inst.n()),
        rank: Some(inst.rank()),
        alpha: Some(inst.alpha()),
        ..BenchRow::empty(&name, algorithm)
    };

    let mut rows = Vec::new();
    let started = Instant::now();
    let exact = exact_solve(&inst).map(|(_, v)| v);
    let mut exact_row = base(EXACT);
    exact_row.wall_ms = Some(started.elapsed().as_secs_f64() * 1e3);
    match &exact {
        Ok(v) => {
            exact_row.phi = Some(*v);
            exact_row.exact_phi = Some(*v);
        }
        Err(e) => exact_row.error = Some(e.to_string()),
    }
    rows.push(exact_row);

    let mut heuristics: Vec<(&str, f64)> = Vec::new();
    if let ConstraintSpec::Uniform { .. } = inst.constraint() {
        heuristics.push((greedy::ALGORITHM, greedy_bound(inst.alpha())));
    }
    heuristics.push((localsearch::ALGORITHM, local_search_bound(inst.alpha())));

    for (algorithm, bound) in heuristics {
        let mut row = base(algorithm);
        row.bound = Some(bound);
        let started = Instant::now();
        let result = if algorithm == greedy::ALGORITHM {
            greedy_solve(&inst)
        } else {
            local_search_with(&inst, &LocalSearchOptions::default())
        };
        row.wall_ms = Some(started.elapsed().as_secs_f64() * 1e3);
        match result {
            Ok(report) => {
                row.phi = Some(report.objective_value);
                if let Ok(v) = &exact {
                    let ratio = RatioReport::new(algorithm, report.objective_value, *v, bound, inst.alpha());
                    row.exact_phi = Some(*v);
                    row.ratio = Some(ratio.ratio);
                    row.satisfied = Some(ratio.satisfied);
                }
                if report.truncated {
                    row.error = Some("iteration limit reached".into());
                }
            }
            Err(e) => row.error = Some(e.to_string()),
        }
        rows.push(row);
    }
    rows
}

fn json_pretty<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn json_lines<T: Serialize>(items: &[T]) -> Result<String> {
    let mut out = String::new();
    for item in items {
        out.push_str(&serde_json::to_string(item)?);
        out.push('\n');
    }
    Ok(out)
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}
