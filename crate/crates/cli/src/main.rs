//! Command-line front end for the multiple zeta value toolkit.
//!
//! Exit codes: 0 when every check passes, 1 when an identity check fails,
//! 2 on usage errors.

mod bench;
mod compute;
mod envelope;
mod expand;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

/// The cache directory can also be set through this variable; the --cache
/// flag wins when both are present.
const CACHE_ENV: &str = "MZV_CACHE_DIR";

#[derive(Debug)]
pub struct UsageError(String);

pub fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

#[derive(Parser, Debug)]
#[command(
    name = "mzv",
    version,
    about = "Finite and symmetric multiple zeta value toolkit",
    subcommand_required = true,
    arg_required_else_help = true
)]
struct Cli {
    /// Worker threads for sweeps (default: available parallelism).
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Write the report JSON to this path instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Emit machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,

    /// Directory for the append-only value cache.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply an index operator (phi|dual|star|F|G1|G2|G|H) and print it.
    Expand(ExpandArgs),
    /// Check an identity or sweep a grid, writing a JSON report.
    Verify(VerifyArgs),
    /// Compute one value (fmzv|fmzsv|mzv-trunc|smzv) with provenance.
    Compute(ComputeArgs),
    /// Measure mod-p evaluator throughput on a standard grid.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
pub struct ExpandArgs {
    /// One of phi, dual, star, F, G1, G2, G, H (case-insensitive).
    pub kind: String,
    /// Index as comma-separated positive integers, e.g. 1,2,2.
    #[arg(long)]
    pub index: Option<String>,
    /// Added weight for the G-operators.
    #[arg(long)]
    pub l: Option<u32>,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub r: Option<u32>,
    #[arg(long)]
    pub i: Option<u32>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// One of key-lemma, lemma1, lemma2, fmzv-wsf, phi, oyama, antipode,
    /// symsum, smzv-wsf.
    pub target: String,
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub r: Option<u32>,
    #[arg(long)]
    pub i: Option<u32>,
    /// Sweep every odd r <= k, every i, star and non-star.
    #[arg(long)]
    pub all_ri: bool,
    /// Check the star statement (single-check modes).
    #[arg(long)]
    pub star: bool,
    #[arg(long)]
    pub index: Option<String>,
    /// Added weight for the Oyama sweep (single value).
    #[arg(long)]
    pub l: Option<u32>,
    /// Upper bound for the Oyama l-sweep (default 3).
    #[arg(long)]
    pub lmax: Option<u32>,
    /// Lemma grids: largest weight k (default 12).
    #[arg(long)]
    pub max_k: Option<u32>,
    /// Index sweeps: largest index weight (default 6).
    #[arg(long)]
    pub max_weight: Option<u32>,
    /// Symmetric-sum sweep: largest depth (default 4).
    #[arg(long)]
    pub max_depth: Option<u32>,
    /// Smallest prime in the sweep (default 2).
    #[arg(long)]
    pub pmin: Option<u64>,
    /// Largest prime in the sweep (default 200).
    #[arg(long)]
    pub pmax: Option<u64>,
    /// Truncation cutoff for the symmetric checks (default 100000).
    #[arg(long)]
    pub m: Option<u64>,
    /// Largest denominator for rational reconstruction (default 64).
    #[arg(long)]
    pub max_den: Option<u64>,
    /// Numeric tolerance (default 1e-3).
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    /// One of fmzv, fmzsv, mzv-trunc, smzv.
    pub value: String,
    #[arg(long)]
    pub index: String,
    #[arg(long)]
    pub prime: Option<u64>,
    /// Truncation cutoff (default 100000).
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long)]
    pub star: bool,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Largest prime in the grid (default 200).
    #[arg(long)]
    pub pmax: Option<u64>,
    /// Largest index weight in the grid (default 6).
    #[arg(long)]
    pub max_weight: Option<u32>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_workers(cli.workers);
    let cache_dir = cli
        .cache
        .clone()
        .or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from));

    let outcome = match &cli.command {
        Command::Expand(args) => expand::run(args, cli.json).map(|()| true),
        Command::Verify(args) => verify::run(args).and_then(|(report, all_pass)| {
            report
                .emit(cli.out.as_deref())
                .map_err(|e| usage(format!("failed to write report: {e}")))?;
            Ok(all_pass)
        }),
        Command::Compute(args) => compute::run(args, cache_dir.as_ref(), cli.json).map(|()| true),
        Command::Bench(args) => bench::run(args, cli.json).map(|()| true),
    };

    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

#[cfg(feature = "parallel")]
fn configure_workers(workers: Option<usize>) {
    if let Some(n) = workers {
        // Ignore the error when a pool exists already; sweeps stay correct
        // under any pool size.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }
}

#[cfg(not(feature = "parallel"))]
fn configure_workers(_workers: Option<usize>) {}
