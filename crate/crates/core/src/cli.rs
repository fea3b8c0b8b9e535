//! Command-line front end. The `bpps` binary parses [`Cli`] and hands it to
//! [`run`]; exit codes come from [`exit_code`].
//!
//! Exit codes: 0 success, 1 I/O failure, 2 usage error, 3 parse or
//! validation error, 4 resource limit.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algorithm::{solve, AlgorithmId, SolveConfig};
use crate::bench::{load_instances, run_bench, BenchConfig};
use crate::error::{Error, Result};
use crate::format::{parse_instance, write_instance, write_solution, write_trace};
use crate::generators::{generate, Family, FamilyParams, IntRange, RandomParams};
use crate::model::total_cost;
use crate::report::{write_csv, ReferenceKind};

#[derive(Debug, Parser)]
#[command(name = "bpps", version, about = "Bin packing with class setups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve one instance file.
    Solve(SolveArgs),
    /// Write an instance file.
    Generate(GenerateArgs),
    /// Ratio table over many instances.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct LimitArgs {
    /// Node limit of every exact search.
    #[arg(long, default_value_t = 10_000_000)]
    pub node_limit: u64,
    /// Largest instance the exact search accepts.
    #[arg(long, default_value_t = 14)]
    pub max_items: usize,
    /// Largest class the tp-exact inner solver accepts.
    #[arg(long, default_value_t = 20)]
    pub exact_class_limit: usize,
}

impl LimitArgs {
    fn config(&self) -> SolveConfig {
        let mut cfg = SolveConfig::default().with_node_limit(self.node_limit);
        cfg.exact.max_items = self.max_items;
        cfg.two_phase.exact_class_limit = self.exact_class_limit;
        cfg
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// nf, ff, bf, nfd, ffd, bfd, tp-<inner>, or exact.
    #[arg(long, value_parser = parse_algorithm)]
    pub algorithm: AlgorithmId,
    #[arg(long)]
    pub instance: PathBuf,
    #[arg(long)]
    pub solution_out: Option<PathBuf>,
    /// Two-phase trace (tp-* only).
    #[arg(long)]
    pub trace_out: Option<PathBuf>,
    #[command(flatten)]
    pub limits: LimitArgs,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    #[arg(long)]
    pub n: usize,
    /// Seed of the random family.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output path; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Class count range (random family).
    #[arg(long, value_parser = parse_range, default_value = "1..3")]
    pub m: IntRange,
    /// Capacity range (random family).
    #[arg(long, value_parser = parse_range, default_value = "12")]
    pub d: IntRange,
    /// Bin cost: a range for the random family, a single value overriding
    /// r = 1 for the adversarial families.
    #[arg(long, value_parser = parse_range)]
    pub r: Option<IntRange>,
    /// Item weight range (random family).
    #[arg(long, value_parser = parse_range, default_value = "1..6")]
    pub w: IntRange,
    /// Setup weight range (random family).
    #[arg(long, value_parser = parse_range, default_value = "0..3")]
    pub s: IntRange,
    /// Setup cost range (random family).
    #[arg(long, value_parser = parse_range, default_value = "0..4")]
    pub f: IntRange,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReferenceArg {
    Exact,
    Lb,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Directory of instance files, or a glob pattern.
    #[arg(long)]
    pub instances: String,
    /// Comma-separated algorithm ids.
    #[arg(long, value_delimiter = ',', value_parser = parse_algorithm, required = true)]
    pub algorithms: Vec<AlgorithmId>,
    #[arg(long, value_enum, default_value = "exact")]
    pub reference: ReferenceArg,
    #[arg(long)]
    pub csv: PathBuf,
    /// Fill the wall_ms column (makes the CSV non-reproducible).
    #[arg(long)]
    pub timing: bool,
    #[command(flatten)]
    pub limits: LimitArgs,
}

fn parse_algorithm(s: &str) -> std::result::Result<AlgorithmId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_range(s: &str) -> std::result::Result<IntRange, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Maps an error to the process exit code.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Io(_) | Error::Csv(_) => 1,
        Error::InvalidArgument(_) => 2,
        Error::Parse { .. } | Error::Validation(_) | Error::InfeasibleItem { .. } => 3,
        Error::ResourceLimit { .. } => 4,
    }
}

/// Runs one command, writing the human-readable summary to `stdout`.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<()> {
    match &cli.command {
        Command::Solve(args) => cmd_solve(args, stdout),
        Command::Generate(args) => cmd_generate(args, stdout),
        Command::Bench(args) => cmd_bench(args, stdout),
    }
}

fn read_instance(path: &PathBuf) -> Result<crate::Instance> {
    let text = std::fs::read_to_string(path)?;
    parse_instance(&text)
}

pub fn cmd_solve(args: &SolveArgs, stdout: &mut dyn Write) -> Result<()> {
    let instance = read_instance(&args.instance)?;
    let config = args.limits.config();
    match solve(args.algorithm, &instance, &config) {
        Ok(outcome) => {
            writeln!(
                stdout,
                "algorithm {} bins {} cost {}",
                args.algorithm,
                outcome.solution.len(),
                outcome.cost
            )?;
            if let Some(path) = &args.solution_out {
                std::fs::write(path, write_solution(&instance, &outcome.solution))?;
            }
            if let (Some(path), Some(trace)) = (&args.trace_out, &outcome.trace) {
                std::fs::write(path, write_trace(&instance, trace))?;
            }
            Ok(())
        }
        Err(Error::ResourceLimit { reason, incumbent }) => {
            if let Some(sol) = incumbent.as_deref() {
                writeln!(
                    stdout,
                    "algorithm {} bins {} cost {} incumbent (not proven optimal)",
                    args.algorithm,
                    sol.len(),
                    total_cost(&instance, sol)
                )?;
                if let Some(path) = &args.solution_out {
                    std::fs::write(path, write_solution(&instance, sol))?;
                }
            }
            Err(Error::ResourceLimit { reason, incumbent })
        }
        Err(e) => Err(e),
    }
}

pub fn cmd_generate(args: &GenerateArgs, stdout: &mut dyn Write) -> Result<()> {
    let mut random = RandomParams {
        classes: args.m,
        capacity: args.d,
        weight: args.w,
        setup_weight: args.s,
        setup_cost: args.f,
        ..RandomParams::new(args.n, args.seed)
    };
    if let (Family::Random, Some(r)) = (args.family, args.r) {
        random.bin_cost = r;
    }
    let mut instance = generate(&FamilyParams {
        family: args.family,
        random,
    })?;
    if let (Family::NfWorst | Family::FfbfWorst, Some(r)) = (args.family, args.r) {
        if r.lo != r.hi || r.lo == 0 {
            return Err(Error::invalid(
                "--r must be a single positive value for this family",
            ));
        }
        instance = instance.with_bin_cost(r.lo);
    }
    let text = write_instance(&instance);
    match &args.out {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

pub fn cmd_bench(args: &BenchArgs, stdout: &mut dyn Write) -> Result<()> {
    let instances = load_instances(&args.instances)?;
    let config = BenchConfig {
        algorithms: args.algorithms.clone(),
        reference: match args.reference {
            ReferenceArg::Exact => ReferenceKind::Exact,
            ReferenceArg::Lb => ReferenceKind::LowerBound,
        },
        solve: args.limits.config(),
        timing: args.timing,
    };
    let reports = run_bench(&instances, &config)?;
    let file = std::fs::File::create(&args.csv)?;
    write_csv(&reports, std::io::BufWriter::new(file))?;
    writeln!(
        stdout,
        "{} rows over {} instances written to {}",
        reports.len(),
        instances.len(),
        args.csv.display()
    )?;
    Ok(())
}
