use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use dsta_core::bench::{random_instance, run_experiment, ExperimentSpec, InstanceRanges};
use dsta_core::operators::OperatorParams;
use dsta_core::oracle::{self, ExactFront, DEFAULT_ENUMERATION_LIMIT};
use dsta_core::pairing::{count_table, enumerate_pairings};
use dsta_core::problem::{load_problem, problem_to_toml, FrontReport, ReportMeta};
use dsta_core::solver::{self, SolverConfig};

/// Environment variable overriding the largest instance `enumerate` accepts.
const LIMIT_ENV: &str = "DSTA_ENUM_LIMIT";

#[derive(Parser)]
#[command(
    name = "dsta",
    version,
    about = "Pareto fronts for paired single-machine scheduling"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the state transition search.
    Solve(SolveArgs),
    /// Exact front by enumerating every sequence.
    Enumerate(EnumerateArgs),
    /// Shorthand for `enumerate --greedy`.
    Greedy(OracleArgs),
    /// Table of pairing counts for sequence lengths 2..=n.
    Pairs {
        n: usize,
        /// Cross-check the counts against explicit enumeration (up to 15).
        #[arg(long)]
        check: bool,
    },
    /// Repeated seeded runs scored against the exact front.
    Bench(BenchArgs),
    /// Write a random problem file.
    Generate {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SearchParams {
    /// Iteration budget (default: 100 for up to 5 jobs, 1000 otherwise).
    #[arg(long)]
    iterations: Option<usize>,
    /// Candidates per transformation.
    #[arg(long, default_value_t = 20)]
    se: usize,
    /// Swap factor.
    #[arg(long, default_value_t = 2)]
    ma: usize,
    /// Shift factor.
    #[arg(long, default_value_t = 1)]
    mb: usize,
    /// Symmetry factor.
    #[arg(long, default_value_t = 0)]
    mc: usize,
}

impl SearchParams {
    fn operator_params(&self) -> OperatorParams {
        OperatorParams {
            ma: self.ma,
            mb: self.mb,
            mc: self.mc,
            se: self.se,
        }
    }

    fn iterations_for(&self, n: usize) -> usize {
        self.iterations.unwrap_or(if n <= 5 { 100 } else { 1000 })
    }
}

#[derive(Args)]
struct SolveArgs {
    problem: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    search: SearchParams,
    /// Write the front as comma-separated values.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    problem: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report progress on stderr.
    #[arg(long)]
    progress: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    oracle: OracleArgs,
    /// Pair each sequence greedily instead of trying every pairing.
    #[arg(long)]
    greedy: bool,
}

#[derive(Args)]
struct BenchArgs {
    problem: PathBuf,
    #[arg(long, default_value_t = 20)]
    runs: usize,
    /// First of `runs` consecutive seeds.
    #[arg(long, default_value_t = 1)]
    first_seed: u64,
    /// Explicit comma-separated seeds (overrides --runs/--first-seed).
    #[arg(long, value_delimiter = ',')]
    seeds: Option<Vec<u64>>,
    /// File with one seed per line (overrides the other seed flags).
    #[arg(long)]
    seed_file: Option<PathBuf>,
    #[command(flatten)]
    search: SearchParams,
    /// Per-run metrics as comma-separated values.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn execute(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Solve(args) => solve(args),
        Command::Enumerate(args) => enumerate(args.oracle, args.greedy),
        Command::Greedy(args) => enumerate(args, true),
        Command::Pairs { n, check } => pairs(n, check),
        Command::Bench(args) => bench(args),
        Command::Generate { n, seed, out } => generate(n, seed, out),
    }
}

fn solve(args: SolveArgs) -> Result<()> {
    let instance = load_problem(&args.problem)?;
    let config = SolverConfig {
        params: args.search.operator_params(),
        iterations: args.search.iterations_for(instance.len()),
        seed: args.seed,
    };
    let result = solver::run(&instance, &config)?;
    let report = FrontReport::new(
        result.archive.members(),
        ReportMeta {
            method: "state transition search".into(),
            seed: Some(config.seed),
            iterations: Some(config.iterations),
            evaluations: Some(result.evaluations),
            wall_time_ms: Some(result.wall_time.as_millis()),
        },
    );
    emit(&report, args.out.as_deref())
}

fn enumeration_limit() -> Result<usize> {
    match std::env::var(LIMIT_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("{LIMIT_ENV}={v} is not a count")),
        Err(_) => Ok(DEFAULT_ENUMERATION_LIMIT),
    }
}

fn exact_front(path: &Path, greedy: bool, progress: bool) -> Result<ExactFront> {
    let instance = load_problem(path)?;
    let limit = enumeration_limit()?;
    let report = |done: u64, total: u64| {
        eprint!("\r{:>3}% ({done}/{total})", done * 100 / total.max(1));
        if done == total {
            eprintln!();
        }
    };
    let front = match (greedy, progress) {
        (false, false) => oracle::enumerate_front(&instance, limit)?,
        (false, true) => oracle::enumerate_front_with_progress(&instance, limit, &report)?,
        (true, false) => oracle::greedy_front(&instance, limit)?,
        (true, true) => oracle::greedy_front_with_progress(&instance, limit, &report)?,
    };
    Ok(front)
}

fn enumerate(args: OracleArgs, greedy: bool) -> Result<()> {
    let started = std::time::Instant::now();
    let front = exact_front(&args.problem, greedy, args.progress)?;
    let method = if greedy {
        "enumeration with greedy pairing"
    } else {
        "complete enumeration"
    };
    let report = FrontReport::new(
        &front.solutions,
        ReportMeta {
            method: method.into(),
            wall_time_ms: Some(started.elapsed().as_millis()),
            ..Default::default()
        },
    );
    emit(&report, args.out.as_deref())
}

fn emit(report: &FrontReport, out: Option<&Path>) -> Result<()> {
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    lock.write_all(report.render_table().as_bytes())?;
    if let Some(path) = out {
        let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
        report.write_csv(BufWriter::new(file))?;
    }
    Ok(())
}

fn pairs(n: usize, check: bool) -> Result<()> {
    let table = count_table(n)?;
    let mut out = io::stdout().lock();
    writeln!(out, "n, P1, P2, P")?;
    for (i, c) in table.iter().enumerate() {
        writeln!(out, "{}, {}, {}, {}", i + 2, c.p1, c.p2, c.p)?;
    }
    if check {
        for (i, c) in table.iter().enumerate().take(14) {
            let len = i + 2;
            let listed = enumerate_pairings(len)?.len() as u64;
            if listed != c.p {
                bail!(
                    "n = {len}: recurrence gives {} but enumeration finds {listed}",
                    c.p
                );
            }
        }
        writeln!(
            out,
            "# counts agree with enumeration up to n = {}",
            n.min(15)
        )?;
    }
    Ok(())
}

fn read_seed_file(path: &Path) -> Result<Vec<u64>> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            l.parse()
                .with_context(|| format!("bad seed `{l}` in {}", path.display()))
        })
        .collect()
}

fn bench(args: BenchArgs) -> Result<()> {
    let instance = load_problem(&args.problem)?;
    let seeds = if let Some(path) = &args.seed_file {
        read_seed_file(path)?
    } else if let Some(seeds) = args.seeds {
        seeds
    } else {
        (args.first_seed..args.first_seed + args.runs as u64).collect()
    };
    let spec = ExperimentSpec {
        seeds,
        iterations: args.search.iterations_for(instance.len()),
        params: args.search.operator_params(),
    };
    spec.validate()?;
    let front = oracle::enumerate_front(&instance, enumeration_limit()?)?.objective_points;
    let summary = run_experiment(&instance, &front, &spec)?;

    let mut out = io::stdout().lock();
    writeln!(out, "# exact front: {} points", front.len())?;
    summary.write_runs_csv(&mut out)?;
    writeln!(out, "# {}", summary.summary_line())?;
    if let Some(path) = args.out {
        let file = File::create(&path).with_context(|| format!("creating {}", path.display()))?;
        summary.write_runs_csv(BufWriter::new(file))?;
    }
    Ok(())
}

fn generate(n: usize, seed: u64, out: Option<PathBuf>) -> Result<()> {
    let instance = random_instance(n, seed, &InstanceRanges::default())?;
    let text = problem_to_toml(&instance)?;
    match out {
        Some(path) => {
            std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}
