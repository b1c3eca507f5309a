use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use domsat::generate::random_3sat;
use domsat::harness::{self, InstanceStatus, RunConfig, StrategyRun};
use domsat::{write_dimacs, MeasureSet, ReduceSchedule, ReductionStrategy, Status};

#[derive(Debug, Parser)]
#[command(
    name = "domsat",
    version,
    about = "CDCL SAT solver with pluggable learned-clause reduction"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve one DIMACS CNF file (exit 10 SAT, 20 UNSAT, 0 UNKNOWN, 1 error)
    Solve {
        file: PathBuf,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Solve a directory of .cnf files or a list file and emit per-instance CSV
    Bench {
        corpus: PathBuf,
        #[command(flatten)]
        run: RunArgs,
        /// number of instances solved concurrently
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// write the statistics CSV here instead of stdout
        #[arg(long)]
        stats_csv: Option<PathBuf>,
        /// write cactus-plot data (strategy, rank, time) here
        #[arg(long)]
        cactus: Option<PathBuf>,
    },
    /// Summarize stats CSVs: solved table, common-solved cross table, cactus data
    Report {
        #[arg(required = true)]
        csv: Vec<PathBuf>,
        #[arg(long)]
        cactus: Option<PathBuf>,
    },
    /// Write uniform random 3-SAT instances
    Generate {
        #[arg(long, default_value_t = 50)]
        vars: usize,
        #[arg(long, default_value_t = 4.26)]
        ratio: f64,
        #[arg(long, default_value_t = 100)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Args)]
struct RunArgs {
    /// none, size, lbd, cvsids or degcomp
    #[arg(long, default_value = "degcomp")]
    strategy: String,
    /// measures for degcomp, comma separated
    #[arg(long, default_value = "size,lbd,cvsids")]
    measures: String,
    /// wall-clock limit in seconds, 0 for none
    #[arg(long, default_value_t = 3600.0)]
    timeout: f64,
    /// conflict limit, 0 for none
    #[arg(long, default_value_t = 0)]
    conflicts: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// cross-check results by enumeration on instances with at most 25 variables
    #[arg(long)]
    verify: bool,
    /// conflicts before the first reduction
    #[arg(long, default_value_t = ReduceSchedule::default().base)]
    reduce_base: u64,
    /// extra conflicts added to the interval after each reduction
    #[arg(long, default_value_t = ReduceSchedule::default().inc)]
    reduce_inc: u64,
}

impl RunArgs {
    fn config(&self, jobs: usize) -> Result<RunConfig> {
        let measures: MeasureSet = self.measures.parse()?;
        let strategy = ReductionStrategy::from_name(&self.strategy, Some(measures))?;
        if !(self.timeout >= 0.0 && self.timeout.is_finite()) {
            bail!("timeout must be a non-negative number of seconds");
        }
        let config = RunConfig {
            strategy,
            timeout: (self.timeout > 0.0).then(|| Duration::from_secs_f64(self.timeout)),
            conflict_budget: (self.conflicts > 0).then_some(self.conflicts),
            seed: self.seed,
            schedule: ReduceSchedule {
                base: self.reduce_base,
                inc: self.reduce_inc,
            },
            verify: self.verify,
            jobs,
        };
        config.validate()?;
        Ok(config)
    }
}

fn solve(file: &Path, run: &RunArgs) -> Result<ExitCode> {
    let config = run.config(1)?;
    let result = harness::run_instance(file, &config);
    if let Some(err) = result.error {
        bail!(err);
    }
    let stats = &result.stats;
    let outcome = result.outcome.expect("outcome present without error");
    let mut out = io::stdout().lock();
    writeln!(out, "c strategy {}", stats.strategy)?;
    writeln!(
        out,
        "c conflicts {} decisions {} propagations {} restarts {}",
        stats.conflicts, stats.decisions, stats.propagations, stats.restarts
    )?;
    writeln!(
        out,
        "c reductions {} learned {} deleted {} mean_deleted_fraction {:.4}",
        stats.reductions, stats.learned, stats.deleted, stats.mean_deleted_fraction
    )?;
    writeln!(out, "c time {:.3} s", stats.time_s)?;
    if let Some(agree) = stats.verified {
        writeln!(out, "c verify {}", if agree { "agree" } else { "DISAGREE" })?;
    }
    let code = match outcome.status {
        Status::Sat => {
            writeln!(out, "s SATISFIABLE")?;
            let model = outcome.model.unwrap_or_default();
            let lits: Vec<String> = model
                .iter()
                .enumerate()
                .map(|(i, &v)| {
                    let var = i as i64 + 1;
                    (if v { var } else { -var }).to_string()
                })
                .chain(std::iter::once("0".to_string()))
                .collect();
            for chunk in lits.chunks(20) {
                writeln!(out, "v {}", chunk.join(" "))?;
            }
            10
        }
        Status::Unsat => {
            writeln!(out, "s UNSATISFIABLE")?;
            20
        }
        Status::Unknown(_) => {
            writeln!(out, "s UNKNOWN")?;
            0
        }
    };
    out.flush()?;
    if stats.verified == Some(false) {
        bail!("result disagrees with the enumeration oracle");
    }
    Ok(ExitCode::from(code))
}

fn emit_cactus(path: &Path, runs: &[StrategyRun]) -> Result<()> {
    let file = fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
    harness::write_cactus_csv(io::BufWriter::new(file), &harness::cactus(runs))?;
    Ok(())
}

fn bench(
    corpus: &Path,
    run: &RunArgs,
    jobs: usize,
    stats_csv: Option<&Path>,
    cactus: Option<&Path>,
) -> Result<ExitCode> {
    let config = run.config(jobs)?;
    let paths = harness::load_corpus(corpus)?;
    let rows = harness::run_corpus(&paths, &config)?;
    let summary = match stats_csv {
        Some(path) => {
            let file =
                fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
            harness::write_csv(io::BufWriter::new(file), &rows)?
        }
        None => harness::write_csv(io::stdout().lock(), &rows)?,
    };
    for r in rows.iter().filter(|r| r.status == InstanceStatus::Error) {
        eprintln!("c error reading {}", r.instance);
    }
    eprintln!(
        "c {} {} average time {}",
        config.strategy,
        summary.solved_label(),
        summary
            .average_time
            .map(|t| format!("{t:.3} s"))
            .unwrap_or_else(|| "-".into())
    );
    if let (Some(m), Some(s)) = (summary.deleted_fraction_mean, summary.deleted_fraction_std) {
        eprintln!(
            "c deleted fraction mean {m:.4} std {s:.4} over {} instances",
            summary.reduced_instances
        );
    }
    if let Some(path) = cactus {
        emit_cactus(path, &StrategyRun::group(rows))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn report(csvs: &[PathBuf], cactus: Option<&Path>) -> Result<ExitCode> {
    let mut rows = Vec::new();
    for path in csvs {
        rows.extend(harness::read_csv_file(path)?);
    }
    let runs = StrategyRun::group(rows);
    print!("{}", harness::solved_table(&runs));
    println!();
    print!("{}", harness::common_solved(&runs));
    if let Some(path) = cactus {
        emit_cactus(path, &runs)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn generate(vars: usize, ratio: f64, count: u64, seed: u64, out: &Path) -> Result<ExitCode> {
    if vars < 3 {
        bail!("need at least 3 variables");
    }
    fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
    for i in 0..count {
        let f = random_3sat(vars, ratio, seed + i);
        let path = out.join(format!("uf{vars}-{:04}.cnf", seed + i));
        fs::write(&path, write_dimacs(&f))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Solve { file, run } => solve(file, run),
        Command::Bench {
            corpus,
            run,
            jobs,
            stats_csv,
            cactus,
        } => bench(corpus, run, *jobs, stats_csv.as_deref(), cactus.as_deref()),
        Command::Report { csv, cactus } => report(csv, cactus.as_deref()),
        Command::Generate {
            vars,
            ratio,
            count,
            seed,
            out,
        } => generate(*vars, *ratio, *count, *seed, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
