//! Benchmark harness: run instances or corpora under budgets, collect
//! per-instance statistics, and turn CSV results into summaries, cactus-plot
//! series and common-solved cross tables.

use std::collections::{BTreeMap, HashSet};
use std::fmt::{self, Write as _};
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::dimacs::{self, CnfFormula};
use crate::engine::{SolveOutcome, Solver, SolverConfig, Status};
use crate::oracle;
use crate::reduction::{ReduceSchedule, ReductionStrategy};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("corpus is empty")]
    EmptyCorpus,
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("malformed stats csv: {0}")]
    BadCsv(String),
    #[error("invalid run configuration: {0}")]
    InvalidConfig(String),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> HarnessError + '_ {
    move |source| HarnessError::Io {
        path: path.to_path_buf(),
        source,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub strategy: ReductionStrategy,
    pub timeout: Option<Duration>,
    pub conflict_budget: Option<u64>,
    pub seed: u64,
    pub schedule: ReduceSchedule,
    /// Cross-check solved instances with at most 25 variables by enumeration.
    pub verify: bool,
    pub jobs: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            strategy: ReductionStrategy::default(),
            timeout: Some(Duration::from_secs(3600)),
            conflict_budget: None,
            seed: 0,
            schedule: ReduceSchedule::default(),
            verify: false,
            jobs: 1,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), HarnessError> {
        let timed = self.timeout.is_some_and(|t| !t.is_zero());
        let budgeted = self.conflict_budget.is_some_and(|b| b > 0);
        if !timed && !budgeted {
            return Err(HarnessError::InvalidConfig(
                "need a positive timeout or conflict budget".into(),
            ));
        }
        if self.schedule.base == 0 {
            return Err(HarnessError::InvalidConfig(
                "reduce base must be positive".into(),
            ));
        }
        Ok(())
    }

    pub fn solver_config(&self) -> SolverConfig {
        SolverConfig {
            strategy: self.strategy.clone(),
            seed: self.seed,
            schedule: self.schedule,
            conflict_budget: self.conflict_budget,
            time_budget: self.timeout,
            ..SolverConfig::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InstanceStatus {
    Sat,
    Unsat,
    Unknown,
    Error,
}

impl InstanceStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            InstanceStatus::Sat => "SAT",
            InstanceStatus::Unsat => "UNSAT",
            InstanceStatus::Unknown => "UNKNOWN",
            InstanceStatus::Error => "ERROR",
        }
    }

    pub fn is_solved(self) -> bool {
        matches!(self, InstanceStatus::Sat | InstanceStatus::Unsat)
    }

    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "SAT" => InstanceStatus::Sat,
            "UNSAT" => InstanceStatus::Unsat,
            "UNKNOWN" => InstanceStatus::Unknown,
            "ERROR" => InstanceStatus::Error,
            _ => return None,
        })
    }
}

impl From<Status> for InstanceStatus {
    fn from(s: Status) -> Self {
        match s {
            Status::Sat => InstanceStatus::Sat,
            Status::Unsat => InstanceStatus::Unsat,
            Status::Unknown(_) => InstanceStatus::Unknown,
        }
    }
}

impl fmt::Display for InstanceStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One CSV row.
#[derive(Clone, Debug, PartialEq)]
pub struct InstanceStats {
    pub instance: String,
    pub strategy: String,
    pub status: InstanceStatus,
    pub time_s: f64,
    pub conflicts: u64,
    pub decisions: u64,
    pub propagations: u64,
    pub restarts: u64,
    pub reductions: u64,
    pub learned: u64,
    pub deleted: u64,
    /// Mean over reductions of the deleted fraction; 0 without reductions.
    pub mean_deleted_fraction: f64,
    pub reference_selections: u64,
    pub reduction_violations: u64,
    /// Oracle agreement, when `--verify` applied.
    pub verified: Option<bool>,
}

impl InstanceStats {
    fn empty(instance: &str, strategy: &str, status: InstanceStatus) -> Self {
        InstanceStats {
            instance: instance.to_string(),
            strategy: strategy.to_string(),
            status,
            time_s: 0.0,
            conflicts: 0,
            decisions: 0,
            propagations: 0,
            restarts: 0,
            reductions: 0,
            learned: 0,
            deleted: 0,
            mean_deleted_fraction: 0.0,
            reference_selections: 0,
            reduction_violations: 0,
            verified: None,
        }
    }

    /// Total time divided by the number of reductions; undefined without any.
    pub fn time_per_reduction(&self) -> Option<f64> {
        (self.reductions > 0).then(|| self.time_s / self.reductions as f64)
    }
}

/// Stats plus the solver outcome, when the instance could be read.
#[derive(Clone, Debug)]
pub struct InstanceRun {
    pub stats: InstanceStats,
    pub outcome: Option<SolveOutcome>,
    pub error: Option<String>,
}

/// Solves an in-memory formula under `config`.
pub fn run_formula(name: &str, formula: &CnfFormula, config: &RunConfig) -> InstanceRun {
    let strategy = config.strategy.to_string();
    let start = Instant::now();
    let mut solver = Solver::new(formula, config.solver_config());
    let outcome = solver.solve();
    let elapsed = start.elapsed().as_secs_f64();
    let s = solver.stats();
    let status = InstanceStatus::from(outcome.status);
    let verified = (config.verify && status.is_solved())
        .then(|| oracle::brute_force_sat(formula).ok())
        .flatten()
        .map(|v| v.is_sat() == (status == InstanceStatus::Sat));
    let stats = InstanceStats {
        time_s: elapsed,
        conflicts: s.conflicts,
        decisions: s.decisions,
        propagations: s.propagations,
        restarts: s.restarts,
        reductions: s.reductions,
        learned: s.learned,
        deleted: s.deleted,
        mean_deleted_fraction: s.mean_deleted_fraction(),
        reference_selections: s.reference_selections,
        reduction_violations: s.reduction_violations,
        verified,
        ..InstanceStats::empty(name, &strategy, status)
    };
    InstanceRun {
        stats,
        outcome: Some(outcome),
        error: None,
    }
}

pub fn instance_name(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

/// Reads and solves one DIMACS file. Read and parse failures produce an
/// `ERROR` row with the diagnostic in [`InstanceRun::error`].
pub fn run_instance(path: &Path, config: &RunConfig) -> InstanceRun {
    let name = instance_name(path);
    let parsed = fs::read(path)
        .map_err(|e| e.to_string())
        .and_then(|bytes| dimacs::parse_dimacs(&bytes).map_err(|e| e.to_string()));
    match parsed {
        Ok(formula) => run_formula(&name, &formula, config),
        Err(e) => InstanceRun {
            stats: InstanceStats::empty(&name, &config.strategy.to_string(), InstanceStatus::Error),
            outcome: None,
            error: Some(format!("{}: {e}", path.display())),
        },
    }
}

/// Instance paths from a directory (its `.cnf` files, sorted by name) or a
/// list file (one path per line, relative to the list's directory; blank
/// lines and `#` comments skipped).
pub fn load_corpus(path: &Path) -> Result<Vec<PathBuf>, HarnessError> {
    let mut paths = Vec::new();
    if path.is_dir() {
        for entry in fs::read_dir(path).map_err(io_err(path))? {
            let p = entry.map_err(io_err(path))?.path();
            if p.is_file() && p.extension().is_some_and(|e| e == "cnf") {
                paths.push(p);
            }
        }
        paths.sort();
    } else {
        let text = fs::read_to_string(path).map_err(io_err(path))?;
        let base = path.parent().unwrap_or(Path::new("."));
        for line in text.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            paths.push(base.join(line));
        }
    }
    if paths.is_empty() {
        return Err(HarnessError::EmptyCorpus);
    }
    Ok(paths)
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool, HarnessError> {
    Ok(rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()?)
}

/// Runs every instance; rows come back in input order.
pub fn run_corpus(
    paths: &[PathBuf],
    config: &RunConfig,
) -> Result<Vec<InstanceStats>, HarnessError> {
    config.validate()?;
    if paths.is_empty() {
        return Err(HarnessError::EmptyCorpus);
    }
    let pool = pool(config.jobs)?;
    Ok(pool.install(|| {
        paths
            .par_iter()
            .map(|p| run_instance(p, config).stats)
            .collect()
    }))
}

/// Like [`run_corpus`] over in-memory formulas.
pub fn run_formulas(
    formulas: &[(String, CnfFormula)],
    config: &RunConfig,
) -> Result<Vec<InstanceStats>, HarnessError> {
    config.validate()?;
    if formulas.is_empty() {
        return Err(HarnessError::EmptyCorpus);
    }
    let pool = pool(config.jobs)?;
    Ok(pool.install(|| {
        formulas
            .par_iter()
            .map(|(name, f)| run_formula(name, f, config).stats)
            .collect()
    }))
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct CorpusSummary {
    pub instances: usize,
    pub solved: usize,
    pub sat: usize,
    pub unsat: usize,
    pub errors: usize,
    /// Total time on solved instances divided by their count.
    pub average_time: Option<f64>,
    /// Solved instances with at least one reduction.
    pub reduced_instances: usize,
    /// Mean and population standard deviation of per-instance mean deleted
    /// fractions, over `reduced_instances`.
    pub deleted_fraction_mean: Option<f64>,
    pub deleted_fraction_std: Option<f64>,
}

impl CorpusSummary {
    /// `#Solved=N (S-U)`.
    pub fn solved_label(&self) -> String {
        format!("#Solved={} ({}-{})", self.solved, self.sat, self.unsat)
    }
}

pub fn summarize(rows: &[InstanceStats]) -> CorpusSummary {
    let solved: Vec<&InstanceStats> = rows.iter().filter(|r| r.status.is_solved()).collect();
    let sat = solved
        .iter()
        .filter(|r| r.status == InstanceStatus::Sat)
        .count();
    let fractions: Vec<f64> = solved
        .iter()
        .filter(|r| r.reductions > 0)
        .map(|r| r.mean_deleted_fraction)
        .collect();
    let mean =
        (!fractions.is_empty()).then(|| fractions.iter().sum::<f64>() / fractions.len() as f64);
    let std = mean.map(|m| {
        (fractions.iter().map(|f| (f - m).powi(2)).sum::<f64>() / fractions.len() as f64).sqrt()
    });
    CorpusSummary {
        instances: rows.len(),
        solved: solved.len(),
        sat,
        unsat: solved.len() - sat,
        errors: rows
            .iter()
            .filter(|r| r.status == InstanceStatus::Error)
            .count(),
        average_time: (!solved.is_empty())
            .then(|| solved.iter().map(|r| r.time_s).sum::<f64>() / solved.len() as f64),
        reduced_instances: fractions.len(),
        deleted_fraction_mean: mean,
        deleted_fraction_std: std,
    }
}

pub const CSV_HEADER: [&str; 17] = [
    "instance",
    "strategy",
    "status",
    "time_s",
    "conflicts",
    "decisions",
    "propagations",
    "restarts",
    "reductions",
    "learned",
    "deleted",
    "mean_deleted_fraction",
    "time_per_reduction_s",
    "reference_selections",
    "reduction_violations",
    "verified",
    "deleted_fraction_std",
];

/// Instance name of the trailing summary row.
pub const SUMMARY_ROW: &str = "#summary";

fn opt<T: fmt::Display>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn secs(t: f64) -> String {
    format!("{t:.6}")
}

/// Writes the header, one row per instance and the summary row.
pub fn write_csv<W: io::Write>(
    w: W,
    rows: &[InstanceStats],
) -> Result<CorpusSummary, HarnessError> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(CSV_HEADER)?;
    for r in rows {
        out.write_record([
            r.instance.clone(),
            r.strategy.clone(),
            r.status.to_string(),
            secs(r.time_s),
            r.conflicts.to_string(),
            r.decisions.to_string(),
            r.propagations.to_string(),
            r.restarts.to_string(),
            r.reductions.to_string(),
            r.learned.to_string(),
            r.deleted.to_string(),
            format!("{:.6}", r.mean_deleted_fraction),
            opt(r.time_per_reduction().map(secs)),
            r.reference_selections.to_string(),
            r.reduction_violations.to_string(),
            opt(r.verified),
            String::new(),
        ])?;
    }
    let summary = summarize(rows);
    let strategy = rows.first().map(|r| r.strategy.clone()).unwrap_or_default();
    let mut record = vec![String::new(); CSV_HEADER.len()];
    record[0] = SUMMARY_ROW.to_string();
    record[1] = strategy;
    record[2] = summary.solved_label();
    record[3] = opt(summary.average_time.map(secs));
    record[11] = opt(summary.deleted_fraction_mean.map(|m| format!("{m:.6}")));
    record[16] = opt(summary.deleted_fraction_std.map(|s| format!("{s:.6}")));
    out.write_record(&record)?;
    out.flush().map_err(|e| HarnessError::Csv(e.into()))?;
    Ok(summary)
}

/// Reads instance rows back, skipping the summary row.
pub fn read_csv<R: io::Read>(r: R) -> Result<Vec<InstanceStats>, HarnessError> {
    let mut reader = csv::Reader::from_reader(r);
    let header = reader.headers()?.clone();
    if header.iter().ne(CSV_HEADER) {
        return Err(HarnessError::BadCsv("unexpected header".into()));
    }
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record?;
        if &record[0] == SUMMARY_ROW {
            continue;
        }
        let bad =
            |col: &str| HarnessError::BadCsv(format!("bad `{col}` in row for {}", &record[0]));
        let int = |i: usize| record[i].parse::<u64>().map_err(|_| bad(CSV_HEADER[i]));
        let real = |i: usize| record[i].parse::<f64>().map_err(|_| bad(CSV_HEADER[i]));
        rows.push(InstanceStats {
            instance: record[0].to_string(),
            strategy: record[1].to_string(),
            status: InstanceStatus::parse(&record[2]).ok_or_else(|| bad("status"))?,
            time_s: real(3)?,
            conflicts: int(4)?,
            decisions: int(5)?,
            propagations: int(6)?,
            restarts: int(7)?,
            reductions: int(8)?,
            learned: int(9)?,
            deleted: int(10)?,
            mean_deleted_fraction: real(11)?,
            reference_selections: int(13)?,
            reduction_violations: int(14)?,
            verified: match &record[15] {
                "" => None,
                "true" => Some(true),
                "false" => Some(false),
                _ => return Err(bad("verified")),
            },
        });
    }
    Ok(rows)
}

pub fn read_csv_file(path: &Path) -> Result<Vec<InstanceStats>, HarnessError> {
    let file = fs::File::open(path).map_err(io_err(path))?;
    read_csv(io::BufReader::new(file))
}

/// Results of one strategy over a corpus.
#[derive(Clone, Debug, PartialEq)]
pub struct StrategyRun {
    pub strategy: String,
    pub rows: Vec<InstanceStats>,
}

impl StrategyRun {
    /// Groups rows by their strategy column, in first-seen order.
    pub fn group(rows: Vec<InstanceStats>) -> Vec<StrategyRun> {
        let mut runs: Vec<StrategyRun> = Vec::new();
        for r in rows {
            match runs.iter_mut().find(|s| s.strategy == r.strategy) {
                Some(run) => run.rows.push(r),
                None => runs.push(StrategyRun {
                    strategy: r.strategy.clone(),
                    rows: vec![r],
                }),
            }
        }
        runs
    }

    pub fn solved(&self) -> HashSet<&str> {
        self.rows
            .iter()
            .filter(|r| r.status.is_solved())
            .map(|r| r.instance.as_str())
            .collect()
    }
}

/// Cactus-plot data: solved times sorted ascending, as `(rank, time)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CactusSeries {
    pub strategy: String,
    pub points: Vec<(usize, f64)>,
}

pub fn cactus(runs: &[StrategyRun]) -> Vec<CactusSeries> {
    runs.iter()
        .map(|run| {
            let mut times: Vec<f64> = run
                .rows
                .iter()
                .filter(|r| r.status.is_solved())
                .map(|r| r.time_s)
                .collect();
            times.sort_by(f64::total_cmp);
            CactusSeries {
                strategy: run.strategy.clone(),
                points: times
                    .into_iter()
                    .enumerate()
                    .map(|(i, t)| (i + 1, t))
                    .collect(),
            }
        })
        .collect()
}

pub fn write_cactus_csv<W: io::Write>(w: W, series: &[CactusSeries]) -> Result<(), HarnessError> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["strategy", "rank", "time_s"])?;
    for s in series {
        for &(rank, t) in &s.points {
            out.write_record([s.strategy.clone(), rank.to_string(), secs(t)])?;
        }
    }
    out.flush().map_err(|e| HarnessError::Csv(e.into()))?;
    Ok(())
}

/// One line per strategy: solved split SAT/UNSAT and average solved time.
pub fn solved_table(runs: &[StrategyRun]) -> String {
    let width = runs
        .iter()
        .map(|r| r.strategy.len())
        .max()
        .unwrap_or(0)
        .max(8);
    let mut out = format!(
        "{:<width$}  {:<26}  {}\n",
        "strategy", "#Solved (#SAT - #UNSAT)", "Average Time"
    );
    for run in runs {
        let s = summarize(&run.rows);
        let _ = writeln!(
            out,
            "{:<width$}  {:<26}  {}",
            run.strategy,
            format!("{} ({} - {})", s.solved, s.sat, s.unsat),
            s.average_time
                .map(|t| format!("{t:.3}"))
                .unwrap_or_else(|| "-".into()),
        );
    }
    out
}

/// Pairwise counts of commonly solved instances; the diagonal holds each
/// strategy's solved count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossTab {
    pub strategies: Vec<String>,
    pub counts: Vec<Vec<usize>>,
}

pub fn common_solved(runs: &[StrategyRun]) -> CrossTab {
    let solved: Vec<HashSet<&str>> = runs.iter().map(StrategyRun::solved).collect();
    let counts = solved
        .iter()
        .map(|a| solved.iter().map(|b| a.intersection(b).count()).collect())
        .collect();
    CrossTab {
        strategies: runs.iter().map(|r| r.strategy.clone()).collect(),
        counts,
    }
}

impl fmt::Display for CrossTab {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .strategies
            .iter()
            .map(String::len)
            .max()
            .unwrap_or(0)
            .max(6);
        write!(f, "{:<width$}", "")?;
        for s in &self.strategies {
            write!(f, "  {s:>width$}")?;
        }
        writeln!(f)?;
        for (s, row) in self.strategies.iter().zip(&self.counts) {
            write!(f, "{s:<width$}")?;
            for c in row {
                write!(f, "  {c:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Instances solved by every run in `required` but not by `candidate`.
pub fn missed_by<'a>(required: &[&'a StrategyRun], candidate: &StrategyRun) -> Vec<&'a str> {
    let Some((first, rest)) = required.split_first() else {
        return Vec::new();
    };
    let others: Vec<HashSet<&str>> = rest.iter().map(|r| r.solved()).collect();
    let got = candidate.solved();
    let mut common: BTreeMap<&str, ()> = BTreeMap::new();
    for r in first.rows.iter().filter(|r| r.status.is_solved()) {
        let name = r.instance.as_str();
        if others.iter().all(|s| s.contains(name)) && !got.contains(name) {
            common.insert(name, ());
        }
    }
    common.into_keys().collect()
}
