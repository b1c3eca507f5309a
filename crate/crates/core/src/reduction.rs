//! Learned-clause database reduction.
//!
//! Strategies see the database as a slice of [`ClauseMeta`] and return the
//! positions to delete; the engine applies the deletions. Two rules hold for
//! every strategy: clauses with size or LBD at most 2 are protected, and
//! clauses currently serving as a propagation reason are never deleted.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::metrics::{self, MeasureError, MeasureId, MeasureSet, MeasureVector, Preference};

/// What a reduction strategy knows about one learned clause.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClauseMeta {
    pub size: u32,
    pub lbd: u32,
    pub activity: f64,
    /// Reason for a current trail assignment.
    pub locked: bool,
}

impl ClauseMeta {
    pub fn measures(&self) -> MeasureVector {
        MeasureVector::new(self.size, self.lbd, self.activity)
    }

    pub fn is_protected(&self) -> bool {
        self.size <= 2 || self.lbd <= 2
    }

    /// Subject to dominance: size and LBD both above 2.
    pub fn is_eligible(&self) -> bool {
        !self.is_protected()
    }

    fn deletable(&self) -> bool {
        self.is_eligible() && !self.locked
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ReductionStrategy {
    /// Keep every learned clause.
    None,
    /// Sort worst-first by one measure and scan the first half.
    SortHalf(MeasureId),
    /// Delete what the minimal degree-of-compromise clause dominates.
    Dominance(MeasureSet),
}

impl ReductionStrategy {
    /// Dominance over a single measure degenerates to comparing against the
    /// best clause.
    pub fn is_degenerate(&self) -> bool {
        matches!(self, ReductionStrategy::Dominance(m) if m.len() < 2)
    }

    /// CLI-style name: `none`, `size`, `lbd`, `cvsids` or `degcomp`.
    pub fn name(&self) -> &'static str {
        match self {
            ReductionStrategy::None => "none",
            ReductionStrategy::SortHalf(m) => m.name(),
            ReductionStrategy::Dominance(_) => "degcomp",
        }
    }

    /// Parses a strategy name; `measures` applies to `degcomp` only.
    pub fn from_name(name: &str, measures: Option<MeasureSet>) -> Result<Self, MeasureError> {
        match name.trim().to_ascii_lowercase().as_str() {
            "none" => Ok(ReductionStrategy::None),
            "degcomp" | "dominance" => {
                Ok(ReductionStrategy::Dominance(measures.unwrap_or_default()))
            }
            other => other.parse().map(ReductionStrategy::SortHalf),
        }
    }
}

impl Default for ReductionStrategy {
    fn default() -> Self {
        ReductionStrategy::Dominance(MeasureSet::default())
    }
}

impl FromStr for ReductionStrategy {
    type Err = MeasureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ReductionStrategy::from_name(s, None)
    }
}

impl fmt::Display for ReductionStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionStrategy::Dominance(m) if *m != MeasureSet::default() => {
                write!(f, "degcomp[{m}]")
            }
            other => f.write_str(other.name()),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ReductionReport {
    pub before: usize,
    /// Database positions to delete, ascending.
    pub deleted: Vec<usize>,
    /// Protected clauses in the database (all of them are kept).
    pub protected_kept: usize,
    /// Position and measures of the reference clause, dominance only.
    pub reference: Option<(usize, MeasureVector)>,
}

impl ReductionReport {
    fn new(db: &[ClauseMeta]) -> Self {
        ReductionReport {
            before: db.len(),
            protected_kept: db.iter().filter(|c| c.is_protected()).count(),
            ..Default::default()
        }
    }

    pub fn deleted_count(&self) -> usize {
        self.deleted.len()
    }

    pub fn kept(&self) -> usize {
        self.before - self.deleted.len()
    }

    pub fn deleted_fraction(&self) -> f64 {
        if self.before == 0 {
            0.0
        } else {
            self.deleted.len() as f64 / self.before as f64
        }
    }
}

/// Runs `strategy` over `db`. `num_vars` scales the normalization used by
/// dominance reduction.
pub fn reduce(strategy: &ReductionStrategy, db: &[ClauseMeta], num_vars: usize) -> ReductionReport {
    match strategy {
        ReductionStrategy::None => ReductionReport::new(db),
        ReductionStrategy::SortHalf(criterion) => reduce_sort_half(db, *criterion),
        ReductionStrategy::Dominance(set) => reduce_dominance(db, set, num_vars),
    }
}

/// Worst-first ordering for sort-half reduction. Ties keep database order.
fn worst_first(criterion: MeasureId, a: &ClauseMeta, b: &ClauseMeta) -> Ordering {
    let (x, y) = (a.measures().get(criterion), b.measures().get(criterion));
    match metrics::prefer(criterion, x, y) {
        Preference::Second => Ordering::Less,
        Preference::First => Ordering::Greater,
        Preference::Tie => Ordering::Equal,
    }
}

/// Sorts the database worst-first by `criterion` and deletes, among the first
/// `n / 2` clauses, those that are neither protected nor locked.
pub fn reduce_sort_half(db: &[ClauseMeta], criterion: MeasureId) -> ReductionReport {
    let mut report = ReductionReport::new(db);
    let mut order: Vec<usize> = (0..db.len()).collect();
    // Stable sort, so equal keys stay in database order.
    order.sort_by(|&i, &j| worst_first(criterion, &db[i], &db[j]));
    let limit = db.len() / 2;
    report.deleted = order[..limit]
        .iter()
        .copied()
        .filter(|&i| db[i].deletable())
        .collect();
    report.deleted.sort_unstable();
    report
}

/// The eligible clause with minimal degree of compromise, or `None` when every
/// clause is protected.
pub fn min_deg_comp(db: &[ClauseMeta], set: &MeasureSet, num_vars: usize) -> Option<usize> {
    let candidates = db
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_eligible())
        .map(|(i, c)| (i, c.measures()));
    metrics::argmin_deg_comp(candidates, num_vars, set)
}

/// `reference` is strictly preferred to `c` on every measure of `set`.
///
/// Any tie rejects, so `dominates(c, c)` is always false.
pub fn dominates(reference: &MeasureVector, c: &MeasureVector, set: &MeasureSet) -> bool {
    set.measures()
        .iter()
        .all(|&m| metrics::prefer(m, c.get(m), reference.get(m)) == Preference::Second)
}

/// Deletes every deletable clause that the reference clause dominates.
pub fn reduce_dominance(db: &[ClauseMeta], set: &MeasureSet, num_vars: usize) -> ReductionReport {
    let mut report = ReductionReport::new(db);
    let Some(cmin) = min_deg_comp(db, set, num_vars) else {
        return report;
    };
    let reference = db[cmin].measures();
    report.reference = Some((cmin, reference));
    report.deleted = db
        .iter()
        .enumerate()
        .filter(|&(i, c)| i != cmin && c.deletable() && dominates(&reference, &c.measures(), set))
        .map(|(i, _)| i)
        .collect();
    report
}

/// Reduction schedule: reduce once the conflicts since the last reduction
/// reach `base + inc * reductions_so_far`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReduceSchedule {
    pub base: u64,
    pub inc: u64,
}

impl Default for ReduceSchedule {
    fn default() -> Self {
        ReduceSchedule {
            base: 2000,
            inc: 300,
        }
    }
}

impl ReduceSchedule {
    pub fn should_reduce(&self, conflicts_since_last: u64, reductions_so_far: u64) -> bool {
        conflicts_since_last
            >= self
                .base
                .saturating_add(self.inc.saturating_mul(reductions_so_far))
    }
}
