//! Learned-clause relevance measures and the dominance algebra over them.
//!
//! Three measures are supported: clause size and LBD, where smaller values are
//! preferred, and clause activity (CVSIDS), where larger values are preferred.
//! Dominance is always decided on raw values. Normalized values exist only to
//! compute the degree of compromise, the mean of the normalized measures, whose
//! minimizer over a set of clauses is never strictly dominated within that set.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MeasureId {
    Size,
    Lbd,
    Cvsids,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    SmallerPreferred,
    LargerPreferred,
}

impl MeasureId {
    pub const ALL: [MeasureId; 3] = [MeasureId::Size, MeasureId::Lbd, MeasureId::Cvsids];

    pub const fn direction(self) -> Direction {
        match self {
            MeasureId::Size | MeasureId::Lbd => Direction::SmallerPreferred,
            MeasureId::Cvsids => Direction::LargerPreferred,
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            MeasureId::Size => "size",
            MeasureId::Lbd => "lbd",
            MeasureId::Cvsids => "cvsids",
        }
    }
}

impl fmt::Display for MeasureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum MeasureError {
    #[error("unknown measure `{0}` (expected size, lbd or cvsids)")]
    Unknown(String),
    #[error("measure set is empty")]
    Empty,
    #[error("measure `{0}` listed twice")]
    Duplicate(MeasureId),
}

impl FromStr for MeasureId {
    type Err = MeasureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "size" => Ok(MeasureId::Size),
            "lbd" => Ok(MeasureId::Lbd),
            "cvsids" | "activity" => Ok(MeasureId::Cvsids),
            other => Err(MeasureError::Unknown(other.to_string())),
        }
    }
}

/// Outcome of comparing two values of one measure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preference {
    First,
    Second,
    Tie,
}

/// Compares two raw values of `m` according to its preference direction.
///
/// Ties use exact equality; there is no epsilon.
pub fn prefer(m: MeasureId, a: f64, b: f64) -> Preference {
    if a == b {
        return Preference::Tie;
    }
    let a_smaller = a < b;
    match (m.direction(), a_smaller) {
        (Direction::SmallerPreferred, true) | (Direction::LargerPreferred, false) => {
            Preference::First
        }
        _ => Preference::Second,
    }
}

/// An ordered, duplicate-free, non-empty list of measures.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MeasureSet(Vec<MeasureId>);

impl MeasureSet {
    pub fn new(measures: impl IntoIterator<Item = MeasureId>) -> Result<Self, MeasureError> {
        let mut out = Vec::new();
        for m in measures {
            if out.contains(&m) {
                return Err(MeasureError::Duplicate(m));
            }
            out.push(m);
        }
        if out.is_empty() {
            return Err(MeasureError::Empty);
        }
        Ok(MeasureSet(out))
    }

    pub fn measures(&self) -> &[MeasureId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Default for MeasureSet {
    /// `{SIZE, LBD, CVSIDS}`.
    fn default() -> Self {
        MeasureSet(MeasureId::ALL.to_vec())
    }
}

impl FromStr for MeasureSet {
    type Err = MeasureError;

    /// Parses a comma-separated list such as `size,lbd,cvsids`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let ids = s
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(str::parse)
            .collect::<Result<Vec<MeasureId>, _>>()?;
        MeasureSet::new(ids)
    }
}

impl fmt::Display for MeasureSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(m.name())?;
        }
        Ok(())
    }
}

/// Raw measure values of one clause.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeasureVector {
    pub size: u32,
    pub lbd: u32,
    pub activity: f64,
}

impl MeasureVector {
    pub const fn new(size: u32, lbd: u32, activity: f64) -> Self {
        MeasureVector {
            size,
            lbd,
            activity,
        }
    }

    pub fn get(&self, m: MeasureId) -> f64 {
        match m {
            MeasureId::Size => f64::from(self.size),
            MeasureId::Lbd => f64::from(self.lbd),
            MeasureId::Cvsids => self.activity,
        }
    }
}

/// Measure values mapped into `[0, 1]`, smaller is better on every component.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NormalizedVector {
    pub size: f64,
    pub lbd: f64,
    pub cvsids: f64,
}

impl NormalizedVector {
    pub fn get(&self, m: MeasureId) -> f64 {
        match m {
            MeasureId::Size => self.size,
            MeasureId::Lbd => self.lbd,
            MeasureId::Cvsids => self.cvsids,
        }
    }
}

/// `c` is at least as preferred as `d` on every measure of `set`.
pub fn dominates_weak(c: &MeasureVector, d: &MeasureVector, set: &MeasureSet) -> bool {
    set.measures()
        .iter()
        .all(|&m| prefer(m, c.get(m), d.get(m)) != Preference::Second)
}

/// Weak dominance plus a strict preference on at least one measure of `set`.
pub fn dominates_strict(c: &MeasureVector, d: &MeasureVector, set: &MeasureSet) -> bool {
    dominates_weak(c, d, set)
        && set
            .measures()
            .iter()
            .any(|&m| prefer(m, c.get(m), d.get(m)) == Preference::First)
}

/// Maps raw values into `[0, 1]`: size and LBD are divided by the variable
/// count, activity becomes its reciprocal. Zero activity, and activities below
/// one, map to `1.0`, the worst value.
pub fn normalize(v: &MeasureVector, num_vars: usize) -> NormalizedVector {
    assert!(num_vars > 0, "normalization needs at least one variable");
    let n = num_vars as f64;
    let cvsids = if v.activity > 1.0 {
        1.0 / v.activity
    } else {
        1.0
    };
    NormalizedVector {
        size: (f64::from(v.size) / n).min(1.0),
        lbd: (f64::from(v.lbd) / n).min(1.0),
        cvsids,
    }
}

/// Degree of compromise: mean of the normalized values over `set`.
pub fn deg_comp(v: &MeasureVector, num_vars: usize, set: &MeasureSet) -> f64 {
    let n = normalize(v, num_vars);
    let sum: f64 = set.measures().iter().map(|&m| n.get(m)).sum();
    sum / set.len() as f64
}

/// Lexicographic comparison of raw values in `set` order, best first.
///
/// A linear extension of strict dominance: if `a` strictly dominates `b`
/// then `a` sorts before `b`.
pub fn lexicographic_preference(
    a: &MeasureVector,
    b: &MeasureVector,
    set: &MeasureSet,
) -> Ordering {
    for &m in set.measures() {
        match prefer(m, a.get(m), b.get(m)) {
            Preference::First => return Ordering::Less,
            Preference::Second => return Ordering::Greater,
            Preference::Tie => {}
        }
    }
    Ordering::Equal
}

/// Index of the vector with minimal degree of compromise among `candidates`.
///
/// Equal degrees are resolved by [`lexicographic_preference`] and then by the
/// earliest index. Without the lexicographic step, rounding in the sum can
/// make a strictly dominated vector tie with its dominator.
pub fn argmin_deg_comp<I>(candidates: I, num_vars: usize, set: &MeasureSet) -> Option<usize>
where
    I: IntoIterator<Item = (usize, MeasureVector)>,
{
    let mut best: Option<(usize, MeasureVector, f64)> = None;
    for (idx, v) in candidates {
        let score = deg_comp(&v, num_vars, set);
        let better = match &best {
            None => true,
            Some((_, bv, bs)) => {
                score < *bs
                    || (score == *bs && lexicographic_preference(&v, bv, set) == Ordering::Less)
            }
        };
        if better {
            best = Some((idx, v, score));
        }
    }
    best.map(|(i, _, _)| i)
}

/// Increment-based exponential activity, shared by variable and clause
/// activity.
///
/// Decaying every score is replaced by growing the increment; scores and the
/// increment are rescaled together once any score exceeds [`Self::LIMIT`].
#[derive(Clone, Debug, PartialEq)]
pub struct Activity {
    increment: f64,
    decay: f64,
}

impl Activity {
    pub const LIMIT: f64 = 1e100;
    pub const RESCALE: f64 = 1e-100;

    pub fn new(decay: f64) -> Self {
        assert!(decay > 0.0 && decay < 1.0, "decay must lie in (0, 1)");
        Activity {
            increment: 1.0,
            decay,
        }
    }

    pub fn increment(&self) -> f64 {
        self.increment
    }

    /// Adds the current increment to `score`. Returns `true` when the caller
    /// must call [`Activity::rescale`] on all scores.
    #[must_use]
    pub fn bump(&self, score: &mut f64) -> bool {
        *score += self.increment;
        *score > Self::LIMIT
    }

    pub fn rescale<'a>(&mut self, scores: impl IntoIterator<Item = &'a mut f64>) {
        for s in scores {
            *s *= Self::RESCALE;
        }
        self.increment *= Self::RESCALE;
    }

    pub fn decay(&mut self) {
        self.increment /= self.decay;
    }
}
