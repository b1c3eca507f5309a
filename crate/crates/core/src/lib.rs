//! A CDCL SAT solver whose learned-clause database reduction is a pluggable
//! strategy: classic sort-and-halve by a single measure, or dominance-based
//! reduction that deletes every clause a reference clause beats on all of
//! size, LBD and activity.
//!
//! Also included: a DIMACS reader and writer, brute-force oracles for testing,
//! a random k-SAT generator and a benchmark harness producing per-instance CSV
//! statistics and cactus-plot data.

pub mod dimacs;
pub mod engine;
pub mod generate;
pub mod harness;
pub mod lit;
pub mod metrics;
pub mod oracle;
pub mod reduction;

pub use dimacs::{parse_dimacs, write_dimacs, CnfFormula, ParseError, ParseErrorKind};
pub use engine::{solve, SolveOutcome, Solver, SolverConfig, SolverStats, Status, UnknownReason};
pub use lit::{Lit, Var};
pub use metrics::{MeasureId, MeasureSet, MeasureVector, NormalizedVector};
pub use reduction::{ClauseMeta, ReduceSchedule, ReductionReport, ReductionStrategy};
