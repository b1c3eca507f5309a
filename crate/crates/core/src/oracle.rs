//! Brute-force reference implementations for testing and `--verify`.
//!
//! Nothing here shares code with the solver or the reduction strategies:
//! satisfiability is decided by truth-table enumeration and dominance by
//! direct pairwise comparison.

use thiserror::Error;

use crate::dimacs::CnfFormula;
use crate::lit::Lit;
use crate::metrics::{MeasureId, MeasureSet, MeasureVector};
use crate::reduction::ClauseMeta;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleLimit {
    pub max_vars: usize,
    pub max_vectors: usize,
}

impl Default for OracleLimit {
    fn default() -> Self {
        OracleLimit {
            max_vars: 25,
            max_vectors: 4096,
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("{vars} variables exceed the enumeration limit of {limit}")]
    TooManyVars { vars: usize, limit: usize },
    #[error("{len} vectors exceed the pairwise-scan limit of {limit}")]
    TooManyVectors { len: usize, limit: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Sat(Vec<bool>),
    Unsat,
}

impl Verdict {
    pub fn is_sat(&self) -> bool {
        matches!(self, Verdict::Sat(_))
    }
}

/// Clause as (positive-literal mask, negative-literal mask).
fn masks(clause: &[Lit]) -> (u32, u32) {
    clause.iter().fold((0, 0), |(p, n), l| {
        let bit = 1u32 << l.var().index();
        if l.is_positive() {
            (p | bit, n)
        } else {
            (p, n | bit)
        }
    })
}

fn first_model(num_vars: usize, clauses: &[(u32, u32)]) -> Option<u32> {
    (0..1u64 << num_vars)
        .map(|a| a as u32)
        .find(|&a| clauses.iter().all(|&(p, n)| (a & p) | (!a & n) != 0))
}

fn check_vars(formula: &CnfFormula, limit: &OracleLimit) -> Result<(), OracleError> {
    if formula.num_vars > limit.max_vars.min(31) {
        return Err(OracleError::TooManyVars {
            vars: formula.num_vars,
            limit: limit.max_vars.min(31),
        });
    }
    Ok(())
}

/// Decides `formula` by enumerating every assignment.
pub fn brute_force_sat(formula: &CnfFormula) -> Result<Verdict, OracleError> {
    brute_force_sat_with(formula, &OracleLimit::default())
}

pub fn brute_force_sat_with(
    formula: &CnfFormula,
    limit: &OracleLimit,
) -> Result<Verdict, OracleError> {
    check_vars(formula, limit)?;
    let clauses: Vec<_> = formula.clauses.iter().map(|c| masks(c)).collect();
    Ok(match first_model(formula.num_vars, &clauses) {
        Some(a) => {
            let model: Vec<bool> = (0..formula.num_vars).map(|v| a >> v & 1 == 1).collect();
            assert!(
                formula.is_satisfied_by(&model),
                "oracle produced a non-model"
            );
            Verdict::Sat(model)
        }
        None => Verdict::Unsat,
    })
}

/// Whether every model of `formula` satisfies `clause`, i.e. `formula ∧ ¬clause`
/// is unsatisfiable.
pub fn entails(formula: &CnfFormula, clause: &[Lit]) -> Result<bool, OracleError> {
    check_vars(formula, &OracleLimit::default())?;
    let mut clauses: Vec<_> = formula.clauses.iter().map(|c| masks(c)).collect();
    clauses.extend(clause.iter().map(|&l| masks(&[!l])));
    Ok(first_model(formula.num_vars, &clauses).is_none())
}

/// `a` better than `b` on measure `m`, written out per measure.
fn strictly_better(m: MeasureId, a: &MeasureVector, b: &MeasureVector) -> bool {
    match m {
        MeasureId::Size => a.size < b.size,
        MeasureId::Lbd => a.lbd < b.lbd,
        MeasureId::Cvsids => a.activity > b.activity,
    }
}

fn at_least_as_good(m: MeasureId, a: &MeasureVector, b: &MeasureVector) -> bool {
    !strictly_better(m, b, a)
}

fn strictly_dominates(a: &MeasureVector, b: &MeasureVector, set: &MeasureSet) -> bool {
    let ms = set.measures();
    ms.iter().all(|&m| at_least_as_good(m, a, b)) && ms.iter().any(|&m| strictly_better(m, a, b))
}

/// Indices of vectors not strictly dominated by any other vector.
pub fn brute_force_undominated(
    vectors: &[MeasureVector],
    set: &MeasureSet,
) -> Result<Vec<usize>, OracleError> {
    let limit = OracleLimit::default().max_vectors;
    if vectors.len() > limit {
        return Err(OracleError::TooManyVectors {
            len: vectors.len(),
            limit,
        });
    }
    Ok((0..vectors.len())
        .filter(|&i| {
            !vectors
                .iter()
                .enumerate()
                .any(|(j, w)| j != i && strictly_dominates(w, &vectors[i], set))
        })
        .collect())
}

/// Positions a dominance reduction around `reference` must delete: every
/// other clause with size and LBD above 2, not locked, that the reference
/// beats strictly on every measure of `set`.
pub fn dominated_by_reference(db: &[ClauseMeta], reference: usize, set: &MeasureSet) -> Vec<usize> {
    let r = db[reference].measures();
    db.iter()
        .enumerate()
        .filter(|&(i, c)| {
            i != reference
                && c.size > 2
                && c.lbd > 2
                && !c.locked
                && set
                    .measures()
                    .iter()
                    .all(|&m| strictly_better(m, &r, &c.measures()))
        })
        .map(|(i, _)| i)
        .collect()
}
