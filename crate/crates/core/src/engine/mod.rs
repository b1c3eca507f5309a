//! CDCL search: two-watched-literal propagation, first-UIP learning, VSIDS
//! decisions with phase saving, Luby restarts and scheduled learned-clause
//! reduction.
//!
//! The engine owns the clause arena and asks [`crate::reduction`] which
//! learned clauses to drop. Reason clauses are reported as locked and are
//! never deleted.

mod heap;
mod restart;

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dimacs::CnfFormula;
use crate::lit::{Lit, Var};
use crate::metrics::Activity;
use crate::reduction::{self, ClauseMeta, ReduceSchedule, ReductionStrategy};

use heap::VarHeap;
pub use restart::{luby, LubyRestarts};

/// Handle to a clause in the solver's arena.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClauseRef(u32);

impl ClauseRef {
    fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Clone, Debug)]
struct Clause {
    lits: Vec<Lit>,
    learnt: bool,
    lbd: u32,
    activity: f64,
}

/// A learned clause with its relevance metadata.
#[derive(Clone, Debug, PartialEq)]
pub struct LearnedClause {
    pub literals: Vec<Lit>,
    pub lbd: u32,
    pub activity: f64,
}

impl LearnedClause {
    pub fn size(&self) -> usize {
        self.literals.len()
    }

    pub fn is_protected(&self) -> bool {
        self.size() <= 2 || self.lbd <= 2
    }
}

#[derive(Clone, Copy, Debug)]
struct Watcher {
    cref: ClauseRef,
    blocker: Lit,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnknownReason {
    ConflictBudget,
    Timeout,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Sat,
    Unsat,
    Unknown(UnknownReason),
}

impl Status {
    pub fn is_solved(self) -> bool {
        matches!(self, Status::Sat | Status::Unsat)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOutcome {
    pub status: Status,
    /// Polarity per variable, present iff `status` is [`Status::Sat`].
    pub model: Option<Vec<bool>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SolverConfig {
    pub var_decay: f64,
    pub clause_decay: f64,
    /// Conflicts per Luby unit.
    pub restart_unit: u64,
    pub schedule: ReduceSchedule,
    pub strategy: ReductionStrategy,
    pub seed: u64,
    /// Probability of a random decision; 0 disables them.
    pub random_decision_freq: f64,
    pub conflict_budget: Option<u64>,
    pub time_budget: Option<Duration>,
    /// Verify trail and asserting-clause invariants after every step.
    pub check_invariants: bool,
    /// Keep a copy of every learned clause, see [`Solver::learned_log`].
    pub record_learned: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            var_decay: 0.95,
            clause_decay: 0.999,
            restart_unit: 100,
            schedule: ReduceSchedule::default(),
            strategy: ReductionStrategy::default(),
            seed: 0,
            random_decision_freq: 0.0,
            conflict_budget: None,
            time_budget: None,
            check_invariants: false,
            record_learned: false,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SolverStats {
    pub conflicts: u64,
    pub decisions: u64,
    pub propagations: u64,
    pub restarts: u64,
    pub reductions: u64,
    /// Learned clauses, units included.
    pub learned: u64,
    pub deleted: u64,
    /// Sum over reductions of `deleted / database size`.
    pub deleted_fraction_sum: f64,
    /// Reductions in which a dominance reference clause was found.
    pub reference_selections: u64,
    /// Deletions of protected or locked clauses, or sort-half deleting more
    /// than half. Always zero for a correct strategy.
    pub reduction_violations: u64,
    /// Failed invariant checks (only counted with `check_invariants`).
    pub invariant_violations: u64,
    pub first_violation: Option<String>,
}

impl SolverStats {
    pub fn mean_deleted_fraction(&self) -> f64 {
        if self.reductions == 0 {
            0.0
        } else {
            self.deleted_fraction_sum / self.reductions as f64
        }
    }

    fn violation(&mut self, message: String) {
        self.invariant_violations += 1;
        self.first_violation.get_or_insert(message);
    }
}

/// Result of first-UIP conflict analysis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Analysis {
    /// The asserting literal comes first; the second literal, if any, has the
    /// highest remaining level.
    pub learned: Vec<Lit>,
    pub backjump_level: u32,
    pub lbd: u32,
}

const UNDEF: i8 = 0;
const TRUE: i8 = 1;
const FALSE: i8 = -1;

pub struct Solver {
    num_vars: usize,
    config: SolverConfig,
    original: Vec<Vec<Lit>>,

    clauses: Vec<Clause>,
    free_slots: Vec<u32>,
    learnts: Vec<ClauseRef>,
    watches: Vec<Vec<Watcher>>,

    values: Vec<i8>,
    level: Vec<u32>,
    reason: Vec<Option<ClauseRef>>,
    trail: Vec<Lit>,
    trail_lim: Vec<usize>,
    qhead: usize,

    activity: Vec<f64>,
    var_activity: Activity,
    clause_activity: Activity,
    order: VarHeap,
    phase: Vec<bool>,
    rng: ChaCha8Rng,

    seen: Vec<bool>,
    level_stamp: Vec<u64>,
    stamp: u64,

    restarts: LubyRestarts,
    conflicts_since_reduce: u64,
    ok: bool,
    root_conflict: Option<ClauseRef>,
    stats: SolverStats,
    learned_log: Vec<Vec<Lit>>,
}

impl Solver {
    pub fn new(formula: &CnfFormula, config: SolverConfig) -> Self {
        let n = formula.num_vars;
        let mut solver = Solver {
            num_vars: n,
            original: formula.clauses.clone(),
            clauses: Vec::new(),
            free_slots: Vec::new(),
            learnts: Vec::new(),
            watches: vec![Vec::new(); 2 * n],
            values: vec![UNDEF; 2 * n],
            level: vec![0; n],
            reason: vec![None; n],
            trail: Vec::with_capacity(n),
            trail_lim: Vec::new(),
            qhead: 0,
            activity: vec![0.0; n],
            var_activity: Activity::new(config.var_decay),
            clause_activity: Activity::new(config.clause_decay),
            order: VarHeap::with_vars(n),
            phase: vec![false; n],
            rng: ChaCha8Rng::seed_from_u64(config.seed),
            seen: vec![false; n],
            level_stamp: vec![0; n + 1],
            stamp: 0,
            restarts: LubyRestarts::new(config.restart_unit),
            conflicts_since_reduce: 0,
            ok: true,
            root_conflict: None,
            stats: SolverStats::default(),
            learned_log: Vec::new(),
            config,
        };
        for clause in &formula.clauses {
            solver.add_original(clause);
        }
        solver
    }

    fn add_original(&mut self, lits: &[Lit]) {
        match lits {
            [] => self.ok = false,
            [unit] => {
                let unit = *unit;
                let cref = self.alloc(lits.to_vec(), false, 1);
                match self.value(unit) {
                    Some(true) => {}
                    Some(false) => {
                        self.root_conflict.get_or_insert(cref);
                    }
                    None => self.enqueue(unit, Some(cref)),
                }
            }
            _ => {
                let cref = self.alloc(lits.to_vec(), false, 0);
                self.attach(cref);
            }
        }
    }

    fn alloc(&mut self, lits: Vec<Lit>, learnt: bool, lbd: u32) -> ClauseRef {
        let clause = Clause {
            lits,
            learnt,
            lbd,
            activity: 0.0,
        };
        match self.free_slots.pop() {
            Some(slot) => {
                self.clauses[slot as usize] = clause;
                ClauseRef(slot)
            }
            None => {
                self.clauses.push(clause);
                ClauseRef(self.clauses.len() as u32 - 1)
            }
        }
    }

    fn attach(&mut self, cref: ClauseRef) {
        let lits = &self.clauses[cref.index()].lits;
        let (a, b) = (lits[0], lits[1]);
        self.watches[a.index()].push(Watcher { cref, blocker: b });
        self.watches[b.index()].push(Watcher { cref, blocker: a });
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn config(&self) -> &SolverConfig {
        &self.config
    }

    pub fn stats(&self) -> &SolverStats {
        &self.stats
    }

    /// Every learned clause in learning order, if `record_learned` is set.
    pub fn learned_log(&self) -> &[Vec<Lit>] {
        &self.learned_log
    }

    /// Current contents of the learned-clause database (units excluded).
    pub fn learned_clauses(&self) -> Vec<LearnedClause> {
        self.learnts
            .iter()
            .map(|&cr| {
                let c = &self.clauses[cr.index()];
                LearnedClause {
                    literals: c.lits.clone(),
                    lbd: c.lbd,
                    activity: c.activity,
                }
            })
            .collect()
    }

    pub fn value(&self, lit: Lit) -> Option<bool> {
        match self.values[lit.index()] {
            TRUE => Some(true),
            FALSE => Some(false),
            _ => None,
        }
    }

    pub fn decision_level(&self) -> u32 {
        self.trail_lim.len() as u32
    }

    pub fn trail(&self) -> &[Lit] {
        &self.trail
    }

    pub fn level_of(&self, var: Var) -> Option<u32> {
        self.value(var.lit(true)).map(|_| self.level[var.index()])
    }

    pub fn reason_of(&self, var: Var) -> Option<ClauseRef> {
        self.value(var.lit(true)).and(self.reason[var.index()])
    }

    pub fn clause_literals(&self, cref: ClauseRef) -> &[Lit] {
        &self.clauses[cref.index()].lits
    }

    pub fn variable_activity(&self, var: Var) -> f64 {
        self.activity[var.index()]
    }

    fn enqueue(&mut self, lit: Lit, reason: Option<ClauseRef>) {
        debug_assert!(self.value(lit).is_none());
        self.values[lit.index()] = TRUE;
        self.values[(!lit).index()] = FALSE;
        let v = lit.var().index();
        self.level[v] = self.decision_level();
        self.reason[v] = reason;
        self.trail.push(lit);
    }

    /// Opens a new decision level and assigns `lit` as its decision.
    pub fn assume(&mut self, lit: Lit) {
        self.trail_lim.push(self.trail.len());
        self.enqueue(lit, None);
    }

    /// Unit propagation to fixpoint. Returns the first falsified clause.
    pub fn propagate(&mut self) -> Option<ClauseRef> {
        if let Some(cref) = self.root_conflict {
            if self.decision_level() == 0 {
                return Some(cref);
            }
        }
        let mut conflict = None;
        while self.qhead < self.trail.len() {
            let p = self.trail[self.qhead];
            self.qhead += 1;
            self.stats.propagations += 1;
            let false_lit = !p;
            let mut ws = std::mem::take(&mut self.watches[false_lit.index()]);
            let (mut i, mut j) = (0, 0);
            while i < ws.len() {
                let w = ws[i];
                i += 1;
                if self.values[w.blocker.index()] == TRUE {
                    ws[j] = w;
                    j += 1;
                    continue;
                }
                let lits = &mut self.clauses[w.cref.index()].lits;
                if lits[0] == false_lit {
                    lits.swap(0, 1);
                }
                let first = lits[0];
                let kept = Watcher {
                    cref: w.cref,
                    blocker: first,
                };
                if first != w.blocker && self.values[first.index()] == TRUE {
                    ws[j] = kept;
                    j += 1;
                    continue;
                }
                let replacement = (2..lits.len()).find(|&k| self.values[lits[k].index()] != FALSE);
                if let Some(k) = replacement {
                    lits.swap(1, k);
                    let new_watch = lits[1];
                    self.watches[new_watch.index()].push(kept);
                    continue;
                }
                ws[j] = kept;
                j += 1;
                if self.values[first.index()] == FALSE {
                    conflict = Some(w.cref);
                    self.qhead = self.trail.len();
                    while i < ws.len() {
                        ws[j] = ws[i];
                        j += 1;
                        i += 1;
                    }
                } else {
                    self.enqueue(first, Some(w.cref));
                }
            }
            ws.truncate(j);
            self.watches[false_lit.index()] = ws;
            if conflict.is_some() {
                break;
            }
        }
        if self.config.check_invariants {
            self.audit_trail("propagate");
        }
        conflict
    }

    /// Distinct decision levels among the (assigned) literals.
    pub fn compute_lbd(&mut self, lits: &[Lit]) -> u32 {
        self.stamp += 1;
        let mut count = 0;
        for l in lits {
            let lvl = self.level[l.var().index()] as usize;
            if self.level_stamp[lvl] != self.stamp {
                self.level_stamp[lvl] = self.stamp;
                count += 1;
            }
        }
        count
    }

    pub fn bump_variable(&mut self, var: Var) {
        let v = var.index();
        if self.var_activity.bump(&mut self.activity[v]) {
            self.var_activity.rescale(self.activity.iter_mut());
        }
        self.order.increased(var, &self.activity);
    }

    fn bump_clause(&mut self, cref: ClauseRef) {
        if self
            .clause_activity
            .bump(&mut self.clauses[cref.index()].activity)
        {
            self.clause_activity.rescale(
                self.clauses
                    .iter_mut()
                    .filter(|c| c.learnt)
                    .map(|c| &mut c.activity),
            );
        }
    }

    /// First-UIP conflict analysis at decision level >= 1.
    ///
    /// Bumps every variable seen and every learned clause used, and refreshes
    /// the LBD of learned clauses taking part (keeping the smaller value).
    pub fn analyze(&mut self, conflict: ClauseRef) -> Analysis {
        assert!(self.decision_level() > 0, "conflict analysis at level 0");
        let current = self.decision_level();
        let mut learned: Vec<Lit> = vec![Lit::new(Var::new(0), true)];
        let mut pending = 0usize;
        let mut index = self.trail.len();
        let mut confl = conflict;
        let mut resolved: Option<Lit> = None;

        loop {
            if self.clauses[confl.index()].learnt {
                self.bump_clause(confl);
                let c = &self.clauses[confl.index()];
                if c.lbd > 2 {
                    let lits = c.lits.clone();
                    let fresh = self.compute_lbd(&lits);
                    let c = &mut self.clauses[confl.index()];
                    c.lbd = c.lbd.min(fresh);
                }
            }
            let skip = usize::from(resolved.is_some());
            let len = self.clauses[confl.index()].lits.len();
            for k in skip..len {
                let q = self.clauses[confl.index()].lits[k];
                let v = q.var();
                if !self.seen[v.index()] && self.level[v.index()] > 0 {
                    self.bump_variable(v);
                    self.seen[v.index()] = true;
                    if self.level[v.index()] >= current {
                        pending += 1;
                    } else {
                        learned.push(q);
                    }
                }
            }
            loop {
                index -= 1;
                if self.seen[self.trail[index].var().index()] {
                    break;
                }
            }
            let p = self.trail[index];
            self.seen[p.var().index()] = false;
            resolved = Some(p);
            pending -= 1;
            if pending == 0 {
                break;
            }
            confl = self.reason[p.var().index()].expect("implied literal has a reason");
        }
        learned[0] = !resolved.expect("at least one literal resolved");

        // Drop literals whose reason is subsumed by the rest of the clause.
        let marked = learned.clone();
        let mut keep = 1;
        for i in 1..learned.len() {
            let v = learned[i].var();
            let redundant = self.reason[v.index()].is_some_and(|r| {
                self.clauses[r.index()].lits[1..].iter().all(|l| {
                    let u = l.var().index();
                    self.seen[u] || self.level[u] == 0
                })
            });
            if !redundant {
                learned[keep] = learned[i];
                keep += 1;
            }
        }
        learned.truncate(keep);
        for l in &marked {
            self.seen[l.var().index()] = false;
        }

        let backjump_level = if learned.len() == 1 {
            0
        } else {
            let (best, _) = learned
                .iter()
                .enumerate()
                .skip(1)
                .max_by_key(|(i, l)| (self.level[l.var().index()], std::cmp::Reverse(*i)))
                .expect("clause has a second literal");
            learned.swap(1, best);
            self.level[learned[1].var().index()]
        };
        let lbd = self.compute_lbd(&learned);
        Analysis {
            learned,
            backjump_level,
            lbd,
        }
    }

    /// Undoes every assignment above `level`, saving phases.
    pub fn backjump(&mut self, level: u32) {
        if self.decision_level() <= level {
            return;
        }
        let start = self.trail_lim[level as usize];
        for i in (start..self.trail.len()).rev() {
            let lit = self.trail[i];
            let v = lit.var();
            self.values[lit.index()] = UNDEF;
            self.values[(!lit).index()] = UNDEF;
            self.reason[v.index()] = None;
            self.phase[v.index()] = lit.is_positive();
            self.order.insert(v, &self.activity);
        }
        self.trail.truncate(start);
        self.trail_lim.truncate(level as usize);
        self.qhead = self.trail.len();
        if self.config.check_invariants {
            self.audit_trail("backjump");
        }
    }

    /// Picks the unassigned variable of highest activity (lowest index on
    /// ties) with its saved phase, and assigns it at a new level.
    pub fn decide(&mut self) -> Option<Lit> {
        let mut next = None;
        if self.config.random_decision_freq > 0.0
            && self.rng.gen::<f64>() < self.config.random_decision_freq
            && self.order.len() > 0
        {
            let v = Var::new(self.rng.gen_range(0..self.num_vars as u32));
            if self.value(v.lit(true)).is_none() {
                next = Some(v);
            }
        }
        while next.is_none() {
            let v = self.order.pop(&self.activity)?;
            if self.value(v.lit(true)).is_none() {
                next = Some(v);
            }
        }
        let v = next.expect("picked a variable");
        let lit = v.lit(self.phase[v.index()]);
        self.stats.decisions += 1;
        self.assume(lit);
        Some(lit)
    }

    fn learn(&mut self, analysis: Analysis) {
        self.stats.learned += 1;
        let Analysis { learned, lbd, .. } = analysis;
        if self.config.record_learned {
            self.learned_log.push(learned.clone());
        }
        if self.config.check_invariants {
            let asserting = self.value(learned[0]).is_none()
                && learned[1..].iter().all(|&l| self.value(l) == Some(false));
            if !asserting {
                self.stats.violation(format!(
                    "learned clause {learned:?} is not asserting after backjump"
                ));
            }
        }
        let asserting = learned[0];
        if learned.len() == 1 {
            let cref = self.alloc(learned, true, 1);
            self.enqueue(asserting, Some(cref));
        } else {
            let cref = self.alloc(learned, true, lbd);
            self.attach(cref);
            self.learnts.push(cref);
            self.bump_clause(cref);
            self.enqueue(asserting, Some(cref));
        }
    }

    fn is_locked(&self, cref: ClauseRef) -> bool {
        let first = self.clauses[cref.index()].lits[0];
        self.value(first) == Some(true) && self.reason[first.var().index()] == Some(cref)
    }

    /// Applies the configured reduction strategy to the learned database.
    pub fn reduce_db(&mut self) -> reduction::ReductionReport {
        let metas: Vec<ClauseMeta> = self
            .learnts
            .iter()
            .map(|&cr| {
                let c = &self.clauses[cr.index()];
                ClauseMeta {
                    size: c.lits.len() as u32,
                    lbd: c.lbd,
                    activity: c.activity,
                    locked: self.is_locked(cr),
                }
            })
            .collect();
        let report = reduction::reduce(&self.config.strategy, &metas, self.num_vars.max(1));

        let mut doomed = vec![false; self.learnts.len()];
        for &i in &report.deleted {
            let cref = self.learnts[i];
            let c = &self.clauses[cref.index()];
            if c.lits.len() <= 2 || c.lbd <= 2 || self.is_locked(cref) || doomed[i] {
                self.stats.reduction_violations += 1;
                continue;
            }
            doomed[i] = true;
        }
        if matches!(self.config.strategy, ReductionStrategy::SortHalf(_))
            && report.deleted.len() > metas.len() / 2
        {
            self.stats.reduction_violations += 1;
        }

        let mut removed = 0u64;
        let mut kept = Vec::with_capacity(self.learnts.len());
        for (i, &cref) in self.learnts.iter().enumerate() {
            if doomed[i] {
                self.clauses[cref.index()].lits = Vec::new();
                self.free_slots.push(cref.0);
                removed += 1;
            } else {
                kept.push(cref);
            }
        }
        self.learnts = kept;
        if removed > 0 {
            let clauses = &self.clauses;
            for ws in &mut self.watches {
                ws.retain(|w| !clauses[w.cref.index()].lits.is_empty());
            }
        }

        self.stats.reductions += 1;
        self.stats.deleted += removed;
        self.stats.deleted_fraction_sum += report.deleted_fraction();
        if report.reference.is_some() {
            self.stats.reference_selections += 1;
        }
        report
    }

    /// Checks trail well-formedness.
    pub fn check_trail(&self) -> Result<(), String> {
        let mut position = vec![usize::MAX; self.num_vars];
        let mut prev_level = 0;
        let mut lim = 0;
        for (i, &lit) in self.trail.iter().enumerate() {
            let v = lit.var().index();
            if position[v] != usize::MAX {
                return Err(format!("variable {} assigned twice", v + 1));
            }
            position[v] = i;
            if self.value(lit) != Some(true) {
                return Err(format!("trail literal {lit} is not true"));
            }
            while lim < self.trail_lim.len() && self.trail_lim[lim] <= i {
                lim += 1;
            }
            let lvl = self.level[v];
            if lvl as usize != lim {
                return Err(format!("literal {lit} has level {lvl}, expected {lim}"));
            }
            if lvl < prev_level {
                return Err(format!("levels decrease at trail position {i}"));
            }
            prev_level = lvl;
            let is_decision = lim > 0 && self.trail_lim[lim - 1] == i;
            match (is_decision, self.reason[v]) {
                (true, None) => {}
                (true, Some(_)) => return Err(format!("decision {lit} has a reason")),
                (false, None) => return Err(format!("implied literal {lit} has no reason")),
                (false, Some(cr)) => {
                    let c = &self.clauses[cr.index()].lits;
                    if c.first() != Some(&lit) {
                        return Err(format!("reason of {lit} does not start with it"));
                    }
                    for &other in &c[1..] {
                        let u = other.var().index();
                        if self.value(other) != Some(false) || position[u] >= i {
                            return Err(format!(
                                "reason of {lit} has literal {other} not false before it"
                            ));
                        }
                    }
                }
            }
        }
        let assigned = self.values.iter().filter(|&&v| v == TRUE).count();
        if assigned != self.trail.len() {
            return Err("assignment and trail disagree".into());
        }
        Ok(())
    }

    fn audit_trail(&mut self, step: &str) {
        if let Err(e) = self.check_trail() {
            self.stats.violation(format!("after {step}: {e}"));
        }
    }

    fn budget_exhausted(&self, start: Instant) -> Option<UnknownReason> {
        if let Some(limit) = self.config.conflict_budget {
            if self.stats.conflicts >= limit {
                return Some(UnknownReason::ConflictBudget);
            }
        }
        if let Some(limit) = self.config.time_budget {
            if self.stats.conflicts.is_multiple_of(1024) && start.elapsed() >= limit {
                return Some(UnknownReason::Timeout);
            }
        }
        None
    }

    fn model(&self) -> Vec<bool> {
        (0..self.num_vars)
            .map(|v| self.values[Var::new(v as u32).lit(true).index()] == TRUE)
            .collect()
    }

    pub fn solve(&mut self) -> SolveOutcome {
        let start = Instant::now();
        let unsat = SolveOutcome {
            status: Status::Unsat,
            model: None,
        };
        if !self.ok {
            return unsat;
        }
        loop {
            if let Some(confl) = self.propagate() {
                self.stats.conflicts += 1;
                self.conflicts_since_reduce += 1;
                self.restarts.on_conflict();
                if self.decision_level() == 0 {
                    self.ok = false;
                    return unsat;
                }
                let analysis = self.analyze(confl);
                self.backjump(analysis.backjump_level);
                self.learn(analysis);
                self.var_activity.decay();
                self.clause_activity.decay();
                if let Some(reason) = self.budget_exhausted(start) {
                    self.backjump(0);
                    return SolveOutcome {
                        status: Status::Unknown(reason),
                        model: None,
                    };
                }
                continue;
            }
            if self.restarts.is_due() {
                self.restarts.advance();
                self.stats.restarts += 1;
                self.backjump(0);
                continue;
            }
            if self.config.strategy != ReductionStrategy::None
                && self
                    .config
                    .schedule
                    .should_reduce(self.conflicts_since_reduce, self.stats.reductions)
            {
                self.conflicts_since_reduce = 0;
                self.reduce_db();
            }
            if self.decide().is_none() {
                let model = self.model();
                assert!(
                    self.original
                        .iter()
                        .all(|c| c.iter().any(|l| model[l.var().index()] == l.is_positive())),
                    "model does not satisfy the input formula"
                );
                return SolveOutcome {
                    status: Status::Sat,
                    model: Some(model),
                };
            }
        }
    }
}

/// Solves `formula` with `config`, discarding solver state.
pub fn solve(formula: &CnfFormula, config: SolverConfig) -> SolveOutcome {
    Solver::new(formula, config).solve()
}

#[cfg(test)]
mod tests;
