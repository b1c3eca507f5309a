use super::*;
use crate::generate::random_3sat;
use crate::oracle;

fn lit(v: i64) -> Lit {
    Lit::from_dimacs(v).unwrap()
}

fn formula(num_vars: usize, clauses: &[&[i64]]) -> CnfFormula {
    CnfFormula::from_dimacs_clauses(num_vars, clauses)
}

fn checked() -> SolverConfig {
    SolverConfig {
        check_invariants: true,
        record_learned: true,
        ..SolverConfig::default()
    }
}

#[test]
fn contradictory_units_are_unsat() {
    let f = formula(1, &[&[1], &[-1]]);
    assert_eq!(solve(&f, checked()).status, Status::Unsat);

    let mut s = Solver::new(&f, checked());
    let confl = s.propagate().expect("root conflict");
    assert_eq!(s.clause_literals(confl), &[lit(-1)]);
    assert_eq!(s.value(lit(1)), Some(true));
}

#[test]
fn empty_clause_is_unsat() {
    let f = formula(2, &[&[1, 2], &[]]);
    assert_eq!(solve(&f, SolverConfig::default()).status, Status::Unsat);
}

#[test]
fn binary_clause_is_sat() {
    let out = solve(&formula(2, &[&[1, 2]]), checked());
    assert_eq!(out.status, Status::Sat);
    let m = out.model.unwrap();
    assert!(m[0] || m[1]);
}

#[test]
fn empty_formula_is_sat() {
    let out = solve(&CnfFormula::new(3), SolverConfig::default());
    assert_eq!(out.status, Status::Sat);
    assert_eq!(out.model.unwrap().len(), 3);
}

#[test]
fn propagates_binary_clause() {
    let mut s = Solver::new(&formula(2, &[&[1, 2]]), checked());
    s.assume(lit(-1));
    assert!(s.propagate().is_none());
    assert_eq!(s.value(lit(2)), Some(true));
    assert_eq!(s.level_of(Var::new(1)), Some(1));
    assert!(s.reason_of(Var::new(1)).is_some());
    assert!(s.check_trail().is_ok());
}

#[test]
fn decision_is_uip() {
    // -1 forces 2 and 3, which conflict through (-2 -3).
    let f = formula(3, &[&[1, 2], &[1, 3], &[-2, -3]]);
    let mut s = Solver::new(&f, checked());
    s.assume(lit(-1));
    let confl = s.propagate().expect("conflict");
    let a = s.analyze(confl);
    assert_eq!(a.learned, vec![lit(1)]);
    assert_eq!(a.backjump_level, 0);
    assert_eq!(a.lbd, 1);
    s.backjump(a.backjump_level);
    assert_eq!(s.decision_level(), 0);
}

#[test]
fn learned_clause_is_asserting_after_backjump() {
    // Decisions -1 @1, -4 @2; -4 forces 2 and 3 via clauses with 1, conflict.
    let f = formula(4, &[&[4, 1, 2], &[4, 1, 3], &[-2, -3]]);
    let mut s = Solver::new(&f, checked());
    s.assume(lit(-1));
    assert!(s.propagate().is_none());
    s.assume(lit(-4));
    let confl = s.propagate().expect("conflict");
    let a = s.analyze(confl);
    assert_eq!(a.learned[0], lit(4));
    assert_eq!(a.learned.len(), 2);
    assert_eq!(a.backjump_level, 1);
    assert_eq!(a.lbd, 2);
    s.backjump(a.backjump_level);
    s.learn(a);
    assert_eq!(s.value(lit(4)), Some(true));
    assert!(s.check_trail().is_ok());
    assert_eq!(s.stats().invariant_violations, 0);
}

#[test]
fn lbd_counts_distinct_levels() {
    let f = formula(8, &[]);
    let mut s = Solver::new(&f, checked());
    // levels: vars 1,2 @1; 3,4,5 @2; 6,7,8 @3
    for (v, new_level) in [
        (1, true),
        (2, false),
        (3, true),
        (4, false),
        (5, false),
        (6, true),
        (7, false),
        (8, false),
    ] {
        if new_level {
            s.assume(lit(-v));
        } else {
            s.enqueue(lit(-v), None);
        }
    }
    let all: Vec<Lit> = (1..=8).map(lit).collect();
    assert_eq!(s.compute_lbd(&all), 3);
    assert_eq!(s.compute_lbd(&all[..2]), 1);
    assert_eq!(s.compute_lbd(&[lit(1), lit(3), lit(6)]), 3);
}

#[test]
fn backjump_to_root_keeps_level_zero() {
    let f = formula(4, &[&[1], &[-1, 2], &[3, 4]]);
    let mut s = Solver::new(&f, checked());
    assert!(s.propagate().is_none());
    let root = s.trail().len();
    assert_eq!(root, 2);
    s.assume(lit(-3));
    assert!(s.propagate().is_none());
    assert_eq!(s.trail().len(), 4);
    s.backjump(0);
    assert_eq!(s.trail().len(), root);
    assert_eq!(s.value(lit(3)), None);
    assert_eq!(s.value(lit(2)), Some(true));
    // phase saved from the undone decision
    assert_eq!(s.decide(), Some(lit(-3)));
}

#[test]
fn decide_order() {
    let f = formula(10, &[]);
    let mut s = Solver::new(&f, checked());
    assert_eq!(s.decide(), Some(lit(-1)));
    s.backjump(0);
    s.bump_variable(Var::new(6));
    assert_eq!(s.decide(), Some(lit(-7)));

    let mut full = Solver::new(&formula(1, &[&[1]]), checked());
    assert!(full.propagate().is_none());
    assert_eq!(full.decide(), None);
}

#[test]
fn conflict_budget_gives_unknown() {
    let f = random_3sat(120, 4.26, 3);
    let config = SolverConfig {
        conflict_budget: Some(5),
        ..SolverConfig::default()
    };
    let mut s = Solver::new(&f, config);
    let out = s.solve();
    if !out.status.is_solved() {
        assert_eq!(out.status, Status::Unknown(UnknownReason::ConflictBudget));
        assert_eq!(s.stats().conflicts, 5);
        assert!(out.model.is_none());
    }
}

#[test]
fn random_instances_agree_with_oracle() {
    for seed in 0..60 {
        let f = random_3sat(14, 4.26, seed);
        for strategy in ["none", "lbd", "degcomp"] {
            let config = SolverConfig {
                strategy: strategy.parse().unwrap(),
                schedule: ReduceSchedule { base: 2, inc: 1 },
                restart_unit: 4,
                ..checked()
            };
            let mut s = Solver::new(&f, config);
            let out = s.solve();
            let expected = oracle::brute_force_sat(&f).unwrap();
            assert_eq!(out.status == Status::Sat, expected.is_sat(), "seed {seed}");
            assert_eq!(
                s.stats().invariant_violations,
                0,
                "{:?}",
                s.stats().first_violation
            );
            assert_eq!(s.stats().reduction_violations, 0);
            for c in s.learned_log() {
                assert!(oracle::entails(&f, c).unwrap(), "seed {seed}: {c:?}");
            }
        }
    }
}

#[test]
fn learned_clause_metadata_invariants() {
    let f = random_3sat(60, 4.26, 11);
    let config = SolverConfig {
        schedule: ReduceSchedule { base: 30, inc: 5 },
        ..checked()
    };
    let mut s = Solver::new(&f, config);
    s.solve();
    for c in s.learned_clauses() {
        assert!(c.lbd >= 1 && c.lbd as usize <= c.size());
        assert!(c.activity >= 0.0);
        assert_eq!(c.is_protected(), c.size() <= 2 || c.lbd <= 2);
    }
    assert_eq!(
        s.stats().invariant_violations,
        0,
        "{:?}",
        s.stats().first_violation
    );
}

#[test]
fn deterministic_counters() {
    let f = random_3sat(80, 4.26, 5);
    let run = || {
        let mut s = Solver::new(&f, SolverConfig::default());
        let out = s.solve();
        (out, s.stats().clone())
    };
    assert_eq!(run(), run());
}
