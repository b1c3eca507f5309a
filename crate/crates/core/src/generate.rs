//! Uniform random k-SAT instances.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dimacs::CnfFormula;
use crate::lit::{Lit, Var};

/// `num_clauses` clauses over `k` distinct variables each, with uniform signs.
pub fn random_ksat<R: Rng>(
    num_vars: usize,
    num_clauses: usize,
    k: usize,
    rng: &mut R,
) -> CnfFormula {
    assert!(k <= num_vars, "clause width exceeds variable count");
    let mut f = CnfFormula::new(num_vars);
    for _ in 0..num_clauses {
        let clause: Vec<Lit> = sample(rng, num_vars, k)
            .into_iter()
            .map(|v| Lit::new(Var::new(v as u32), rng.gen()))
            .collect();
        f.add_clause(&clause);
    }
    f
}

/// Random 3-SAT with `round(ratio * num_vars)` clauses, seeded.
pub fn random_3sat(num_vars: usize, ratio: f64, seed: u64) -> CnfFormula {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = (ratio * num_vars as f64).round() as usize;
    random_ksat(num_vars, m, 3, &mut rng)
}
