use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use domsat::generate::random_3sat;
use domsat::{solve, MeasureId, MeasureSet, ReduceSchedule, ReductionStrategy, SolverConfig};
use std::hint::black_box;

fn bench_solve(c: &mut Criterion) {
    let formulas: Vec<_> = (0..8)
        .map(|seed| random_3sat(75, 4.26, 500 + seed))
        .collect();
    let strategies = [
        ReductionStrategy::None,
        ReductionStrategy::SortHalf(MeasureId::Size),
        ReductionStrategy::SortHalf(MeasureId::Lbd),
        ReductionStrategy::SortHalf(MeasureId::Cvsids),
        ReductionStrategy::Dominance(MeasureSet::default()),
    ];
    let mut group = c.benchmark_group("solve_uf75");
    group.sample_size(10);
    for s in strategies {
        let config = SolverConfig {
            strategy: s.clone(),
            schedule: ReduceSchedule { base: 20, inc: 5 },
            ..SolverConfig::default()
        };
        group.bench_function(BenchmarkId::from_parameter(&s), |b| {
            b.iter(|| {
                for f in &formulas {
                    black_box(solve(f, config.clone()));
                }
            })
        });
    }
    group.finish();
}

criterion_group!(benches, bench_solve);
criterion_main!(benches);
