//! Criterion benchmarks for the `domsat` solver live under `benches/`.
