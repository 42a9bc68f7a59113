//! Criterion benchmarks for `so7-core`; see `benches/`.
