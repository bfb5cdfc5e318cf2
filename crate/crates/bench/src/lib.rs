//! Criterion benchmarks for `fusion-core`; see `benches/`.
