//! Criterion benchmarks for `hookseries-core`; see `benches/`.
