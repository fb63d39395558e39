//! Criterion benchmarks for `ncf-core`; see `benches/`.
