//! Criterion benchmarks for `stratquant-core`; see `benches/`.
