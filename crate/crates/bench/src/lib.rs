//! Criterion benchmarks for `reeskit-core`; the targets live under `benches/`.
