//! Benchmarks for `whideal-core` live in `benches/`.
