//! Benchmarks for the symbolic kernel live in `benches/`.
