//! Criterion benchmarks for `barspin`; see `benches/`.
