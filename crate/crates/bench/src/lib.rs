//! Benchmark-only crate; see `benches/face_counts.rs`.
