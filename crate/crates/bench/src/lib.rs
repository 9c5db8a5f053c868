//! Shared fixtures for the benchmarks.

use lconn_core::corpus::{shipped_catalog, CorpusEntry};

/// A shipped entry by name.
pub fn entry(name: &str) -> CorpusEntry {
    shipped_catalog()
        .entry(name)
        .unwrap_or_else(|| panic!("no shipped entry {name}"))
        .clone()
}
