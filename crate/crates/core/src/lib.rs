//! Constructions, verifiers and experiments for sets containing cube
//! skeletons or orthoplex vertices around every point of a lattice set.

pub mod cantor;
pub mod cli;
pub mod constructions;
pub mod digits;
pub mod error;
pub mod exponents;
pub mod formats;
pub mod lattice;
pub mod oracle;
pub mod report;
pub mod shadows;

pub use error::{Error, Result};

/// Default cap on materialized point counts.
pub const DEFAULT_POINT_CAP: u128 = 10_000_000;
