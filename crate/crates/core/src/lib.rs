//! Exact counting machinery for conjugacy classes and derangements in
//! finite classical groups.
//!
//! Everything here is exact: proportions are rationals, class counts are
//! unbounded integers, and comparisons against irrational constants go
//! through directed-rounding rational enclosures (`realbound`).  Floating
//! point appears only in Monte-Carlo standard errors and report rendering.
//!
//! Module map:
//! - `rational`   — exact rational scalars and rendering helpers
//! - `realbound`  — rational interval enclosures of e^x, pi, roots
//! - `qseries`    — truncated formal power series, cycle-index series
//! - `partitions` — integer partitions, partition counts, growth bounds
//! - `weyl`       — permutations, signed permutations, index statistics
//! - `ffield`     — small finite fields, polynomials, matrices
//! - `glclasses`  — GL(n,q) class data, centralizer orders, class series
//! - `brute`      — exhaustive enumeration of small matrix groups
//! - `montecarlo` — seeded random sampling of GL(n,q) statistics

pub mod brute;
pub mod ffield;
pub mod glclasses;
pub mod montecarlo;
pub mod partitions;
pub mod qseries;
pub mod rational;
pub mod realbound;
pub mod weyl;

pub use rational::Rational;

/// Library-level error type.
///
/// Internal invariant violations (e.g. a centralizer order failing to divide
/// the group order) panic with a diagnostic instead of returning `Err`: they
/// indicate a bug, not a caller mistake.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Caller violated a documented precondition.
    #[error("domain error: {0}")]
    Domain(String),
    /// Requested computation exceeds a configured resource cap.
    #[error("resource cap exceeded: {what} needs {needed}, cap is {cap}")]
    Resource {
        what: String,
        needed: u128,
        cap: u128,
    },
    /// A constructed group failed validation against its order formula.
    #[error("construction error: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
