//! Error type shared by every module of the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid ray direction: p and q must both be nonzero (got p={p}, q={q})")]
    InvalidRayDirection { p: i64, q: i64 },

    #[error("invalid slope: {0}")]
    InvalidSlope(String),

    #[error("horizon must be positive (got {0})")]
    InvalidHorizon(f64),

    #[error("count must be at least 1")]
    EmptyCount,

    #[error("input list must be nonempty")]
    EmptyInput,

    #[error("frequency index k must be nonzero")]
    ZeroFrequency,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid ratio: {0}")]
    InvalidRatio(String),

    #[error("invalid phase classes: {0}")]
    InvalidPhaseClasses(String),

    #[error("target must lie in [0, 1] (got {0})")]
    InvalidTarget(f64),

    #[error("point {point} lies outside the solved domain [0, {domain}]")]
    PointOutsideDomain { point: f64, domain: f64 },

    #[error("eigenvalue search for index {index} did not converge: {detail}")]
    NonConvergence { index: usize, detail: String },

    #[error("node-count mismatch for index {index}: expected {expected} interior nodes, found {found} (grid or domain too coarse)")]
    NodeCountMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("inconsistent configuration: {0}")]
    Config(String),

    #[error("source failed at index {index}: {detail}")]
    SourceFailure { index: u64, detail: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
