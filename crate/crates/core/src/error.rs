use thiserror::Error;

use crate::lattice::ValidationReport;

/// Errors produced by the library. Validation problems in user-supplied
/// conformations are carried as a [`ValidationReport`] so callers can see
/// every offending stick, not only the first.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid conformation: {0}")]
    Invalid(ValidationReport),

    #[error("conformation is not properly leveled (level it first)")]
    NotLeveled,

    #[error("scale factors must be positive, got {0:?}")]
    BadScale([i64; 3]),

    #[error("expansion amount must be non-negative, got {0}")]
    BadAmount(i64),

    #[error("operation requires a single-component conformation, got {0} components")]
    NotAKnot(usize),

    #[error("crossing budget exceeded: diagram has {count} crossings, limit is {limit}")]
    CrossingBudget { count: usize, limit: usize },

    #[error("coefficient overflow while evaluating a polynomial invariant")]
    Overflow,

    #[error("malformed PD code: {0}")]
    BadPd(String),

    #[error("component index {0} out of range")]
    NoSuchComponent(usize),

    #[error("linking number needs two distinct components")]
    SameComponent,

    #[error("{0}")]
    Precondition(String),

    #[error("unknown catalog entry {name:?}; known entries: {known}")]
    UnknownName { name: String, known: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
