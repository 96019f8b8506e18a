//! Library error type.

use thiserror::Error;

/// Errors raised by the computational modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("empty generator set")]
    EmptyGenerators,

    #[error("cone is not pointed: {0}")]
    NotPointed(String),

    #[error("regions are stored over different semigroups")]
    BaseMismatch,

    #[error("not a coarsening vector: variable {variable} has coarse degree {degree}")]
    NotCoarsening { variable: String, degree: i64 },

    #[error("{what} has size {size}, above the cap {cap}")]
    CapExceeded { what: String, size: usize, cap: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
