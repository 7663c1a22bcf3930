use thiserror::Error;

use crate::twocat::{BoundaryMismatch, BuildError};

/// A construction needed an axiom or hypothesis that the input does not satisfy.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("precondition failed: {requirement} ({counterexample})")]
pub struct PreconditionFailed {
    pub requirement: String,
    pub counterexample: String,
}

/// An enumeration would exceed its configured bound.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("resource bound exceeded: more than {bound} {what}")]
pub struct ResourceError {
    pub what: String,
    pub bound: usize,
}

/// Every failure the library reports, grouped by how a caller should react.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid 2-category: {0}")]
    TwoCategory(#[from] BuildError),
    #[error("invalid input: {0}")]
    Validation(String),
    #[error(transparent)]
    Precondition(#[from] PreconditionFailed),
    #[error(transparent)]
    Resource(#[from] ResourceError),
    #[error(transparent)]
    Boundary(#[from] BoundaryMismatch),
    /// Two members of one class of `L(F)` are sent to different morphisms.
    #[error("not well defined on classes: {0}")]
    WellDefinedness(String),
    /// A property the mathematics guarantees failed on a valid input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn precondition(
    requirement: impl Into<String>,
    counterexample: impl Into<String>,
) -> Error {
    Error::Precondition(PreconditionFailed {
        requirement: requirement.into(),
        counterexample: counterexample.into(),
    })
}
