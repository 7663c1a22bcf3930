use std::fmt;

use serde::Serialize;
use thiserror::Error;

use super::data::TableName;

/// Malformed presentation: unknown ids, bad identity flags, or table domains that are
/// not exactly the composable pairs. Distinct from a law violation.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum StructuralError {
    #[error("duplicate {kind} id `{id}`")]
    DuplicateId { kind: &'static str, id: String },
    #[error("{context}: unknown {kind} `{id}`")]
    UnknownId {
        context: String,
        kind: &'static str,
        id: String,
    },
    #[error("object `{object}` has no identity 1-cell")]
    MissingIdentityArrow { object: String },
    #[error("object `{object}` has more than one identity 1-cell")]
    DuplicateIdentityArrow { object: String },
    #[error("1-cell `{arrow}` has no identity 2-cell")]
    MissingIdentityCell { arrow: String },
    #[error("1-cell `{arrow}` has more than one identity 2-cell")]
    DuplicateIdentityCell { arrow: String },
    #[error("identity `{id}` is not an endo-cell")]
    IdentityShape { id: String },
    #[error("2-cell `{cell}` has non-parallel boundary `{src}` => `{dst}`")]
    NotParallel {
        cell: String,
        src: String,
        dst: String,
    },
    #[error("{table}: entry ({left}, {right}) is not composable")]
    NonComposableKey {
        table: TableName,
        left: String,
        right: String,
    },
    #[error("{table}: duplicate entry for ({left}, {right})")]
    DuplicateEntry {
        table: TableName,
        left: String,
        right: String,
    },
    #[error("{table}: missing entry for composable ({left}, {right})")]
    MissingEntry {
        table: TableName,
        left: String,
        right: String,
    },
}

/// The law a table entry violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Law {
    Comp1Boundary,
    Comp1Unit,
    Comp1Assoc,
    VcompBoundary,
    VcompUnit,
    VcompAssoc,
    WhiskerBoundary,
    WhiskerIdentity,
    WhiskerVcomp,
    WhiskerUnit,
    WhiskerAssoc,
    WhiskerMixed,
    Interchange,
    InverseBoundary,
    InverseInvolution,
    InverseLaw,
}

/// A violated law together with the offending tuple (by id).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawViolation {
    pub law: Law,
    pub tuple: Vec<String>,
}

impl fmt::Display for LawViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}({})", self.law, self.tuple.join(", "))
    }
}

/// Result of checking every law; empty iff the presentation is a strict 2-category.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<LawViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn mentions(&self, law: Law) -> bool {
        self.violations.iter().any(|v| v.law == law)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        let shown: Vec<String> = self
            .violations
            .iter()
            .take(8)
            .map(|v| v.to_string())
            .collect();
        write!(
            f,
            "{} violation(s): {}",
            self.violations.len(),
            shown.join("; ")
        )?;
        if self.violations.len() > 8 {
            f.write_str("; ...")?;
        }
        Ok(())
    }
}

/// Failure to turn a presentation into a validated [`super::TwoCategory`].
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error(transparent)]
    Structural(#[from] StructuralError),
    #[error("law violations: {0}")]
    Laws(ValidationReport),
}

/// Composition requested on cells whose boundaries do not fit.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("boundary mismatch: {0}")]
pub struct BoundaryMismatch(pub String);
