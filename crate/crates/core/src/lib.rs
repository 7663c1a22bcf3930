//! Filteredness axioms for finite strict 2-categories and the explicit bicolimit
//! `L(F)` of a category-valued 2-functor, with brute-force checks of the results
//! that describe it.
//!
//! * [`twocat`]: finitely presented strict 2-categories and pasting.
//! * [`axioms`]: exhaustive witness search for every filteredness axiom.
//! * [`fincat`]: finite categories, functors, transformations, 2-functors into `Cat`.
//! * [`bicolim`]: premorphisms, homotopies, the category `L(F)`, pseudocones.
//! * [`theorems`]: the comparison functor `L(F^P) -> L(F)^P`, the classical
//!   filtered colimit, finite limits.
//! * [`generate`]: fixture families and the shipped fixture suite.

pub mod axioms;
pub mod bicolim;
mod error;
pub mod fincat;
pub mod generate;
mod table;
pub mod theorems;
pub mod twocat;

pub(crate) use error::precondition;
pub use error::{Error, PreconditionFailed, ResourceError, Result};
