//! The bicolimit `L(F)` of a category-valued 2-functor on a pre-2-filtered
//! 2-category.
//!
//! An object of `L(F)` is a pair `(x, A)` with `x` an object of `FA`. A premorphism
//! `(x, A) -> (y, B)` is a triple `(u, ξ, v)` with `u: A -> C`, `v: B -> C` and
//! `ξ: F(u)x -> F(v)y` in `FC`; morphisms of `L(F)` are homotopy classes of
//! premorphisms.

mod category;
mod homotopy;
mod lemmas;
mod premorphism;
mod pseudocone;

use serde::Serialize;

pub use category::{
    build_bicolimit, build_bicolimit_with, check_composition_well_defined, BicolimCategory,
    BuildOptions, CompositionReport, HomSet, RelationReport, DEFAULT_MAX_PREMORPHISMS,
};
pub use homotopy::{
    basic_homotopies, check_ll_equation, find_homotopy, homotopies, horizontal_compose_check,
    identity_homotopy, inverse_homotopy, vertical_compose_homotopies, vertical_compose_over,
    HorizontalOutcome,
};
pub use lemmas::{lemma_witnesses, CoconeLeg, LemmaInput, LemmaTag, LemmaWitness};
pub use premorphism::{
    compose_premorphisms, compose_premorphisms_over, enumerate_premorphisms, identity_premorphism,
    lobjects,
};
pub use pseudocone::{
    enumerate_modifications, enumerate_pseudocones, factor_pseudocone, factorization_holds,
    lambda_pseudocone, precompose_lambda, pseudocone_hom_iso, HomIsoReport, Modification,
    Pseudocone,
};

use crate::twocat::{Arrow, Cell, Obj};

/// An object `(x, A)` of `L(F)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LObject {
    pub base: Obj,
    pub element: usize,
}

/// A triple `(u, ξ, v)` over the apex `C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Premorphism {
    pub src: LObject,
    pub dst: LObject,
    pub apex: Obj,
    pub u: Arrow,
    pub v: Arrow,
    /// A morphism of `F(apex)`.
    pub xi: usize,
}

impl Premorphism {
    /// Canonical order key: apex, `u`, `v`, `ξ` by declaration index.
    pub fn key(&self) -> (usize, usize, usize, usize) {
        (self.apex.0, self.u.0, self.v.0, self.xi)
    }
}

/// A quadruple `(w1, w2, α, β)` relating `from` (over `C1`) to `to` (over `C2`), with
/// `w1: C1 -> C`, `w2: C2 -> C`, `α: w1∘v1 => w2∘v2` and `β: w1∘u1 => w2∘u2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Homotopy {
    pub from: Premorphism,
    pub to: Premorphism,
    pub apex: Obj,
    pub w1: Arrow,
    pub w2: Arrow,
    pub alpha: Cell,
    pub beta: Cell,
}
