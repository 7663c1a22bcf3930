//! Finite categories, functors and natural transformations, functor categories, and
//! strict 2-functors from a finite 2-category into `Cat`.

mod category;
mod enumerate;
mod equivalence;
mod functor;
mod twofunctor;

pub use category::{FiniteCategory, FiniteCategoryData, MorphismDecl};
pub use enumerate::{
    enumerate_functors, enumerate_nat_transfs, functor_category, FunctorCategory,
    DEFAULT_MAX_FUNCTORS, MAX_COMPOSABLE_PAIRS, MAX_TRANSFORMATIONS,
};
pub use equivalence::{check_equivalence, EquivalenceReport};
pub use functor::{CatFunctor, NatTransf};
pub use twofunctor::{
    lift_to_power, validate_2functor, CatValued2Functor, FunctorImage, FunctorReport, Lifted,
    TwoFunctorData,
};
