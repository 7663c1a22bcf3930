//! Results about `L(F)` checked by brute force: the comparison functor
//! `L(F^P) -> L(F)^P`, agreement with the classical filtered colimit when the base
//! has only identity 2-cells, and finite limits.

mod classical;
mod diamond;
mod limits;

pub use classical::{
    check_trivial_filtered, classical_filtered_colimit, compare_with_classical, ClassicalColimit,
    ClassicalComparison,
};
pub use diamond::{
    diamond_functor, diamond_functor_with, DiamondOptions, DiamondReport, Hypotheses,
};
pub use limits::{
    check_finite_limits_corollary, detect_finite_limits, preserves_finite_limits, EqualizerWitness,
    FiniteLimitsCheck, LimitsReport, ProductWitness,
};
