//! Oracles and helpers shared by the integration tests. The oracles never call the
//! library's validators, axiom searches or homotopy searches.
#![allow(dead_code)]

pub mod axioms;
pub mod homotopy;
pub mod laws;

use bicolim::fincat::FiniteCategory;
use bicolim::generate::poset;

/// `•→•`.
pub fn arrow() -> FiniteCategory {
    poset(&["0", "1"], &[("0", "1")])
}

/// The commutative square `00 → 01 → 11`, `00 → 10 → 11`.
pub fn square() -> FiniteCategory {
    poset(
        &["00", "01", "10", "11"],
        &[("00", "01"), ("00", "10"), ("01", "11"), ("10", "11")],
    )
}

pub fn discrete2() -> FiniteCategory {
    FiniteCategory::discrete(&["0", "1"])
}

/// The linear order `0 < 1 < 2`.
pub fn chain3() -> FiniteCategory {
    poset(&["0", "1", "2"], &[("0", "1"), ("1", "2")])
}

/// Names of the shipped fixtures whose base is 2-filtered.
pub const TWO_FILTERED: [&str; 7] = [
    "terminal",
    "chain-3",
    "poset-top",
    "chaotic-parallel",
    "z2-weighted",
    "locally-posetal",
    "chaotic-dag-top",
];
