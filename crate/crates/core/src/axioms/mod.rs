//! Filteredness axioms decided by exhaustive witness search.
//!
//! Every quantifier ranges over declared data, so each check terminates. Searches run
//! in declaration order and the first witness wins; per-input searches run in parallel
//! but results are collected in input order.

mod checks;

use std::fmt;

use serde::Serialize;

pub use checks::{
    find_ll_witness, first_f1_witness, invertible_squares, ll_witnesses, replay, spans, squares,
};

use crate::twocat::{Arrow, Cell, Obj, PastingSquare, TwoCategory};

/// The axioms this module decides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Axiom {
    NonEmpty,
    F0,
    F1,
    F2,
    FF1,
    WF1,
    WF2,
    WF3,
    BF0,
    BF1,
    BF2,
}

impl Axiom {
    pub const ALL: [Axiom; 11] = [
        Axiom::NonEmpty,
        Axiom::F0,
        Axiom::F1,
        Axiom::F2,
        Axiom::FF1,
        Axiom::WF1,
        Axiom::WF2,
        Axiom::WF3,
        Axiom::BF0,
        Axiom::BF1,
        Axiom::BF2,
    ];
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The universally quantified data of one axiom instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum AxiomInput {
    /// Non-emptiness has no input.
    Nothing,
    Objects(Obj, Obj),
    Span {
        f: Arrow,
        g: Arrow,
    },
    SpanPair {
        f1: Arrow,
        g1: Arrow,
        f2: Arrow,
        g2: Arrow,
    },
    SquarePair(PastingSquare, PastingSquare),
    Square(PastingSquare),
    Parallel(Arrow, Arrow),
    ParallelCells(Cell, Cell),
}

/// The existentially quantified data found for one instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Witness {
    Object(Obj),
    Cocone {
        apex: Obj,
        u: Arrow,
        v: Arrow,
    },
    Square(PastingSquare),
    /// `α: w1∘v1 => w2∘v2`, `β: w1∘u1 => w2∘u2` satisfying the LL equation.
    Equalizer {
        w1: Arrow,
        w2: Arrow,
        alpha: Cell,
        beta: Cell,
    },
    DoubleSquare(PastingSquare, PastingSquare),
    /// `α: h2∘v => w2∘s2` and `β: w1∘s1 => h1∘u` making both pastings invertible.
    Invertibility {
        h2: Arrow,
        s2: Arrow,
        w2: Arrow,
        alpha: Cell,
        h1: Arrow,
        s1: Arrow,
        w1: Arrow,
        beta: Cell,
    },
    Merge {
        u: Arrow,
        gamma: Cell,
    },
    Whisker {
        u: Arrow,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomInstance {
    pub input: AxiomInput,
    pub witness: Option<Witness>,
}

/// Outcome of checking one axiom: every instance with its witness, and the first
/// instance without one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomResult {
    pub axiom: Axiom,
    pub holds: bool,
    pub instances: Vec<AxiomInstance>,
    pub counterexample: Option<AxiomInput>,
}

pub fn check_axiom(axiom: Axiom, cat: &TwoCategory) -> AxiomResult {
    checks::check(axiom, cat)
}

pub fn check_f0(cat: &TwoCategory) -> AxiomResult {
    check_axiom(Axiom::F0, cat)
}
pub fn check_f1(cat: &TwoCategory) -> AxiomResult {
    check_axiom(Axiom::F1, cat)
}
pub fn check_f2(cat: &TwoCategory) -> AxiomResult {
    check_axiom(Axiom::F2, cat)
}
pub fn check_ff1(cat: &TwoCategory) -> AxiomResult {
    check_axiom(Axiom::FF1, cat)
}
pub fn check_wf1(cat: &TwoCategory) -> AxiomResult {
    check_axiom(Axiom::WF1, cat)
}
pub fn check_wf2(cat: &TwoCategory) -> AxiomResult {
    check_axiom(Axiom::WF2, cat)
}
pub fn check_wf3(cat: &TwoCategory) -> AxiomResult {
    check_axiom(Axiom::WF3, cat)
}
pub fn check_bf0(cat: &TwoCategory) -> AxiomResult {
    check_axiom(Axiom::BF0, cat)
}
pub fn check_bf1(cat: &TwoCategory) -> AxiomResult {
    check_axiom(Axiom::BF1, cat)
}
pub fn check_bf2(cat: &TwoCategory) -> AxiomResult {
    check_axiom(Axiom::BF2, cat)
}

/// The four filteredness notions, with the axiom results they were derived from.
#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub pre_2_filtered: bool,
    pub pseudo_2_filtered: bool,
    pub two_filtered: bool,
    /// Kennison's notion. Taken to include non-emptiness, like 2-filteredness.
    pub bifiltered: bool,
    pub results: Vec<AxiomResult>,
}

impl Classification {
    pub fn result(&self, axiom: Axiom) -> &AxiomResult {
        self.results
            .iter()
            .find(|r| r.axiom == axiom)
            .expect("all axioms are checked")
    }

    pub fn holds(&self, axiom: Axiom) -> bool {
        self.result(axiom).holds
    }

    /// The set of axioms `F1, F2` agrees with `WF1, WF2, WF3`.
    pub fn weak_axioms_agree(&self) -> bool {
        (self.holds(Axiom::F1) && self.holds(Axiom::F2))
            == (self.holds(Axiom::WF1) && self.holds(Axiom::WF2) && self.holds(Axiom::WF3))
    }

    /// Bifiltered agrees with 2-filtered.
    pub fn kennison_agrees(&self) -> bool {
        self.bifiltered == self.two_filtered
    }

    /// Compact `pre/pseudo/2f/bif` flag string such as `TTF-F`.
    pub fn flags(&self) -> String {
        let t = |b: bool| if b { 'T' } else { 'F' };
        format!(
            "{}{}{}-{}",
            t(self.pre_2_filtered),
            t(self.pseudo_2_filtered),
            t(self.two_filtered),
            t(self.bifiltered)
        )
    }
}

/// Runs every checker and derives the four notions.
pub fn classify(cat: &TwoCategory) -> Classification {
    let results: Vec<AxiomResult> = Axiom::ALL.iter().map(|&a| check_axiom(a, cat)).collect();
    let holds = |a: Axiom| {
        results
            .iter()
            .find(|r| r.axiom == a)
            .expect("checked")
            .holds
    };
    let pre = holds(Axiom::F1) && holds(Axiom::F2);
    let pseudo = pre && holds(Axiom::FF1);
    let two = pseudo && holds(Axiom::NonEmpty) && holds(Axiom::F0);
    let bif = holds(Axiom::NonEmpty) && holds(Axiom::BF0) && holds(Axiom::BF1) && holds(Axiom::BF2);
    assert!(!two || pseudo, "2-filtered must imply pseudo 2-filtered");
    assert!(
        !pseudo || pre,
        "pseudo 2-filtered must imply pre 2-filtered"
    );
    Classification {
        pre_2_filtered: pre,
        pseudo_2_filtered: pseudo,
        two_filtered: two,
        bifiltered: bif,
        results,
    }
}

/// Whether `F1 ∧ F2` and `WF1 ∧ WF2 ∧ WF3` agree on this instance.
pub fn check_prop_equivalence(cat: &TwoCategory) -> bool {
    let h = |a| check_axiom(a, cat).holds;
    (h(Axiom::F1) && h(Axiom::F2)) == (h(Axiom::WF1) && h(Axiom::WF2) && h(Axiom::WF3))
}

/// Whether bifiltered and 2-filtered agree on this instance.
pub fn check_kennison_equivalence(cat: &TwoCategory) -> bool {
    classify(cat).kennison_agrees()
}

/// Cheap check of the pre-2-filtered property, stopping at the first failing axiom.
pub fn is_pre_2_filtered(cat: &TwoCategory) -> Result<(), (Axiom, AxiomInput)> {
    for a in [Axiom::F1, Axiom::F2] {
        let r = check_axiom(a, cat);
        if let Some(c) = r.counterexample {
            return Err((a, c));
        }
    }
    Ok(())
}

/// Describes an axiom input by element names.
pub fn describe_input(cat: &TwoCategory, input: &AxiomInput) -> String {
    let a = |x: Arrow| cat.arrow_name(x).to_string();
    let sq = |s: &PastingSquare| {
        format!(
            "square({}, {}; {}, {}; {})",
            a(s.top),
            a(s.left),
            a(s.right),
            a(s.bottom),
            cat.cell_name(s.cell)
        )
    };
    match input {
        AxiomInput::Nothing => "the 2-category is empty".into(),
        AxiomInput::Objects(x, y) => {
            format!("objects ({}, {})", cat.object_name(*x), cat.object_name(*y))
        }
        AxiomInput::Span { f, g } => format!("span ({}, {})", a(*f), a(*g)),
        AxiomInput::SpanPair { f1, g1, f2, g2 } => {
            format!(
                "spans ({}, {}) and ({}, {})",
                a(*f1),
                a(*g1),
                a(*f2),
                a(*g2)
            )
        }
        AxiomInput::SquarePair(s1, s2) => format!("{} and {}", sq(s1), sq(s2)),
        AxiomInput::Square(s) => sq(s),
        AxiomInput::Parallel(f, g) => format!("parallel 1-cells ({}, {})", a(*f), a(*g)),
        AxiomInput::ParallelCells(x, y) => {
            format!(
                "parallel 2-cells ({}, {})",
                cat.cell_name(*x),
                cat.cell_name(*y)
            )
        }
    }
}
