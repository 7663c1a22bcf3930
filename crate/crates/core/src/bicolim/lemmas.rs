//! Witness search for the auxiliary statements about premorphisms and homotopies.
//!
//! Each tag names one existence statement. [`lemma_witnesses`] checks the axiom level
//! the statement needs, searches the finite data for a witness in a fixed order, and
//! replays the witness before returning it.

use std::collections::BTreeMap;

use serde::Serialize;

use super::homotopy::{
    basic_homotopies, check_ll_equation, find_homotopy, homotopies, is_homotopy,
    vertical_compose_homotopies,
};
use super::premorphism::identity_premorphism;
use super::{Homotopy, LObject, Premorphism};
use crate::axioms::{check_axiom, describe_input, is_pre_2_filtered, Axiom};
use crate::fincat::CatValued2Functor;
use crate::twocat::{Arrow, Cell, Obj, PastingSquare, TwoCategory};
use crate::{precondition, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum LemmaTag {
    /// Equivalent premorphisms with `u_i = v_i` are related by a homotopy with `α = β`.
    EqualCells,
    /// A family of squares on one span is equalized by a single cocone.
    EqualizingFamily,
    /// Two squares on one span give equivalent premorphisms at every object of `FE`.
    CellsEquivalent,
    /// The two basic homotopies attached to `(w1, w2, α, β)`.
    BasicEquivalence,
    /// Moving a premorphism along invertible cells gives an equivalent one.
    Transport,
    /// Arrows of `FA` identified in `L(F)` are identified by some `F(w)`.
    EqualizingArrow,
    /// Every endomorphism class of a fibre has a representative with `u = v`.
    EqualLegs,
    /// A finite family of premorphisms is moved to a single cocone.
    SingleCocone,
}

impl LemmaTag {
    pub const ALL: [LemmaTag; 8] = [
        LemmaTag::EqualCells,
        LemmaTag::EqualizingFamily,
        LemmaTag::CellsEquivalent,
        LemmaTag::BasicEquivalence,
        LemmaTag::Transport,
        LemmaTag::EqualizingArrow,
        LemmaTag::EqualLegs,
        LemmaTag::SingleCocone,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaTag::EqualCells => "equal-cells",
            LemmaTag::EqualizingFamily => "equalizing-family",
            LemmaTag::CellsEquivalent => "cells-equivalent",
            LemmaTag::BasicEquivalence => "basic-equivalence",
            LemmaTag::Transport => "transport",
            LemmaTag::EqualizingArrow => "equalizing-arrow",
            LemmaTag::EqualLegs => "equal-legs",
            LemmaTag::SingleCocone => "single-cocone",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.name() == s)
    }

    /// Whether the statement needs FF1 on top of F1 and F2.
    pub fn needs_ff1(self) -> bool {
        matches!(self, LemmaTag::EqualLegs | LemmaTag::SingleCocone)
    }
}

/// The hypotheses of one statement, as concrete data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum LemmaInput {
    EqualCells {
        first: Premorphism,
        second: Premorphism,
    },
    /// `second` may be empty; otherwise it has one square per entry of `squares`, on a
    /// common span of its own, with the same right and bottom edges.
    EqualizingFamily {
        squares: Vec<PastingSquare>,
        second: Vec<PastingSquare>,
    },
    /// `element` is an object of `F(E)`, where `E` is the common source of the span.
    CellsEquivalent {
        first: PastingSquare,
        second: PastingSquare,
        element: usize,
    },
    BasicEquivalence {
        first: Premorphism,
        second: Premorphism,
        w1: Arrow,
        w2: Arrow,
        alpha: Cell,
        beta: Cell,
    },
    /// `α: s => w∘u` and `β: w∘v => t`, both invertible.
    Transport {
        premorphism: Premorphism,
        w: Arrow,
        s: Arrow,
        t: Arrow,
        alpha: Cell,
        beta: Cell,
    },
    /// Two parallel morphisms of `F(base)`.
    EqualizingArrow {
        base: Obj,
        first: usize,
        second: usize,
    },
    EqualLegs {
        premorphism: Premorphism,
    },
    /// Premorphisms sharing the base objects of their ends.
    SingleCocone {
        family: Vec<Premorphism>,
    },
}

impl LemmaInput {
    pub fn tag(&self) -> LemmaTag {
        match self {
            LemmaInput::EqualCells { .. } => LemmaTag::EqualCells,
            LemmaInput::EqualizingFamily { .. } => LemmaTag::EqualizingFamily,
            LemmaInput::CellsEquivalent { .. } => LemmaTag::CellsEquivalent,
            LemmaInput::BasicEquivalence { .. } => LemmaTag::BasicEquivalence,
            LemmaInput::Transport { .. } => LemmaTag::Transport,
            LemmaInput::EqualizingArrow { .. } => LemmaTag::EqualizingArrow,
            LemmaInput::EqualLegs { .. } => LemmaTag::EqualLegs,
            LemmaInput::SingleCocone { .. } => LemmaTag::SingleCocone,
        }
    }
}

/// One leg `w_i: C_i -> C` of a cocone with `α_i: w_i∘v_i => v` and `β_i: u => w_i∘u_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoconeLeg {
    pub w: Arrow,
    pub alpha: Cell,
    pub beta: Cell,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum LemmaWitness {
    EqualCells {
        homotopy: Homotopy,
    },
    EqualizingFamily {
        apex: Obj,
        u: Arrow,
        v: Arrow,
        legs: Vec<CoconeLeg>,
        /// The common pasting of the first family.
        value: Cell,
        second_value: Option<Cell>,
    },
    CellsEquivalent {
        first: Premorphism,
        second: Premorphism,
        homotopy: Homotopy,
    },
    /// `composite` is present exactly when `(w1, w2, α, β)` satisfies the homotopy
    /// equation; it then relates the two input premorphisms.
    BasicEquivalence {
        first: Homotopy,
        second: Homotopy,
        composite: Option<Homotopy>,
    },
    Transport {
        premorphism: Premorphism,
        homotopy: Homotopy,
    },
    EqualizingArrow {
        w: Arrow,
    },
    EqualLegs {
        representative: Premorphism,
        homotopy: Homotopy,
    },
    SingleCocone {
        apex: Obj,
        u: Arrow,
        v: Arrow,
        legs: Vec<CoconeLeg>,
        transported: Vec<Premorphism>,
        homotopies: Vec<Homotopy>,
    },
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::Validation(msg.into())
}

fn not_found(tag: LemmaTag) -> Error {
    Error::Internal(format!(
        "no witness found for {} although its hypotheses hold",
        tag.name()
    ))
}

fn require(f: &CatValued2Functor, tag: LemmaTag) -> Result<()> {
    let b = f.base();
    if let Err((axiom, input)) = is_pre_2_filtered(b) {
        return Err(precondition(
            format!("pre-2-filtered ({axiom})"),
            describe_input(b, &input),
        ));
    }
    if tag.needs_ff1() {
        if let Some(c) = check_axiom(Axiom::FF1, b).counterexample {
            return Err(precondition(
                "pseudo-2-filtered (FF1)",
                describe_input(b, &c),
            ));
        }
    }
    Ok(())
}

fn check_premorphism(f: &CatValued2Functor, p: &Premorphism) -> Result<()> {
    let b = f.base();
    let ok_ends = p.src.base.0 < b.num_objects()
        && p.dst.base.0 < b.num_objects()
        && p.src.element < f.cat(p.src.base).num_objects()
        && p.dst.element < f.cat(p.dst.base).num_objects();
    if !ok_ends || p.u.0 >= b.num_arrows() || p.v.0 >= b.num_arrows() {
        return Err(invalid("premorphism refers to unknown data"));
    }
    if b.src(p.u) != p.src.base
        || b.src(p.v) != p.dst.base
        || b.dst(p.u) != p.apex
        || b.dst(p.v) != p.apex
    {
        return Err(invalid("premorphism legs do not meet at its apex"));
    }
    let fc = f.cat(p.apex);
    if p.xi >= fc.num_morphisms()
        || fc.src(p.xi) != f.obj(p.u, p.src.element)
        || fc.dst(p.xi) != f.obj(p.v, p.dst.element)
    {
        return Err(invalid("premorphism morphism has the wrong boundary"));
    }
    Ok(())
}

fn check_invertible(b: &TwoCategory, c: Cell, from: Arrow, to: Arrow, label: &str) -> Result<()> {
    if c.0 >= b.num_cells() || b.cell_src(c) != from || b.cell_dst(c) != to {
        return Err(invalid(format!(
            "{label} must be a cell {} => {}",
            b.arrow_name(from),
            b.arrow_name(to)
        )));
    }
    if !b.is_invertible(c) {
        return Err(invalid(format!("{label} must be invertible")));
    }
    Ok(())
}

/// `(α_i g)·(w_i γ_i)·(β_i f)` for a square `γ_i` on `(f, g)`.
fn paste(b: &TwoCategory, sq: &PastingSquare, leg: &CoconeLeg) -> Option<Cell> {
    let first = b.try_whisker_right(leg.beta, sq.top).ok()?;
    let middle = b.try_whisker_left(leg.w, sq.cell).ok()?;
    let last = b.try_whisker_right(leg.alpha, sq.left).ok()?;
    b.vcomp_seq(&[first, middle, last]).ok()
}

/// `(s, F(β)_y ∘ F(w)ξ ∘ F(α)_x, t)` together with the homotopy `(β, α⁻¹)` from `p`.
fn transport(
    f: &CatValued2Functor,
    p: &Premorphism,
    w: Arrow,
    s: Arrow,
    t: Arrow,
    alpha: Cell,
    beta: Cell,
) -> Result<(Premorphism, Homotopy)> {
    let b = f.base();
    if b.src(w) != p.apex || b.dst(s) != b.dst(w) || b.dst(t) != b.dst(w) {
        return Err(invalid("transport arrows do not share a target"));
    }
    check_invertible(b, alpha, s, b.comp(w, p.u), "alpha")?;
    check_invertible(b, beta, b.comp(w, p.v), t, "beta")?;
    let d = b.dst(w);
    let fd = f.cat(d);
    let xi = fd
        .compose_path(&[
            f.comp2(alpha, p.src.element),
            f.mor(w, p.xi),
            f.comp2(beta, p.dst.element),
        ])
        .ok_or_else(|| Error::Internal("transported morphism has mismatched boundaries".into()))?;
    let moved = Premorphism {
        src: p.src,
        dst: p.dst,
        apex: d,
        u: s,
        v: t,
        xi,
    };
    let alpha_inv = b
        .inverse(alpha)
        .ok_or_else(|| invalid("alpha must be invertible"))?;
    let homotopy = Homotopy {
        from: *p,
        to: moved,
        apex: d,
        w1: w,
        w2: b.id(d),
        alpha: beta,
        beta: alpha_inv,
    };
    Ok((moved, homotopy))
}

fn holds(f: &CatValued2Functor, h: &Homotopy) -> bool {
    is_homotopy(f, h).unwrap_or(false)
}

/// Searches, checks and replays a witness for `input`.
///
/// Errors: [`Error::Precondition`] when the base lacks the axiom level of the tag,
/// [`Error::Validation`] when the input data does not satisfy the statement's
/// hypotheses, [`Error::Internal`] when no witness exists or a witness fails replay.
pub fn lemma_witnesses(f: &CatValued2Functor, input: &LemmaInput) -> Result<LemmaWitness> {
    let tag = input.tag();
    require(f, tag)?;
    let witness = search(f, input)?;
    if !witness.replay(f, input) {
        return Err(Error::Internal(format!(
            "witness for {} fails replay",
            tag.name()
        )));
    }
    Ok(witness)
}

fn search(f: &CatValued2Functor, input: &LemmaInput) -> Result<LemmaWitness> {
    let b = f.base();
    let tag = input.tag();
    match input {
        LemmaInput::EqualCells { first, second } => {
            for p in [first, second] {
                check_premorphism(f, p)?;
                if p.u != p.v {
                    return Err(invalid("both premorphisms need equal legs"));
                }
            }
            let mut any = false;
            for h in homotopies(f, first, second) {
                any = true;
                if h.alpha == h.beta {
                    return Ok(LemmaWitness::EqualCells { homotopy: h });
                }
            }
            if any {
                Err(not_found(tag))
            } else {
                Err(invalid("the premorphisms are not related by a homotopy"))
            }
        }
        LemmaInput::EqualizingFamily { squares, second } => equalizing_family(b, squares, second),
        LemmaInput::CellsEquivalent {
            first,
            second,
            element,
        } => {
            for sq in [first, second] {
                sq.validate(b)?;
            }
            if (first.top, first.left) != (second.top, second.left) {
                return Err(invalid("the two squares must sit on one span"));
            }
            let e = b.src(first.top);
            if *element >= f.cat(e).num_objects() {
                return Err(invalid(
                    "element is not an object of the span's source fibre",
                ));
            }
            let lift = |sq: &PastingSquare| Premorphism {
                src: LObject {
                    base: b.dst(sq.top),
                    element: f.obj(sq.top, *element),
                },
                dst: LObject {
                    base: b.dst(sq.left),
                    element: f.obj(sq.left, *element),
                },
                apex: sq.apex(b),
                u: sq.right,
                v: sq.bottom,
                xi: f.comp2(sq.cell, *element),
            };
            let (p, q) = (lift(first), lift(second));
            let homotopy = find_homotopy(f, &p, &q).ok_or_else(|| not_found(tag))?;
            Ok(LemmaWitness::CellsEquivalent {
                first: p,
                second: q,
                homotopy,
            })
        }
        LemmaInput::BasicEquivalence {
            first,
            second,
            w1,
            w2,
            alpha,
            beta,
        } => {
            check_premorphism(f, first)?;
            check_premorphism(f, second)?;
            if !b.is_invertible(*alpha) || !b.is_invertible(*beta) {
                return Err(invalid("alpha and beta must be invertible"));
            }
            let (h1, h2) = basic_homotopies(f, first, second, *w1, *w2, *alpha, *beta)?;
            let composite = if h1.to == h2.from {
                Some(vertical_compose_homotopies(f, &h1, &h2)?)
            } else {
                None
            };
            Ok(LemmaWitness::BasicEquivalence {
                first: h1,
                second: h2,
                composite,
            })
        }
        LemmaInput::Transport {
            premorphism,
            w,
            s,
            t,
            alpha,
            beta,
        } => {
            check_premorphism(f, premorphism)?;
            let (moved, homotopy) = transport(f, premorphism, *w, *s, *t, *alpha, *beta)?;
            Ok(LemmaWitness::Transport {
                premorphism: moved,
                homotopy,
            })
        }
        LemmaInput::EqualizingArrow {
            base,
            first,
            second,
        } => {
            if base.0 >= b.num_objects() {
                return Err(invalid("unknown base object"));
            }
            let fa = f.cat(*base);
            if *first >= fa.num_morphisms()
                || *second >= fa.num_morphisms()
                || fa.src(*first) != fa.src(*second)
                || fa.dst(*first) != fa.dst(*second)
            {
                return Err(invalid("the two morphisms must be parallel in the fibre"));
            }
            let embed = |m: usize| Premorphism {
                xi: m,
                dst: LObject {
                    base: *base,
                    element: fa.dst(m),
                },
                ..identity_premorphism(
                    f,
                    LObject {
                        base: *base,
                        element: fa.src(m),
                    },
                )
            };
            let (p, q) = (embed(*first), embed(*second));
            if find_homotopy(f, &p, &q).is_none() {
                return Err(invalid(
                    "the morphisms have different images in the bicolimit",
                ));
            }
            let w = b
                .arrows_from(*base)
                .iter()
                .copied()
                .find(|&w| f.mor(w, *first) == f.mor(w, *second))
                .ok_or_else(|| not_found(tag))?;
            Ok(LemmaWitness::EqualizingArrow { w })
        }
        LemmaInput::EqualLegs { premorphism: p } => {
            check_premorphism(f, p)?;
            if p.src.base != p.dst.base {
                return Err(invalid("both ends must lie over one object"));
            }
            let a = p.src.base;
            for d in b.objects() {
                for &s in b.arrows_between(a, d) {
                    for &t in b.arrows_between(p.apex, d) {
                        let on_v = b.invertible_cells_between(s, b.comp(t, p.v)).next();
                        let on_u = b.invertible_cells_between(s, b.comp(t, p.u)).next();
                        if let (Some(alpha), Some(beta)) = (on_v, on_u) {
                            let alpha_inv = b.inverse(alpha).ok_or_else(|| not_found(tag))?;
                            let (representative, homotopy) =
                                transport(f, p, t, s, s, beta, alpha_inv)?;
                            return Ok(LemmaWitness::EqualLegs {
                                representative,
                                homotopy,
                            });
                        }
                    }
                }
            }
            Err(not_found(tag))
        }
        LemmaInput::SingleCocone { family } => single_cocone(f, family),
    }
}

fn equalizing_family(
    b: &TwoCategory,
    squares: &[PastingSquare],
    second: &[PastingSquare],
) -> Result<LemmaWitness> {
    let tag = LemmaTag::EqualizingFamily;
    let Some(head) = squares.first() else {
        return Err(invalid("the family is empty"));
    };
    for sq in squares.iter().chain(second) {
        sq.validate(b)?;
    }
    if squares
        .iter()
        .any(|s| (s.top, s.left) != (head.top, head.left))
    {
        return Err(invalid("the squares must sit on one span"));
    }
    if !second.is_empty() {
        if second.len() != squares.len() {
            return Err(invalid(
                "the second family must have one square per square of the first",
            ));
        }
        let (h, l) = (second[0].top, second[0].left);
        for (s, d) in squares.iter().zip(second) {
            if (d.top, d.left) != (h, l) || (d.right, d.bottom) != (s.right, s.bottom) {
                return Err(invalid(
                    "the second family must sit on one span with the same edges",
                ));
            }
        }
    }
    if squares.len() == 1 {
        let sq = *head;
        let c = sq.apex(b);
        return Ok(LemmaWitness::EqualizingFamily {
            apex: c,
            u: sq.right,
            v: sq.bottom,
            legs: vec![CoconeLeg {
                w: b.id(c),
                alpha: b.id_cell(sq.bottom),
                beta: b.id_cell(sq.right),
            }],
            value: sq.cell,
            second_value: second.first().map(|d| d.cell),
        });
    }
    let (a, bb) = (b.dst(head.top), b.dst(head.left));
    for c in b.objects() {
        for &u in b.arrows_between(a, c) {
            for &v in b.arrows_between(bb, c) {
                // For each member, the first leg reaching each pair of pasted values.
                let tables: Vec<BTreeMap<(Cell, Option<Cell>), CoconeLeg>> = squares
                    .iter()
                    .enumerate()
                    .map(|(i, sq)| {
                        let mut table = BTreeMap::new();
                        for &w in b.arrows_between(sq.apex(b), c) {
                            for alpha in b.invertible_cells_between(b.comp(w, sq.bottom), v) {
                                for beta in b.invertible_cells_between(u, b.comp(w, sq.right)) {
                                    let leg = CoconeLeg { w, alpha, beta };
                                    let Some(first) = paste(b, sq, &leg) else {
                                        continue;
                                    };
                                    let other = match second.get(i) {
                                        Some(d) => match paste(b, d, &leg) {
                                            Some(x) => Some(x),
                                            None => continue,
                                        },
                                        None => None,
                                    };
                                    table.entry((first, other)).or_insert(leg);
                                }
                            }
                        }
                        table
                    })
                    .collect();
                let common = tables[0]
                    .keys()
                    .find(|k| tables[1..].iter().all(|t| t.contains_key(k)));
                if let Some(&(value, second_value)) = common {
                    return Ok(LemmaWitness::EqualizingFamily {
                        apex: c,
                        u,
                        v,
                        legs: tables.iter().map(|t| t[&(value, second_value)]).collect(),
                        value,
                        second_value,
                    });
                }
            }
        }
    }
    Err(not_found(tag))
}

fn single_cocone(f: &CatValued2Functor, family: &[Premorphism]) -> Result<LemmaWitness> {
    let b = f.base();
    let Some(head) = family.first() else {
        return Err(invalid("the family is empty"));
    };
    for p in family {
        check_premorphism(f, p)?;
        if p.src.base != head.src.base || p.dst.base != head.dst.base {
            return Err(invalid(
                "the family must share the base objects of its ends",
            ));
        }
    }
    let (a, bb) = (head.src.base, head.dst.base);
    for c in b.objects() {
        for &u in b.arrows_between(a, c) {
            for &v in b.arrows_between(bb, c) {
                if a == bb && u != v {
                    continue;
                }
                let legs: Option<Vec<CoconeLeg>> = family
                    .iter()
                    .map(|p| {
                        b.arrows_between(p.apex, c).iter().find_map(|&w| {
                            let alpha = b.invertible_cells_between(b.comp(w, p.v), v).next()?;
                            let beta = b.invertible_cells_between(u, b.comp(w, p.u)).next()?;
                            Some(CoconeLeg { w, alpha, beta })
                        })
                    })
                    .collect();
                let Some(legs) = legs else { continue };
                let mut transported = Vec::with_capacity(family.len());
                let mut hs = Vec::with_capacity(family.len());
                for (p, leg) in family.iter().zip(&legs) {
                    let (q, h) = transport(f, p, leg.w, u, v, leg.beta, leg.alpha)?;
                    transported.push(q);
                    hs.push(h);
                }
                return Ok(LemmaWitness::SingleCocone {
                    apex: c,
                    u,
                    v,
                    legs,
                    transported,
                    homotopies: hs,
                });
            }
        }
    }
    Err(not_found(LemmaTag::SingleCocone))
}

impl LemmaWitness {
    pub fn tag(&self) -> LemmaTag {
        match self {
            LemmaWitness::EqualCells { .. } => LemmaTag::EqualCells,
            LemmaWitness::EqualizingFamily { .. } => LemmaTag::EqualizingFamily,
            LemmaWitness::CellsEquivalent { .. } => LemmaTag::CellsEquivalent,
            LemmaWitness::BasicEquivalence { .. } => LemmaTag::BasicEquivalence,
            LemmaWitness::Transport { .. } => LemmaTag::Transport,
            LemmaWitness::EqualizingArrow { .. } => LemmaTag::EqualizingArrow,
            LemmaWitness::EqualLegs { .. } => LemmaTag::EqualLegs,
            LemmaWitness::SingleCocone { .. } => LemmaTag::SingleCocone,
        }
    }

    /// Re-checks the witness against `input` from scratch.
    pub fn replay(&self, f: &CatValued2Functor, input: &LemmaInput) -> bool {
        let b = f.base();
        match (self, input) {
            (
                LemmaWitness::EqualCells { homotopy: h },
                LemmaInput::EqualCells { first, second },
            ) => h.from == *first && h.to == *second && h.alpha == h.beta && holds(f, h),
            (
                LemmaWitness::EqualizingFamily {
                    apex,
                    u,
                    v,
                    legs,
                    value,
                    second_value,
                },
                LemmaInput::EqualizingFamily { squares, second },
            ) => {
                if legs.len() != squares.len() || second_value.is_some() == second.is_empty() {
                    return false;
                }
                if b.dst(*u) != *apex || b.dst(*v) != *apex {
                    return false;
                }
                let leg_ok = |sq: &PastingSquare, leg: &CoconeLeg| {
                    b.src(leg.w) == sq.apex(b)
                        && b.dst(leg.w) == *apex
                        && b.is_invertible(leg.alpha)
                        && b.is_invertible(leg.beta)
                        && b.cell_src(leg.alpha) == b.comp(leg.w, sq.bottom)
                        && b.cell_dst(leg.alpha) == *v
                        && b.cell_src(leg.beta) == *u
                        && b.cell_dst(leg.beta) == b.comp(leg.w, sq.right)
                };
                squares
                    .iter()
                    .zip(legs)
                    .all(|(sq, leg)| leg_ok(sq, leg) && paste(b, sq, leg) == Some(*value))
                    && second
                        .iter()
                        .zip(legs)
                        .all(|(d, leg)| leg_ok(d, leg) && paste(b, d, leg) == *second_value)
            }
            (
                LemmaWitness::CellsEquivalent {
                    first,
                    second,
                    homotopy,
                },
                LemmaInput::CellsEquivalent {
                    first: s1,
                    second: s2,
                    element,
                },
            ) => {
                let matches = |p: &Premorphism, sq: &PastingSquare| {
                    p.u == sq.right
                        && p.v == sq.bottom
                        && p.src.element == f.obj(sq.top, *element)
                        && p.dst.element == f.obj(sq.left, *element)
                        && p.xi == f.comp2(sq.cell, *element)
                };
                matches(first, s1)
                    && matches(second, s2)
                    && homotopy.from == *first
                    && homotopy.to == *second
                    && holds(f, homotopy)
            }
            (
                LemmaWitness::BasicEquivalence {
                    first: h1,
                    second: h2,
                    composite,
                },
                LemmaInput::BasicEquivalence {
                    first,
                    second,
                    w1,
                    w2,
                    alpha,
                    beta,
                },
            ) => {
                let whole = Homotopy {
                    from: *first,
                    to: *second,
                    apex: b.dst(*w1),
                    w1: *w1,
                    w2: *w2,
                    alpha: *alpha,
                    beta: *beta,
                };
                let Ok(equation) = check_ll_equation(f, &whole) else {
                    return false;
                };
                let ends = h1.from == *first
                    && h2.to == *second
                    && h1.to.u == h2.from.u
                    && h1.to.v == h2.from.v;
                let both = holds(f, h1) && holds(f, h2);
                let joined = match composite {
                    Some(h) => equation && h.from == *first && h.to == *second && holds(f, h),
                    None => !equation,
                };
                ends && both && joined && (h1.to == h2.from) == equation
            }
            (
                LemmaWitness::Transport {
                    premorphism,
                    homotopy,
                },
                LemmaInput::Transport {
                    premorphism: p,
                    s,
                    t,
                    ..
                },
            ) => {
                premorphism.u == *s
                    && premorphism.v == *t
                    && homotopy.from == *p
                    && homotopy.to == *premorphism
                    && holds(f, homotopy)
            }
            (
                LemmaWitness::EqualizingArrow { w },
                LemmaInput::EqualizingArrow {
                    base,
                    first,
                    second,
                },
            ) => b.src(*w) == *base && f.mor(*w, *first) == f.mor(*w, *second),
            (
                LemmaWitness::EqualLegs {
                    representative,
                    homotopy,
                },
                LemmaInput::EqualLegs { premorphism },
            ) => {
                representative.u == representative.v
                    && homotopy.from == *premorphism
                    && homotopy.to == *representative
                    && holds(f, homotopy)
            }
            (
                LemmaWitness::SingleCocone {
                    apex,
                    u,
                    v,
                    legs,
                    transported,
                    homotopies: hs,
                },
                LemmaInput::SingleCocone { family },
            ) => {
                let shared = family
                    .first()
                    .is_some_and(|p| p.src.base != p.dst.base || u == v);
                shared
                    && legs.len() == family.len()
                    && transported.len() == family.len()
                    && hs.len() == family.len()
                    && family.iter().zip(transported).zip(hs).all(|((p, q), h)| {
                        q.apex == *apex
                            && q.u == *u
                            && q.v == *v
                            && h.from == *p
                            && h.to == *q
                            && holds(f, h)
                    })
            }
            _ => false,
        }
    }
}
