use rayon::prelude::*;

use super::{Axiom, AxiomInput, AxiomInstance, AxiomResult, Witness};
use crate::twocat::{Arrow, Cell, Obj, PastingSquare, TwoCategory};

/// Every span `(f, g)` with a common source, ordered by `(f, g)`.
pub fn spans(cat: &TwoCategory) -> Vec<(Arrow, Arrow)> {
    let mut out = Vec::new();
    for f in cat.arrows() {
        for &g in cat.arrows_from(cat.src(f)) {
            out.push((f, g));
        }
    }
    out
}

/// Every square on the span `(f, g)` in search order: apex, then `u`, then `v`, then the
/// cell.
pub fn squares(cat: &TwoCategory, f: Arrow, g: Arrow) -> impl Iterator<Item = PastingSquare> + '_ {
    let (a, b) = (cat.dst(f), cat.dst(g));
    cat.objects().flat_map(move |c| {
        cat.arrows_between(a, c).iter().flat_map(move |&u| {
            cat.arrows_between(b, c).iter().flat_map(move |&v| {
                let (uf, vg) = (cat.comp(u, f), cat.comp(v, g));
                cat.cells_between(uf, vg)
                    .iter()
                    .map(move |&cell| PastingSquare {
                        top: f,
                        left: g,
                        right: u,
                        bottom: v,
                        cell,
                    })
            })
        })
    })
}

/// Squares on `(f, g)` with an invertible cell, in search order.
pub fn invertible_squares(
    cat: &TwoCategory,
    f: Arrow,
    g: Arrow,
) -> impl Iterator<Item = PastingSquare> + '_ {
    squares(cat, f, g).filter(move |s| cat.is_invertible(s.cell))
}

/// First invertible square on `(f, g)`.
pub fn first_f1_witness(cat: &TwoCategory, f: Arrow, g: Arrow) -> Option<PastingSquare> {
    invertible_squares(cat, f, g).next()
}

/// First `(w1, w2, α, β)` with invertible cells making the LL equation hold for two
/// squares on the same span.
pub fn find_ll_witness(
    cat: &TwoCategory,
    sq1: &PastingSquare,
    sq2: &PastingSquare,
) -> Option<Witness> {
    ll_witnesses(cat, sq1, sq2).next()
}

/// All LL witnesses in search order.
pub fn ll_witnesses<'a>(
    cat: &'a TwoCategory,
    sq1: &'a PastingSquare,
    sq2: &'a PastingSquare,
) -> impl Iterator<Item = Witness> + 'a {
    let (c1, c2) = (sq1.apex(cat), sq2.apex(cat));
    cat.objects().flat_map(move |c| {
        cat.arrows_between(c1, c).iter().flat_map(move |&w1| {
            cat.arrows_between(c2, c).iter().flat_map(move |&w2| {
                let (w1v1, w2v2) = (cat.comp(w1, sq1.bottom), cat.comp(w2, sq2.bottom));
                let (w1u1, w2u2) = (cat.comp(w1, sq1.right), cat.comp(w2, sq2.right));
                cat.invertible_cells_between(w1v1, w2v2)
                    .flat_map(move |alpha| {
                        cat.invertible_cells_between(w1u1, w2u2)
                            .filter_map(move |beta| {
                                let (l, r) = cat.ll_sides(sq1, sq2, w1, w2, alpha, beta).ok()?;
                                (l == r).then_some(Witness::Equalizer {
                                    w1,
                                    w2,
                                    alpha,
                                    beta,
                                })
                            })
                    })
            })
        })
    })
}

fn cocone(cat: &TwoCategory, a: Obj, b: Obj) -> Option<Witness> {
    cat.objects().find_map(|c| {
        let u = *cat.arrows_between(a, c).first()?;
        let v = *cat.arrows_between(b, c).first()?;
        Some(Witness::Cocone { apex: c, u, v })
    })
}

fn double_square(cat: &TwoCategory, f1: Arrow, g1: Arrow, f2: Arrow, g2: Arrow) -> Option<Witness> {
    let (a, b) = (cat.dst(f1), cat.dst(g1));
    for c in cat.objects() {
        for &u in cat.arrows_between(a, c) {
            for &v in cat.arrows_between(b, c) {
                let first = cat
                    .invertible_cells_between(cat.comp(u, f1), cat.comp(v, g1))
                    .next();
                let second = cat
                    .invertible_cells_between(cat.comp(u, f2), cat.comp(v, g2))
                    .next();
                if let (Some(g1c), Some(g2c)) = (first, second) {
                    return Some(Witness::DoubleSquare(
                        PastingSquare {
                            top: f1,
                            left: g1,
                            right: u,
                            bottom: v,
                            cell: g1c,
                        },
                        PastingSquare {
                            top: f2,
                            left: g2,
                            right: u,
                            bottom: v,
                            cell: g2c,
                        },
                    ));
                }
            }
        }
    }
    None
}

/// First `h` out of the apex making `hγ` invertible, with the trivial factorizations
/// `w2 = w1 = id`, `s2 = h∘v`, `s1 = h∘u` and identity `α`, `β`.
fn wf3_witness(cat: &TwoCategory, sq: &PastingSquare) -> Option<Witness> {
    let c = sq.apex(cat);
    for &h in cat.arrows_from(c) {
        let hg = cat.whisker_left(h, sq.cell);
        if cat.is_invertible(hg) {
            let d = cat.dst(h);
            let (hv, hu) = (cat.comp(h, sq.bottom), cat.comp(h, sq.right));
            return Some(Witness::Invertibility {
                h2: h,
                s2: hv,
                w2: cat.id(d),
                alpha: cat.id_cell(hv),
                h1: h,
                s1: hu,
                w1: cat.id(d),
                beta: cat.id_cell(hu),
            });
        }
    }
    None
}

fn merge(cat: &TwoCategory, f: Arrow, g: Arrow) -> Option<Witness> {
    let b = cat.dst(f);
    cat.objects().find_map(|c| {
        cat.arrows_between(b, c).iter().find_map(|&u| {
            let gamma = cat
                .invertible_cells_between(cat.comp(u, f), cat.comp(u, g))
                .next()?;
            Some(Witness::Merge { u, gamma })
        })
    })
}

fn whisker_equalizer(cat: &TwoCategory, g1: Cell, g2: Cell) -> Option<Witness> {
    let b = cat.dst(cat.cell_src(g1));
    cat.arrows_from(b)
        .iter()
        .find(|&&u| cat.whisker_left(u, g1) == cat.whisker_left(u, g2))
        .map(|&u| Witness::Whisker { u })
}

fn run(
    axiom: Axiom,
    inputs: Vec<AxiomInput>,
    search: impl Fn(&AxiomInput) -> Option<Witness> + Sync,
) -> AxiomResult {
    let instances: Vec<AxiomInstance> = inputs
        .into_par_iter()
        .map(|input| {
            let witness = search(&input);
            AxiomInstance { input, witness }
        })
        .collect();
    let counterexample = instances
        .iter()
        .find(|i| i.witness.is_none())
        .map(|i| i.input);
    AxiomResult {
        axiom,
        holds: counterexample.is_none(),
        instances,
        counterexample,
    }
}

fn object_pairs(cat: &TwoCategory) -> Vec<AxiomInput> {
    cat.objects()
        .flat_map(|a| cat.objects().map(move |b| AxiomInput::Objects(a, b)))
        .collect()
}

fn square_pairs(cat: &TwoCategory, invertible_only: bool) -> Vec<AxiomInput> {
    spans(cat)
        .into_par_iter()
        .flat_map_iter(|(f, g)| {
            let sqs: Vec<PastingSquare> = squares(cat, f, g)
                .filter(|s| !invertible_only || cat.is_invertible(s.cell))
                .collect();
            let mut out = Vec::with_capacity(sqs.len() * sqs.len());
            for s1 in &sqs {
                for s2 in &sqs {
                    out.push(AxiomInput::SquarePair(*s1, *s2));
                }
            }
            out
        })
        .collect()
}

pub(super) fn check(axiom: Axiom, cat: &TwoCategory) -> AxiomResult {
    match axiom {
        Axiom::NonEmpty => {
            let witness = cat.objects().next().map(Witness::Object);
            AxiomResult {
                axiom,
                holds: witness.is_some(),
                counterexample: witness.is_none().then_some(AxiomInput::Nothing),
                instances: vec![AxiomInstance {
                    input: AxiomInput::Nothing,
                    witness,
                }],
            }
        }
        Axiom::F0 | Axiom::BF0 => run(axiom, object_pairs(cat), |i| match *i {
            AxiomInput::Objects(a, b) => cocone(cat, a, b),
            _ => unreachable!(),
        }),
        Axiom::F1 | Axiom::WF1 => {
            let inputs = spans(cat)
                .into_iter()
                .map(|(f, g)| AxiomInput::Span { f, g })
                .collect();
            let invertible = axiom == Axiom::F1;
            run(axiom, inputs, |i| match *i {
                AxiomInput::Span { f, g } => squares(cat, f, g)
                    .find(|s| !invertible || cat.is_invertible(s.cell))
                    .map(Witness::Square),
                _ => unreachable!(),
            })
        }
        Axiom::F2 | Axiom::WF2 => run(axiom, square_pairs(cat, axiom == Axiom::WF2), |i| match i {
            AxiomInput::SquarePair(s1, s2) => find_ll_witness(cat, s1, s2),
            _ => unreachable!(),
        }),
        Axiom::WF3 => {
            let inputs = spans(cat)
                .into_iter()
                .flat_map(|(f, g)| {
                    squares(cat, f, g)
                        .map(AxiomInput::Square)
                        .collect::<Vec<_>>()
                })
                .collect();
            run(axiom, inputs, |i| match i {
                AxiomInput::Square(s) => wf3_witness(cat, s),
                _ => unreachable!(),
            })
        }
        Axiom::FF1 => {
            let sp = spans(cat);
            let mut inputs = Vec::new();
            for &(f1, g1) in &sp {
                for &(f2, g2) in &sp {
                    if cat.dst(f1) == cat.dst(f2) && cat.dst(g1) == cat.dst(g2) {
                        inputs.push(AxiomInput::SpanPair { f1, g1, f2, g2 });
                    }
                }
            }
            run(axiom, inputs, |i| match *i {
                AxiomInput::SpanPair { f1, g1, f2, g2 } => double_square(cat, f1, g1, f2, g2),
                _ => unreachable!(),
            })
        }
        Axiom::BF1 => {
            let mut inputs = Vec::new();
            for f in cat.arrows() {
                for &g in cat.arrows_between(cat.src(f), cat.dst(f)) {
                    inputs.push(AxiomInput::Parallel(f, g));
                }
            }
            run(axiom, inputs, |i| match *i {
                AxiomInput::Parallel(f, g) => merge(cat, f, g),
                _ => unreachable!(),
            })
        }
        Axiom::BF2 => {
            let mut inputs = Vec::new();
            for c1 in cat.cells() {
                for &c2 in cat.cells_between(cat.cell_src(c1), cat.cell_dst(c1)) {
                    inputs.push(AxiomInput::ParallelCells(c1, c2));
                }
            }
            run(axiom, inputs, |i| match *i {
                AxiomInput::ParallelCells(a, b) => whisker_equalizer(cat, a, b),
                _ => unreachable!(),
            })
        }
    }
}

/// Re-checks a witness against its axiom's defining equation using only table lookups
/// and pasting.
pub fn replay(cat: &TwoCategory, axiom: Axiom, input: &AxiomInput, witness: &Witness) -> bool {
    match (axiom, input, witness) {
        (Axiom::NonEmpty, AxiomInput::Nothing, Witness::Object(o)) => o.0 < cat.num_objects(),
        (Axiom::F0 | Axiom::BF0, &AxiomInput::Objects(a, b), &Witness::Cocone { apex, u, v }) => {
            cat.src(u) == a && cat.src(v) == b && cat.dst(u) == apex && cat.dst(v) == apex
        }
        (Axiom::F1 | Axiom::WF1, &AxiomInput::Span { f, g }, Witness::Square(s)) => {
            s.top == f
                && s.left == g
                && s.validate(cat).is_ok()
                && (axiom == Axiom::WF1 || cat.is_invertible(s.cell))
        }
        (
            Axiom::F2 | Axiom::WF2,
            AxiomInput::SquarePair(s1, s2),
            &Witness::Equalizer {
                w1,
                w2,
                alpha,
                beta,
            },
        ) => {
            let shapes_ok = s1.validate(cat).is_ok()
                && s2.validate(cat).is_ok()
                && s1.top == s2.top
                && s1.left == s2.left
                && (axiom == Axiom::F2
                    || (cat.is_invertible(s1.cell) && cat.is_invertible(s2.cell)));
            shapes_ok
                && cat.is_invertible(alpha)
                && cat.is_invertible(beta)
                && matches!(cat.ll_sides(s1, s2, w1, w2, alpha, beta), Ok((l, r)) if l == r)
        }
        (
            Axiom::WF3,
            AxiomInput::Square(s),
            &Witness::Invertibility {
                h2,
                s2,
                w2,
                alpha,
                h1,
                s1,
                w1,
                beta,
            },
        ) => {
            let lower = (|| {
                let expected = (cat.try_comp(h2, s.bottom).ok()?, cat.try_comp(w2, s2).ok()?);
                if (cat.cell_src(alpha), cat.cell_dst(alpha)) != expected
                    || !cat.is_invertible(alpha)
                {
                    return None;
                }
                let pasted = cat
                    .vcomp_seq(&[
                        cat.whisker(&[h2], s.cell, &[]).ok()?,
                        cat.whisker(&[], alpha, &[s.left]).ok()?,
                    ])
                    .ok()?;
                Some(cat.is_invertible(pasted))
            })();
            let upper = (|| {
                let expected = (cat.try_comp(w1, s1).ok()?, cat.try_comp(h1, s.right).ok()?);
                if (cat.cell_src(beta), cat.cell_dst(beta)) != expected || !cat.is_invertible(beta)
                {
                    return None;
                }
                let pasted = cat
                    .vcomp_seq(&[
                        cat.whisker(&[], beta, &[s.top]).ok()?,
                        cat.whisker(&[h1], s.cell, &[]).ok()?,
                    ])
                    .ok()?;
                Some(cat.is_invertible(pasted))
            })();
            lower == Some(true) && upper == Some(true)
        }
        (Axiom::FF1, &AxiomInput::SpanPair { f1, g1, f2, g2 }, Witness::DoubleSquare(a, b)) => {
            (a.top, a.left, b.top, b.left) == (f1, g1, f2, g2)
                && a.right == b.right
                && a.bottom == b.bottom
                && a.validate(cat).is_ok()
                && b.validate(cat).is_ok()
                && cat.is_invertible(a.cell)
                && cat.is_invertible(b.cell)
        }
        (Axiom::BF1, &AxiomInput::Parallel(f, g), &Witness::Merge { u, gamma }) => {
            cat.try_comp(u, f).ok() == Some(cat.cell_src(gamma))
                && cat.try_comp(u, g).ok() == Some(cat.cell_dst(gamma))
                && cat.is_invertible(gamma)
        }
        (Axiom::BF2, &AxiomInput::ParallelCells(a, b), &Witness::Whisker { u }) => {
            matches!((cat.try_whisker_left(u, a), cat.try_whisker_left(u, b)), (Ok(x), Ok(y)) if x == y)
        }
        _ => false,
    }
}
