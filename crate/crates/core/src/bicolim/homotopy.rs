use serde::Serialize;

use super::premorphism::compose_premorphisms_over;
use super::{Homotopy, Premorphism};
use crate::axioms::{find_ll_witness, first_f1_witness, Witness};
use crate::fincat::CatValued2Functor;
use crate::twocat::{Arrow, LlShape, PastingSquare, TwoCategory};
use crate::{precondition, Error, Result};

fn boundary(msg: String) -> Error {
    Error::Boundary(crate::twocat::BoundaryMismatch(msg))
}

fn check_shape(b: &TwoCategory, h: &Homotopy) -> Result<()> {
    let (p, q) = (&h.from, &h.to);
    if p.src != q.src || p.dst != q.dst {
        return Err(boundary(
            "homotopy relates premorphisms with different ends".into(),
        ));
    }
    if b.src(h.w1) != p.apex
        || b.src(h.w2) != q.apex
        || b.dst(h.w1) != h.apex
        || b.dst(h.w2) != h.apex
    {
        return Err(boundary(
            "homotopy legs do not start at the premorphism apexes".into(),
        ));
    }
    let want = |cell, x: Arrow, y: Arrow, label: &str| {
        if b.cell_src(cell) == x && b.cell_dst(cell) == y {
            Ok(())
        } else {
            Err(boundary(format!(
                "{label} cell {} is not {} => {}",
                b.cell_name(cell),
                b.arrow_name(x),
                b.arrow_name(y)
            )))
        }
    };
    want(h.alpha, b.comp(h.w1, p.v), b.comp(h.w2, q.v), "alpha")?;
    want(h.beta, b.comp(h.w1, p.u), b.comp(h.w2, q.u), "beta")
}

/// Whether `F(w2)(ξ2) ∘ F(β)_x = F(α)_y ∘ F(w1)(ξ1)` holds in `F(apex)`.
///
/// Boundary errors are reported before anything is evaluated; invertibility of the
/// cells is not part of this check.
pub fn check_ll_equation(f: &CatValued2Functor, h: &Homotopy) -> Result<bool> {
    check_shape(f.base(), h)?;
    let fc = f.cat(h.apex);
    let (x, y) = (h.from.src.element, h.from.dst.element);
    let lhs = fc.compose(f.mor(h.w2, h.to.xi), f.comp2(h.beta, x));
    let rhs = fc.compose(f.comp2(h.alpha, y), f.mor(h.w1, h.from.xi));
    Ok(lhs == rhs)
}

pub(super) fn is_homotopy(f: &CatValued2Functor, h: &Homotopy) -> Result<bool> {
    let b = f.base();
    Ok(b.is_invertible(h.alpha) && b.is_invertible(h.beta) && check_ll_equation(f, h)?)
}

/// Every homotopy `p => q` in search order: apex, `w1`, `w2`, `α`, `β`.
pub fn homotopies<'a>(
    f: &'a CatValued2Functor,
    p: &'a Premorphism,
    q: &'a Premorphism,
) -> impl Iterator<Item = Homotopy> + 'a {
    let b = f.base();
    let (x, y) = (p.src.element, p.dst.element);
    let ends_match = p.src == q.src && p.dst == q.dst;
    b.objects().filter(move |_| ends_match).flat_map(move |c| {
        let fc = f.cat(c);
        b.arrows_between(p.apex, c).iter().flat_map(move |&w1| {
            let moved1 = f.mor(w1, p.xi);
            let (w1v1, w1u1) = (b.comp(w1, p.v), b.comp(w1, p.u));
            b.arrows_between(q.apex, c).iter().flat_map(move |&w2| {
                let moved2 = f.mor(w2, q.xi);
                let (w2v2, w2u2) = (b.comp(w2, q.v), b.comp(w2, q.u));
                b.invertible_cells_between(w1v1, w2v2)
                    .flat_map(move |alpha| {
                        let rhs = fc.compose(f.comp2(alpha, y), moved1);
                        b.invertible_cells_between(w1u1, w2u2)
                            .filter_map(move |beta| {
                                (fc.compose(moved2, f.comp2(beta, x)) == rhs).then_some(Homotopy {
                                    from: *p,
                                    to: *q,
                                    apex: c,
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

/// The first homotopy `p => q` in search order.
pub fn find_homotopy(f: &CatValued2Functor, p: &Premorphism, q: &Premorphism) -> Option<Homotopy> {
    homotopies(f, p, q).next()
}

/// `(id, id, id, id): p => p`.
pub fn identity_homotopy(f: &CatValued2Functor, p: &Premorphism) -> Homotopy {
    let b = f.base();
    let id = b.id(p.apex);
    Homotopy {
        from: *p,
        to: *p,
        apex: p.apex,
        w1: id,
        w2: id,
        alpha: b.id_cell(p.v),
        beta: b.id_cell(p.u),
    }
}

/// `(α⁻¹, β⁻¹): q => p` for `(α, β): p => q`.
pub fn inverse_homotopy(f: &CatValued2Functor, h: &Homotopy) -> Result<Homotopy> {
    let b = f.base();
    let inv = |c| {
        b.inverse(c)
            .ok_or_else(|| Error::Validation(format!("{} is not invertible", b.cell_name(c))))
    };
    Ok(Homotopy {
        from: h.to,
        to: h.from,
        apex: h.apex,
        w1: h.w2,
        w2: h.w1,
        alpha: inv(h.alpha)?,
        beta: inv(h.beta)?,
    })
}

/// `(α' ∘_γ α, β' ∘_γ β)` for a given square `γ` on the span `(w2, w2')` out of the
/// middle apex.
pub fn vertical_compose_over(
    f: &CatValued2Functor,
    h1: &Homotopy,
    h2: &Homotopy,
    sq: &PastingSquare,
) -> Result<Homotopy> {
    let b = f.base();
    if h1.to != h2.from {
        return Err(Error::Validation(
            "homotopies are not vertically composable".into(),
        ));
    }
    if sq.top != h1.w2 || sq.left != h2.w1 {
        return Err(boundary(
            "the square does not sit on the span of the inner legs".into(),
        ));
    }
    sq.validate(b)?;
    let (p1, p2, p3) = (&h1.from, &h1.to, &h2.to);
    let shape = |inn1, inn2, inn3| LlShape {
        top_in: inn1,
        top_out: h1.w1,
        mid_in: inn2,
        mid_up: h1.w2,
        mid_down: h2.w1,
        bot_in: inn3,
        bot_out: h2.w2,
        right_up: sq.right,
        right_down: sq.bottom,
    };
    let alpha = b.ll_compose(h2.alpha, sq.cell, h1.alpha, &shape(p1.v, p2.v, p3.v))?;
    let beta = b.ll_compose(h2.beta, sq.cell, h1.beta, &shape(p1.u, p2.u, p3.u))?;
    Ok(Homotopy {
        from: *p1,
        to: *p3,
        apex: sq.apex(b),
        w1: b.comp(sq.right, h1.w1),
        w2: b.comp(sq.bottom, h2.w2),
        alpha,
        beta,
    })
}

/// Vertical composite over the first invertible square on the inner legs. The result
/// is checked to be a homotopy.
pub fn vertical_compose_homotopies(
    f: &CatValued2Functor,
    h1: &Homotopy,
    h2: &Homotopy,
) -> Result<Homotopy> {
    let b = f.base();
    let sq = first_f1_witness(b, h1.w2, h2.w1).ok_or_else(|| {
        precondition(
            "F1",
            format!(
                "no invertible square on the span ({}, {})",
                b.arrow_name(h1.w2),
                b.arrow_name(h2.w1)
            ),
        )
    })?;
    let h = vertical_compose_over(f, h1, h2, &sq)?;
    if !is_homotopy(f, &h)? {
        return Err(Error::Internal(
            "vertical composite of homotopies fails the homotopy condition".into(),
        ));
    }
    Ok(h)
}

/// The two basic homotopies determined by `ξ1`, `ξ2`, `w1: C1 -> C`, `w2: C2 -> C`,
/// `α: w1∘v1 => w2∘v2` and `β: w1∘u1 => w2∘u2`:
/// `(α, id): ξ1 => (w1∘u1, F(α)_y ∘ F(w1)ξ1, w2∘v2)` and
/// `(id, β): (w1∘u1, F(w2)ξ2 ∘ F(β)_x, w2∘v2) => ξ2`.
pub fn basic_homotopies(
    f: &CatValued2Functor,
    xi1: &Premorphism,
    xi2: &Premorphism,
    w1: Arrow,
    w2: Arrow,
    alpha: crate::twocat::Cell,
    beta: crate::twocat::Cell,
) -> Result<(Homotopy, Homotopy)> {
    let b = f.base();
    let whole = Homotopy {
        from: *xi1,
        to: *xi2,
        apex: b.dst(w1),
        w1,
        w2,
        alpha,
        beta,
    };
    check_shape(b, &whole)?;
    let c = whole.apex;
    let fc = f.cat(c);
    let (x, y) = (xi1.src.element, xi1.dst.element);
    let (w1u1, w2v2) = (b.comp(w1, xi1.u), b.comp(w2, xi2.v));
    let left = Premorphism {
        src: xi1.src,
        dst: xi1.dst,
        apex: c,
        u: w1u1,
        v: w2v2,
        xi: fc.compose(f.comp2(alpha, y), f.mor(w1, xi1.xi)),
    };
    let right = Premorphism {
        xi: fc.compose(f.mor(w2, xi2.xi), f.comp2(beta, x)),
        ..left
    };
    let id = b.id(c);
    let first = Homotopy {
        from: *xi1,
        to: left,
        apex: c,
        w1,
        w2: id,
        alpha,
        beta: b.id_cell(w1u1),
    };
    let second = Homotopy {
        from: right,
        to: *xi2,
        apex: c,
        w1: id,
        w2,
        alpha: b.id_cell(w2v2),
        beta,
    };
    Ok((first, second))
}

/// How [`horizontal_compose_check`] obtained its homotopy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HorizontalOutcome {
    pub homotopy: Homotopy,
    /// True when the construction from the two given homotopies produced a valid
    /// homotopy; false when a direct search was needed.
    pub via_recipe: bool,
}

/// A homotopy `ζ1 ∘_{γ1} ξ1 => ζ2 ∘_{γ2} ξ2` from `(α, β): ξ1 => ξ2` and
/// `(ε, δ): ζ1 => ζ2`, where `γi` are invertible squares on `(vi, hi)`.
///
/// The construction picks `φ1` on `(l1, t1)` and `φ2` on `(s2, r2)` by F1, then an
/// equalizer `(ω1, ω2, θ1, θ2)` of the two resulting squares on `(v1, h2)` by F2. If
/// the assembled quadruple fails the homotopy condition, the first homotopy found by
/// search is returned instead.
pub fn horizontal_compose_check(
    f: &CatValued2Functor,
    h_xi: &Homotopy,
    h_zeta: &Homotopy,
    g1: &PastingSquare,
    g2: &PastingSquare,
) -> Result<HorizontalOutcome> {
    let b = f.base();
    let (xi1, xi2, zeta1, zeta2) = (&h_xi.from, &h_xi.to, &h_zeta.from, &h_zeta.to);
    let c1 = compose_premorphisms_over(f, xi1, zeta1, g1)?;
    let c2 = compose_premorphisms_over(f, xi2, zeta2, g2)?;
    let f1 = |x: Arrow, y: Arrow, step: &str| {
        first_f1_witness(b, x, y).ok_or_else(|| {
            precondition(
                "F1",
                format!(
                    "{step}: no invertible square on ({}, {})",
                    b.arrow_name(x),
                    b.arrow_name(y)
                ),
            )
        })
    };
    let (r1, l1, r2, l2) = (g1.right, g1.bottom, g2.right, g2.bottom);
    let (s1, s2, t1, t2) = (h_xi.w1, h_xi.w2, h_zeta.w1, h_zeta.w2);
    let (v1, v2, h2) = (xi1.v, xi2.v, zeta2.u);
    let (u1, u2, k1, k2, hh1) = (xi1.u, xi2.u, zeta1.v, zeta2.v, zeta1.u);
    let phi1 = f1(l1, t1, "phi1")?;
    let phi2 = f1(s2, r2, "phi2")?;
    let (n1, m1, n2, m2) = (phi1.right, phi1.bottom, phi2.right, phi2.bottom);
    let sq1 = PastingSquare {
        top: v1,
        left: h2,
        right: b.comp(n1, r1),
        bottom: b.comp(m1, t2),
        cell: b.vcomp_seq(&[
            b.whisker(&[n1], g1.cell, &[])?,
            b.whisker(&[], phi1.cell, &[hh1])?,
            b.whisker(&[m1], h_zeta.beta, &[])?,
        ])?,
    };
    let sq2 = PastingSquare {
        top: v1,
        left: h2,
        right: b.comp(n2, s1),
        bottom: b.comp(m2, l2),
        cell: b.vcomp_seq(&[
            b.whisker(&[n2], h_xi.alpha, &[])?,
            b.whisker(&[], phi2.cell, &[v2])?,
            b.whisker(&[m2], g2.cell, &[])?,
        ])?,
    };
    let recipe = match find_ll_witness(b, &sq1, &sq2) {
        Some(Witness::Equalizer {
            w1: om1,
            w2: om2,
            alpha: th1,
            beta: th2,
        }) => {
            let alpha = b.vcomp_seq(&[
                b.whisker(&[om1], phi1.cell, &[k1])?,
                b.whisker(&[om1, m1], h_zeta.alpha, &[])?,
                b.whisker(&[], th1, &[k2])?,
            ])?;
            let beta = b.vcomp_seq(&[
                b.whisker(&[], th2, &[u1])?,
                b.whisker(&[om2, n2], h_xi.beta, &[])?,
                b.whisker(&[om2], phi2.cell, &[u2])?,
            ])?;
            Some(Homotopy {
                from: c1,
                to: c2,
                apex: b.dst(om1),
                w1: b.comp(om1, n1),
                w2: b.comp(om2, m2),
                alpha,
                beta,
            })
        }
        _ => None,
    };
    if let Some(h) = recipe {
        if is_homotopy(f, &h)? {
            return Ok(HorizontalOutcome {
                homotopy: h,
                via_recipe: true,
            });
        }
    }
    let h = find_homotopy(f, &c1, &c2).ok_or_else(|| {
        if recipe.is_none() {
            precondition("F2", "no equalizing square for the two pasted squares")
        } else {
            Error::Internal(
                "horizontal composites of homotopic premorphisms are not homotopic".into(),
            )
        }
    })?;
    Ok(HorizontalOutcome {
        homotopy: h,
        via_recipe: false,
    })
}
