use super::{LObject, Premorphism};
use crate::axioms::first_f1_witness;
use crate::fincat::CatValued2Functor;
use crate::twocat::PastingSquare;
use crate::{precondition, Error, Result};

/// Every object `(x, A)` of `L(F)`, ordered by `A` then `x`.
pub fn lobjects(f: &CatValued2Functor) -> Vec<LObject> {
    f.base()
        .objects()
        .flat_map(|a| {
            (0..f.cat(a).num_objects()).map(move |x| LObject {
                base: a,
                element: x,
            })
        })
        .collect()
}

/// Every premorphism `src -> dst`, ordered by apex, `u`, `v`, then `ξ`.
pub fn enumerate_premorphisms(
    f: &CatValued2Functor,
    src: LObject,
    dst: LObject,
) -> Vec<Premorphism> {
    let b = f.base();
    let mut out = Vec::new();
    for c in b.objects() {
        let fc = f.cat(c);
        for &u in b.arrows_between(src.base, c) {
            let fx = f.obj(u, src.element);
            for &v in b.arrows_between(dst.base, c) {
                let fy = f.obj(v, dst.element);
                for &xi in fc.hom(fx, fy) {
                    out.push(Premorphism {
                        src,
                        dst,
                        apex: c,
                        u,
                        v,
                        xi,
                    });
                }
            }
        }
    }
    out
}

/// `(id_A, id_x, id_A)`.
pub fn identity_premorphism(f: &CatValued2Functor, x: LObject) -> Premorphism {
    let id = f.base().id(x.base);
    Premorphism {
        src: x,
        dst: x,
        apex: x.base,
        u: id,
        v: id,
        xi: f.cat(x.base).id(x.element),
    }
}

/// `ζ ∘_γ ξ` for the first invertible square `γ` on the span `(v, h)`, where `ξ` has
/// legs `(u, v)` and `ζ` has legs `(h, k)`.
pub fn compose_premorphisms(
    f: &CatValued2Functor,
    xi: &Premorphism,
    zeta: &Premorphism,
) -> Result<Premorphism> {
    let b = f.base();
    let sq = first_f1_witness(b, xi.v, zeta.u).ok_or_else(|| {
        precondition(
            "F1",
            format!(
                "no invertible square on the span ({}, {})",
                b.arrow_name(xi.v),
                b.arrow_name(zeta.u)
            ),
        )
    })?;
    compose_premorphisms_over(f, xi, zeta, &sq)
}

/// `ζ ∘_γ ξ` for a given square `γ: s∘v => t∘h`. The result is
/// `(s∘u, F(t)ζ ∘ F(γ)_y ∘ F(s)ξ, t∘k)`.
pub fn compose_premorphisms_over(
    f: &CatValued2Functor,
    xi: &Premorphism,
    zeta: &Premorphism,
    sq: &PastingSquare,
) -> Result<Premorphism> {
    let b = f.base();
    if xi.dst != zeta.src {
        return Err(Error::Validation("premorphisms are not composable".into()));
    }
    if sq.top != xi.v || sq.left != zeta.u {
        return Err(Error::Validation(
            "the square does not sit on the span of the two premorphisms".into(),
        ));
    }
    sq.validate(b)?;
    let (s, t) = (sq.right, sq.bottom);
    let h = sq.apex(b);
    let fh = f.cat(h);
    let y = xi.dst.element;
    let morphism = fh
        .compose_path(&[f.mor(s, xi.xi), f.comp2(sq.cell, y), f.mor(t, zeta.xi)])
        .ok_or_else(|| {
            Error::Internal("composite of premorphisms has mismatched boundaries".into())
        })?;
    Ok(Premorphism {
        src: xi.src,
        dst: zeta.dst,
        apex: h,
        u: b.comp(s, xi.u),
        v: b.comp(t, zeta.v),
        xi: morphism,
    })
}
