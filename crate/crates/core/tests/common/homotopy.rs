//! Independent enumeration of premorphisms, the one-step homotopy relation and
//! premorphism composition, read straight off the 2-functor's tables.

use bicolim::bicolim::{Homotopy, LObject, Premorphism};
use bicolim::fincat::CatValued2Functor;
use bicolim::twocat::{Arrow, Cell, Obj};

use super::axioms::Naive;

/// Every premorphism `x -> y`, in no particular order.
pub fn premorphisms(f: &CatValued2Functor, n: &Naive, x: LObject, y: LObject) -> Vec<Premorphism> {
    let b = f.base();
    let mut out = Vec::new();
    for c in b.objects() {
        let fc = f.cat(c);
        for u in n.arrows(x.base, c) {
            for v in n.arrows(y.base, c) {
                let (s, t) = (f.obj(u, x.element), f.obj(v, y.element));
                for xi in (0..fc.num_morphisms()).filter(|&m| fc.src(m) == s && fc.dst(m) == t) {
                    out.push(Premorphism {
                        src: x,
                        dst: y,
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

/// Whether `F(w2)ξ2 ∘ F(β)_x = F(α)_y ∘ F(w1)ξ1` holds, with every boundary and the
/// invertibility of both cells checked.
pub fn is_homotopy(f: &CatValued2Functor, n: &Naive, h: &Homotopy) -> bool {
    let b = f.base();
    let (p, q) = (&h.from, &h.to);
    if p.src != q.src || p.dst != q.dst {
        return false;
    }
    if b.src(h.w1) != p.apex
        || b.src(h.w2) != q.apex
        || b.dst(h.w1) != h.apex
        || b.dst(h.w2) != h.apex
    {
        return false;
    }
    if (b.cell_src(h.alpha), b.cell_dst(h.alpha)) != (b.comp(h.w1, p.v), b.comp(h.w2, q.v))
        || (b.cell_src(h.beta), b.cell_dst(h.beta)) != (b.comp(h.w1, p.u), b.comp(h.w2, q.u))
    {
        return false;
    }
    if !n.inv(h.alpha) || !n.inv(h.beta) {
        return false;
    }
    equation(f, h.apex, p, q, h.w1, h.w2, h.alpha, h.beta)
}

#[allow(clippy::too_many_arguments)]
fn equation(
    f: &CatValued2Functor,
    d: Obj,
    p: &Premorphism,
    q: &Premorphism,
    w1: Arrow,
    w2: Arrow,
    alpha: Cell,
    beta: Cell,
) -> bool {
    let fd = f.cat(d);
    let lhs = fd.try_compose(f.mor(w2, q.xi), f.comp2(beta, p.src.element));
    let rhs = fd.try_compose(f.comp2(alpha, p.dst.element), f.mor(w1, p.xi));
    lhs.is_some() && lhs == rhs
}

/// Whether some homotopy `p => q` exists.
pub fn related(f: &CatValued2Functor, n: &Naive, p: &Premorphism, q: &Premorphism) -> bool {
    let b = f.base();
    b.objects().any(|d| {
        n.arrows(p.apex, d).any(|w1| {
            n.arrows(q.apex, d).any(|w2| {
                n.inv_cells(b.comp(w1, p.v), b.comp(w2, q.v)).any(|alpha| {
                    n.inv_cells(b.comp(w1, p.u), b.comp(w2, q.u))
                        .any(|beta| equation(f, d, p, q, w1, w2, alpha, beta))
                })
            })
        })
    })
}

/// The first homotopy `p => q` found by brute force.
pub fn find_homotopy(
    f: &CatValued2Functor,
    n: &Naive,
    p: &Premorphism,
    q: &Premorphism,
) -> Option<Homotopy> {
    let b = f.base();
    for d in b.objects() {
        for w1 in n.arrows(p.apex, d) {
            for w2 in n.arrows(q.apex, d) {
                for alpha in n.inv_cells(b.comp(w1, p.v), b.comp(w2, q.v)) {
                    for beta in n.inv_cells(b.comp(w1, p.u), b.comp(w2, q.u)) {
                        if equation(f, d, p, q, w1, w2, alpha, beta) {
                            return Some(Homotopy {
                                from: *p,
                                to: *q,
                                apex: d,
                                w1,
                                w2,
                                alpha,
                                beta,
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

/// `(s∘u, F(t)ζ ∘ F(γ)_y ∘ F(s)ξ, t∘k)` for `γ: s∘v => t∘h`, where `ξ` has legs `(u, v)`
/// and `ζ` has legs `(h, k)`.
pub fn compose(
    f: &CatValued2Functor,
    xi: &Premorphism,
    zeta: &Premorphism,
    s: Arrow,
    t: Arrow,
    gamma: Cell,
) -> Premorphism {
    let b = f.base();
    let e = b.dst(s);
    let fe = f.cat(e);
    let y = xi.dst.element;
    let first = f.mor(s, xi.xi);
    let mid = f.comp2(gamma, y);
    let last = f.mor(t, zeta.xi);
    let m = fe.compose(last, fe.compose(mid, first));
    Premorphism {
        src: xi.src,
        dst: zeta.dst,
        apex: e,
        u: b.comp(s, xi.u),
        v: b.comp(t, zeta.v),
        xi: m,
    }
}

/// Plain union-find with path halving.
pub struct Dsu(Vec<usize>);

impl Dsu {
    pub fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    pub fn find(&mut self, mut i: usize) -> usize {
        while self.0[i] != i {
            self.0[i] = self.0[self.0[i]];
            i = self.0[i];
        }
        i
    }
    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
    }
}
