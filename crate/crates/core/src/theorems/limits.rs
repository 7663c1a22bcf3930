use serde::Serialize;

use crate::axioms::classify;
use crate::bicolim::{build_bicolimit_with, BuildOptions};
use crate::fincat::{CatFunctor, CatValued2Functor, FiniteCategory};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ProductWitness {
    pub product: usize,
    pub first: usize,
    pub second: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EqualizerWitness {
    pub equalizer: usize,
    pub inclusion: usize,
}

/// Terminal object, binary products and equalizers found by enumeration. Every
/// witness has had its universal property checked against all competing cones.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LimitsReport {
    pub terminal: Option<usize>,
    /// One entry per ordered pair of objects `(a, b)`.
    pub products: Vec<((usize, usize), Option<ProductWitness>)>,
    /// One entry per ordered pair of parallel morphisms.
    pub equalizers: Vec<((usize, usize), Option<EqualizerWitness>)>,
}

impl LimitsReport {
    pub fn has_terminal(&self) -> bool {
        self.terminal.is_some()
    }

    pub fn has_products(&self) -> bool {
        self.products.iter().all(|(_, w)| w.is_some())
    }

    pub fn has_equalizers(&self) -> bool {
        self.equalizers.iter().all(|(_, w)| w.is_some())
    }

    pub fn has_finite_limits(&self) -> bool {
        self.has_terminal() && self.has_products() && self.has_equalizers()
    }
}

fn is_terminal(x: &FiniteCategory, t: usize) -> bool {
    (0..x.num_objects()).all(|o| x.hom(o, t).len() == 1)
}

/// `(p, π1, π2)` is a product cone when `h ↦ (π1 h, π2 h)` is a bijection
/// `hom(o, p) -> hom(o, a) × hom(o, b)` for every `o`.
fn is_product(x: &FiniteCategory, p1: usize, p2: usize) -> bool {
    let (p, a, b) = (x.src(p1), x.dst(p1), x.dst(p2));
    (0..x.num_objects()).all(|o| {
        let hom = x.hom(o, p);
        if hom.len() != x.hom(o, a).len() * x.hom(o, b).len() {
            return false;
        }
        let mut images: Vec<(usize, usize)> = hom
            .iter()
            .map(|&h| (x.compose(p1, h), x.compose(p2, h)))
            .collect();
        images.sort_unstable();
        images.dedup();
        images.len() == hom.len()
    })
}

/// `i` equalizes `f, g` universally when composing with `i` is a bijection from
/// `hom(o, e)` onto the morphisms `h: o -> a` with `f h = g h`.
fn is_equalizer(x: &FiniteCategory, i: usize, f: usize, g: usize) -> bool {
    if x.compose(f, i) != x.compose(g, i) {
        return false;
    }
    let (e, a) = (x.src(i), x.dst(i));
    (0..x.num_objects()).all(|o| {
        let cone: Vec<usize> = x
            .hom(o, a)
            .iter()
            .copied()
            .filter(|&h| x.compose(f, h) == x.compose(g, h))
            .collect();
        let hom = x.hom(o, e);
        let mut images: Vec<usize> = hom.iter().map(|&h| x.compose(i, h)).collect();
        images.sort_unstable();
        images.dedup();
        images.len() == hom.len() && images.len() == cone.len()
    })
}

pub fn detect_finite_limits(x: &FiniteCategory) -> LimitsReport {
    let n = x.num_objects();
    let terminal = (0..n).find(|&t| is_terminal(x, t));
    let mut products = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let found = (0..n).find_map(|p| {
                x.hom(p, a).iter().find_map(|&p1| {
                    x.hom(p, b)
                        .iter()
                        .find(|&&p2| is_product(x, p1, p2))
                        .map(|&p2| ProductWitness {
                            product: p,
                            first: p1,
                            second: p2,
                        })
                })
            });
            products.push(((a, b), found));
        }
    }
    let mut equalizers = Vec::new();
    for f in 0..x.num_morphisms() {
        let (a, b) = (x.src(f), x.dst(f));
        for &g in x.hom(a, b) {
            let found = (0..n).find_map(|e| {
                x.hom(e, a)
                    .iter()
                    .find(|&&i| is_equalizer(x, i, f, g))
                    .map(|&i| EqualizerWitness {
                        equalizer: e,
                        inclusion: i,
                    })
            });
            equalizers.push(((f, g), found));
        }
    }
    LimitsReport {
        terminal,
        products,
        equalizers,
    }
}

/// Whether `g: c -> d` sends the limits that `c` has to limits of `d`.
pub fn preserves_finite_limits(g: &CatFunctor, c: &FiniteCategory, d: &FiniteCategory) -> bool {
    let report = detect_finite_limits(c);
    report.terminal.is_none_or(|t| is_terminal(d, g.obj(t)))
        && report
            .products
            .iter()
            .filter_map(|(_, w)| *w)
            .all(|w| is_product(d, g.mor(w.first), g.mor(w.second)))
        && report
            .equalizers
            .iter()
            .filter_map(|&((f, h), w)| w.map(|w| (f, h, w)))
            .all(|(f, h, w)| is_equalizer(d, g.mor(w.inclusion), g.mor(f), g.mor(h)))
}

/// Finite limits in every fibre, preserved by every transition functor, and the
/// limits found in `L(F)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteLimitsCheck {
    pub base_two_filtered: bool,
    pub fibres_have_limits: bool,
    pub transitions_preserve: bool,
    pub bicolimit: LimitsReport,
}

impl FiniteLimitsCheck {
    pub fn hypothesis(&self) -> bool {
        self.base_two_filtered && self.fibres_have_limits && self.transitions_preserve
    }

    /// False only when the hypothesis holds and `L(F)` lacks some finite limit.
    pub fn consistent(&self) -> bool {
        !self.hypothesis() || self.bicolimit.has_finite_limits()
    }
}

pub fn check_finite_limits_corollary(
    f: &CatValued2Functor,
    options: BuildOptions,
) -> Result<FiniteLimitsCheck> {
    let b = f.base();
    let fibres_have_limits = f
        .categories()
        .iter()
        .all(|c| detect_finite_limits(c).has_finite_limits());
    let transitions_preserve = b
        .arrows()
        .all(|u| preserves_finite_limits(f.functor(u), f.cat(b.src(u)), f.cat(b.dst(u))));
    let l = build_bicolimit_with(f, options)?;
    Ok(FiniteLimitsCheck {
        base_two_filtered: classify(b).two_filtered,
        fibres_have_limits,
        transitions_preserve,
        bicolimit: detect_finite_limits(l.category()),
    })
}
