use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::category::{describe_premorphism, BicolimCategory};
use super::{LObject, Premorphism};
use crate::fincat::{
    enumerate_functors, enumerate_nat_transfs, CatFunctor, CatValued2Functor, FiniteCategory,
    NatTransf,
};
use crate::twocat::Arrow;
use crate::{Error, ResourceError, Result};

/// Functors `h_A: FA -> X` with invertible `h_u: h_B∘F(u) => h_A` for `u: A -> B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pseudocone {
    pub vertex: Arc<FiniteCategory>,
    /// One functor per object of the base.
    pub legs: Vec<CatFunctor>,
    /// One transformation per 1-cell of the base; the component at `x` of `FA` goes
    /// `h_B(F(u)x) -> h_A(x)`.
    pub coherence: Vec<NatTransf>,
}

impl std::hash::Hash for Pseudocone {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.legs.hash(state);
        self.coherence.hash(state);
    }
}

/// A family `φ_A: h_A => l_A` between two pseudocones with the same vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Modification {
    pub components: Vec<NatTransf>,
}

fn pc1_violation(f: &CatValued2Functor, h: &Pseudocone, u: Arrow, v: Arrow) -> Option<String> {
    let b = f.base();
    let x_cat = &h.vertex;
    let vu = b.comp(v, u);
    (0..f.cat(b.src(u)).num_objects()).find_map(|x| {
        let lhs = h.coherence[vu.0].at(x);
        let rhs = x_cat.try_compose(h.coherence[u.0].at(x), h.coherence[v.0].at(f.obj(u, x)));
        (Some(lhs) != rhs).then(|| {
            format!(
                "PC1 fails for ({}, {}) at {x}",
                b.arrow_name(u),
                b.arrow_name(v)
            )
        })
    })
}

fn pc2_violation(
    f: &CatValued2Functor,
    h: &Pseudocone,
    gamma: crate::twocat::Cell,
) -> Option<String> {
    let b = f.base();
    let (u, v) = (b.cell_src(gamma), b.cell_dst(gamma));
    let target = b.dst(u);
    (0..f.cat(b.src(u)).num_objects()).find_map(|x| {
        let lhs = h.coherence[u.0].at(x);
        let rhs = h.vertex.try_compose(
            h.coherence[v.0].at(x),
            h.legs[target.0].mor(f.comp2(gamma, x)),
        );
        (Some(lhs) != rhs).then(|| format!("PC2 fails for {} at {x}", b.cell_name(gamma)))
    })
}

fn coherence_violation(f: &CatValued2Functor, h: &Pseudocone, u: Arrow) -> Option<String> {
    let b = f.base();
    let (a, bb) = (b.src(u), b.dst(u));
    let from = h.legs[bb.0].after(f.functor(u));
    let t = &h.coherence[u.0];
    if t.components.len() != f.cat(a).num_objects() {
        return Some(format!(
            "coherence for {} has the wrong number of components",
            b.arrow_name(u)
        ));
    }
    if !t.is_natural(&from, &h.legs[a.0], f.cat(a), &h.vertex) {
        return Some(format!("coherence for {} is not natural", b.arrow_name(u)));
    }
    if !t.components.iter().all(|&m| h.vertex.is_iso(m)) {
        return Some(format!(
            "coherence for {} is not invertible",
            b.arrow_name(u)
        ));
    }
    if b.is_identity_arrow(u) && t.components.iter().any(|&m| !h.vertex.is_identity(m)) {
        return Some(format!("PC0 fails at {}", b.object_name(a)));
    }
    None
}

impl Pseudocone {
    /// Every violated condition: functoriality of the legs, naturality and
    /// invertibility of the coherence cells, then PC0, PC1 and PC2.
    pub fn violations(&self, f: &CatValued2Functor) -> Vec<String> {
        let b = f.base();
        let mut out = Vec::new();
        if self.legs.len() != b.num_objects() || self.coherence.len() != b.num_arrows() {
            return vec!["pseudocone has the wrong number of legs or coherence cells".into()];
        }
        for a in b.objects() {
            if !self.legs[a.0].is_functor(f.cat(a), &self.vertex) {
                out.push(format!("leg at {} is not a functor", b.object_name(a)));
            }
        }
        if !out.is_empty() {
            return out;
        }
        out.extend(b.arrows().filter_map(|u| coherence_violation(f, self, u)));
        if !out.is_empty() {
            return out;
        }
        for u in b.arrows() {
            for &v in b.arrows_from(b.dst(u)) {
                out.extend(pc1_violation(f, self, u, v));
            }
        }
        out.extend(b.cells().filter_map(|g| pc2_violation(f, self, g)));
        out
    }

    pub fn is_valid(&self, f: &CatValued2Functor) -> bool {
        self.violations(f).is_empty()
    }
}

impl Modification {
    /// Naturality of each component and the compatibility
    /// `(φ_A)_x ∘ (h_u)_x = (l_u)_x ∘ (φ_B)_{F(u)x}`.
    pub fn violations(&self, f: &CatValued2Functor, h: &Pseudocone, l: &Pseudocone) -> Vec<String> {
        let b = f.base();
        let mut out = Vec::new();
        for a in b.objects() {
            if !self.components[a.0].is_natural(&h.legs[a.0], &l.legs[a.0], f.cat(a), &h.vertex) {
                out.push(format!("component at {} is not natural", b.object_name(a)));
            }
        }
        for u in b.arrows() {
            if let Some(msg) = pcm_violation(f, h, l, &self.components, u) {
                out.push(msg);
            }
        }
        out
    }
}

fn pcm_violation(
    f: &CatValued2Functor,
    h: &Pseudocone,
    l: &Pseudocone,
    phi: &[NatTransf],
    u: Arrow,
) -> Option<String> {
    let b = f.base();
    let (a, bb) = (b.src(u), b.dst(u));
    let x_cat = &h.vertex;
    (0..f.cat(a).num_objects()).find_map(|x| {
        let lhs = x_cat.try_compose(phi[a.0].at(x), h.coherence[u.0].at(x));
        let rhs = x_cat.try_compose(l.coherence[u.0].at(x), phi[bb.0].at(f.obj(u, x)));
        (lhs.is_none() || lhs != rhs).then(|| format!("PCM fails for {} at {x}", b.arrow_name(u)))
    })
}

fn lambda_component(f: &CatValued2Functor, u: Arrow, x: usize) -> Premorphism {
    let b = f.base();
    let target = b.dst(u);
    let fx = f.obj(u, x);
    Premorphism {
        src: LObject {
            base: target,
            element: fx,
        },
        dst: LObject {
            base: b.src(u),
            element: x,
        },
        apex: target,
        u: b.id(target),
        v: u,
        xi: f.cat(target).id(fx),
    }
}

/// `λ: F => L(F)` with `λ_A(x) = (x, A)`, `λ_A(ξ) = [id, ξ, id]` and
/// `(λ_u)_x = [id_B, id, u]: (F(u)x, B) -> (x, A)`.
pub fn lambda_pseudocone(l: &BicolimCategory) -> Pseudocone {
    let f = l.functor();
    let b = f.base();
    let class = |p: &Premorphism| l.class_of(p).expect("premorphism is enumerated");
    let legs = b
        .objects()
        .map(|a| {
            let fa = f.cat(a);
            let id = b.id(a);
            let obj = |x| {
                l.object_id(LObject {
                    base: a,
                    element: x,
                })
                .expect("object of L(F)")
            };
            CatFunctor {
                objects: (0..fa.num_objects()).map(obj).collect(),
                morphisms: (0..fa.num_morphisms())
                    .map(|m| {
                        let (s, d) = (fa.src(m), fa.dst(m));
                        class(&Premorphism {
                            src: LObject {
                                base: a,
                                element: s,
                            },
                            dst: LObject {
                                base: a,
                                element: d,
                            },
                            apex: a,
                            u: id,
                            v: id,
                            xi: m,
                        })
                    })
                    .collect(),
            }
        })
        .collect();
    let coherence = b
        .arrows()
        .map(|u| NatTransf {
            components: (0..f.cat(b.src(u)).num_objects())
                .map(|x| class(&lambda_component(f, u, x)))
                .collect(),
        })
        .collect();
    Pseudocone {
        vertex: Arc::new(l.category().clone()),
        legs,
        coherence,
    }
}

/// `g∘λ` for a functor `g: L(F) -> X`.
pub fn precompose_lambda(
    lambda: &Pseudocone,
    g: &CatFunctor,
    x: Arc<FiniteCategory>,
) -> Pseudocone {
    Pseudocone {
        vertex: x,
        legs: lambda.legs.iter().map(|leg| g.after(leg)).collect(),
        coherence: lambda
            .coherence
            .iter()
            .map(|t| NatTransf {
                components: t.components.iter().map(|&m| g.mor(m)).collect(),
            })
            .collect(),
    }
}

fn factor_value(h: &Pseudocone, p: &Premorphism) -> Result<usize> {
    let x_cat = &h.vertex;
    let (x, y) = (p.src.element, p.dst.element);
    let hu = h.coherence[p.u.0].at(x);
    let inv = x_cat
        .inverse(hu)
        .ok_or_else(|| Error::Validation("pseudocone coherence is not invertible".into()))?;
    let mid = h.legs[p.apex.0].mor(p.xi);
    x_cat
        .compose_path(&[inv, mid, h.coherence[p.v.0].at(y)])
        .ok_or_else(|| Error::Internal("factorization composite has mismatched boundaries".into()))
}

/// The functor `h̃: L(F) -> X` with `h̃(x, A) = h_A(x)` and
/// `h̃[u, ξ, v] = (h_v)_y ∘ h_C(ξ) ∘ (h_u)_x⁻¹`.
///
/// The value is computed on every member of every class; disagreement is reported
/// with the two members involved.
pub fn factor_pseudocone(l: &BicolimCategory, h: &Pseudocone) -> Result<CatFunctor> {
    let f = l.functor();
    let violations = h.violations(f);
    if let Some(v) = violations.first() {
        return Err(Error::Validation(format!("not a pseudocone: {v}")));
    }
    let objects = l
        .objects()
        .iter()
        .map(|x| h.legs[x.base.0].obj(x.element))
        .collect();
    let mut morphisms = Vec::with_capacity(l.category().num_morphisms());
    for m in 0..l.category().num_morphisms() {
        let mut first: Option<(usize, &Premorphism)> = None;
        for p in l.members(m) {
            let value = factor_value(h, p)?;
            match first {
                None => first = Some((value, p)),
                Some((v0, p0)) if v0 != value => {
                    return Err(Error::WellDefinedness(format!(
                        "class {} sends {} and {} to different morphisms",
                        l.category().morphism_name(m),
                        describe_premorphism(f, p0),
                        describe_premorphism(f, p)
                    )))
                }
                _ => {}
            }
        }
        morphisms.push(first.expect("classes are non-empty").0);
    }
    let g = CatFunctor { objects, morphisms };
    if !g.is_functor(l.category(), &h.vertex) {
        return Err(Error::Internal(
            "factorization of a pseudocone is not a functor".into(),
        ));
    }
    Ok(g)
}

/// Every pseudocone `F => X`, legs chosen first in object order and coherence cells
/// in 1-cell order.
pub fn enumerate_pseudocones(
    f: &CatValued2Functor,
    x: &Arc<FiniteCategory>,
    cap: usize,
) -> Result<Vec<Pseudocone>> {
    let b = f.base();
    let per_category = f
        .categories()
        .iter()
        .map(|c| enumerate_functors(c, x, cap))
        .collect::<Result<Vec<_>>>()?;
    let leg_choices: Vec<&Vec<CatFunctor>> = b
        .objects()
        .map(|a| &per_category[f.category_index(a)])
        .collect();

    // Constraints checked as soon as their last 1-cell has a coherence cell.
    let arrows: Vec<Arrow> = b.arrows().collect();
    let mut pc1_at: Vec<Vec<(Arrow, Arrow)>> = vec![Vec::new(); arrows.len()];
    for &u in &arrows {
        for &v in b.arrows_from(b.dst(u)) {
            let last = u.0.max(v.0).max(b.comp(v, u).0);
            pc1_at[last].push((u, v));
        }
    }
    let mut pc2_at: Vec<Vec<crate::twocat::Cell>> = vec![Vec::new(); arrows.len()];
    for g in b.cells() {
        pc2_at[b.cell_src(g).0.max(b.cell_dst(g).0)].push(g);
    }

    let mut out = Vec::new();
    let mut legs: Vec<CatFunctor> = Vec::with_capacity(b.num_objects());
    choose_legs(
        f,
        x,
        &leg_choices,
        &arrows,
        &pc1_at,
        &pc2_at,
        &mut legs,
        &mut out,
        cap,
    )?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn choose_legs(
    f: &CatValued2Functor,
    x: &Arc<FiniteCategory>,
    choices: &[&Vec<CatFunctor>],
    arrows: &[Arrow],
    pc1_at: &[Vec<(Arrow, Arrow)>],
    pc2_at: &[Vec<crate::twocat::Cell>],
    legs: &mut Vec<CatFunctor>,
    out: &mut Vec<Pseudocone>,
    cap: usize,
) -> Result<()> {
    let k = legs.len();
    if k == choices.len() {
        let b = f.base();
        let candidates: Vec<Vec<NatTransf>> = arrows
            .iter()
            .map(|&u| {
                let (a, t) = (b.src(u), b.dst(u));
                if b.is_identity_arrow(u) {
                    return vec![NatTransf::identity(&legs[a.0], x)];
                }
                let from = legs[t.0].after(f.functor(u));
                enumerate_nat_transfs(&from, &legs[a.0], f.cat(a), x)
                    .into_iter()
                    .filter(|t| t.components.iter().all(|&m| x.is_iso(m)))
                    .collect()
            })
            .collect();
        let mut cone = Pseudocone {
            vertex: x.clone(),
            legs: legs.clone(),
            coherence: arrows
                .iter()
                .map(|_| NatTransf {
                    components: Vec::new(),
                })
                .collect(),
        };
        return choose_coherence(f, &candidates, pc1_at, pc2_at, 0, &mut cone, out, cap);
    }
    for leg in choices[k] {
        legs.push(leg.clone());
        choose_legs(f, x, choices, arrows, pc1_at, pc2_at, legs, out, cap)?;
        legs.pop();
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn choose_coherence(
    f: &CatValued2Functor,
    candidates: &[Vec<NatTransf>],
    pc1_at: &[Vec<(Arrow, Arrow)>],
    pc2_at: &[Vec<crate::twocat::Cell>],
    k: usize,
    cone: &mut Pseudocone,
    out: &mut Vec<Pseudocone>,
    cap: usize,
) -> Result<()> {
    if k == candidates.len() {
        if out.len() >= cap {
            return Err(ResourceError {
                what: "pseudocones".into(),
                bound: cap,
            }
            .into());
        }
        out.push(cone.clone());
        return Ok(());
    }
    for t in &candidates[k] {
        cone.coherence[k] = t.clone();
        let ok = pc1_at[k]
            .iter()
            .all(|&(u, v)| pc1_violation(f, cone, u, v).is_none())
            && pc2_at[k]
                .iter()
                .all(|&g| pc2_violation(f, cone, g).is_none());
        if ok {
            choose_coherence(f, candidates, pc1_at, pc2_at, k + 1, cone, out, cap)?;
        }
    }
    Ok(())
}

/// Every modification `h => l`.
pub fn enumerate_modifications(
    f: &CatValued2Functor,
    h: &Pseudocone,
    l: &Pseudocone,
) -> Vec<Modification> {
    let b = f.base();
    let options: Vec<Vec<NatTransf>> = b
        .objects()
        .map(|a| enumerate_nat_transfs(&h.legs[a.0], &l.legs[a.0], f.cat(a), &h.vertex))
        .collect();
    // 1-cells whose compatibility is decided once both endpoints have a component.
    let mut ready: Vec<Vec<Arrow>> = vec![Vec::new(); b.num_objects()];
    for u in b.arrows() {
        ready[b.src(u).0.max(b.dst(u).0)].push(u);
    }
    let mut out = Vec::new();
    let mut chosen: Vec<NatTransf> = Vec::new();
    fn go(
        f: &CatValued2Functor,
        h: &Pseudocone,
        l: &Pseudocone,
        options: &[Vec<NatTransf>],
        ready: &[Vec<Arrow>],
        chosen: &mut Vec<NatTransf>,
        out: &mut Vec<Modification>,
    ) {
        let k = chosen.len();
        if k == options.len() {
            out.push(Modification {
                components: chosen.clone(),
            });
            return;
        }
        for t in &options[k] {
            chosen.push(t.clone());
            if ready[k]
                .iter()
                .all(|&u| pcm_violation(f, h, l, chosen, u).is_none())
            {
                go(f, h, l, options, ready, chosen, out);
            }
            chosen.pop();
        }
    }
    go(f, h, l, &options, &ready, &mut chosen, &mut out);
    out
}

/// Result of comparing functors `L(F) -> X` with pseudocones `F => X`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HomIsoReport {
    pub functors: usize,
    pub pseudocones: usize,
    /// `g ↦ g∘λ` is a bijection from functors to pseudocones.
    pub objects_bijective: bool,
    /// Pairs of functors whose transformations were compared with modifications.
    pub morphism_pairs: usize,
    /// `σ ↦ σλ` is a bijection on every pair.
    pub morphisms_bijective: bool,
    /// `h̃∘λ = h` for every pseudocone.
    pub factorization_exact: bool,
    /// `h̃` is the only functor `g` with `g∘λ = h`.
    pub factorization_unique: bool,
    pub failures: Vec<String>,
}

impl HomIsoReport {
    pub fn is_isomorphism(&self) -> bool {
        self.objects_bijective
            && self.morphisms_bijective
            && self.factorization_exact
            && self.factorization_unique
    }
}

/// Enumerates both sides of `Hom(L(F), X) ≅ PC(F, X)` and checks that precomposition
/// with `λ` is bijective on functors and on transformations, and that every
/// pseudocone factors exactly and uniquely.
pub fn pseudocone_hom_iso(
    l: &BicolimCategory,
    x: &FiniteCategory,
    cap: usize,
) -> Result<HomIsoReport> {
    let f = l.functor();
    let x = Arc::new(x.clone());
    let lambda = lambda_pseudocone(l);
    let functors = enumerate_functors(l.category(), &x, cap)?;
    let cones = enumerate_pseudocones(f, &x, cap)?;
    let mut report = HomIsoReport {
        functors: functors.len(),
        pseudocones: cones.len(),
        ..Default::default()
    };
    let cone_index: HashMap<&Pseudocone, usize> =
        cones.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let images: Vec<Pseudocone> = functors
        .iter()
        .map(|g| precompose_lambda(&lambda, g, x.clone()))
        .collect();
    let mut preimage: Vec<Vec<usize>> = vec![Vec::new(); cones.len()];
    for (i, img) in images.iter().enumerate() {
        match cone_index.get(img) {
            Some(&c) => preimage[c].push(i),
            None => report.failures.push(format!(
                "functor #{i} composed with λ is not an enumerated pseudocone"
            )),
        }
    }
    report.objects_bijective = report.failures.is_empty() && preimage.iter().all(|p| p.len() == 1);

    let pairs: Vec<(usize, usize)> = (0..functors.len())
        .flat_map(|i| (0..functors.len()).map(move |j| (i, j)))
        .collect();
    report.morphism_pairs = pairs.len();
    let failures: Vec<String> = pairs
        .par_iter()
        .filter_map(|&(i, j)| {
            let sigmas = enumerate_nat_transfs(&functors[i], &functors[j], l.category(), &x);
            let mods = enumerate_modifications(f, &images[i], &images[j]);
            let mapped: Vec<Modification> = sigmas
                .iter()
                .map(|s| Modification {
                    components: lambda
                        .legs
                        .iter()
                        .map(|leg| NatTransf {
                            components: leg.objects.iter().map(|&o| s.at(o)).collect(),
                        })
                        .collect(),
                })
                .collect();
            let mut sorted = mapped.clone();
            sorted.sort_by(|a, b| a.components.cmp(&b.components));
            sorted.dedup();
            let mut expected = mods.clone();
            expected.sort_by(|a, b| a.components.cmp(&b.components));
            (sorted.len() != mapped.len() || sorted != expected).then(|| {
                format!(
                    "functors #{i}, #{j}: {} transformations vs {} modifications",
                    sigmas.len(),
                    mods.len()
                )
            })
        })
        .collect();
    report.morphisms_bijective = failures.is_empty();
    report.failures.extend(failures);

    report.factorization_exact = true;
    report.factorization_unique = true;
    for (c, cone) in cones.iter().enumerate() {
        let g = factor_pseudocone(l, cone)?;
        if precompose_lambda(&lambda, &g, x.clone()) != *cone {
            report.factorization_exact = false;
            report
                .failures
                .push(format!("pseudocone #{c}: h̃λ differs from h"));
        }
        if preimage[c].len() != 1 || functors[preimage[c][0]] != g {
            report.factorization_unique = false;
            report.failures.push(format!(
                "pseudocone #{c}: h̃ is not the unique factorization"
            ));
        }
    }
    Ok(report)
}

/// Checks `h̃∘λ = h` for one pseudocone.
pub fn factorization_holds(l: &BicolimCategory, h: &Pseudocone) -> Result<bool> {
    let g = factor_pseudocone(l, h)?;
    Ok(precompose_lambda(&lambda_pseudocone(l), &g, h.vertex.clone()) == *h)
}
