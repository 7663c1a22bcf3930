use std::collections::HashMap;

use petgraph::unionfind::UnionFind;
use rayon::prelude::*;
use serde::Serialize;

use super::homotopy::find_homotopy;
use super::premorphism::{
    compose_premorphisms_over, enumerate_premorphisms, identity_premorphism, lobjects,
};
use super::{LObject, Premorphism};
use crate::axioms::{describe_input, invertible_squares, is_pre_2_filtered};
use crate::fincat::{CatValued2Functor, FiniteCategory};
use crate::twocat::{Arrow, PastingSquare};
use crate::{precondition, Error, ResourceError, Result};

pub const DEFAULT_MAX_PREMORPHISMS: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    /// Upper bound on the total number of premorphisms over all hom-sets.
    pub max_premorphisms: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            max_premorphisms: DEFAULT_MAX_PREMORPHISMS,
        }
    }
}

/// The premorphisms between two objects with their homotopy classes.
#[derive(Clone, Debug)]
pub struct HomSet {
    pub src: LObject,
    pub dst: LObject,
    /// In canonical order.
    pub premorphisms: Vec<Premorphism>,
    /// Row-major one-step relation: `related[i * n + j]` iff a homotopy `i => j` exists.
    pub related: Vec<bool>,
    pub class_of: Vec<usize>,
    /// Members of each class in canonical order; the first is the representative.
    pub classes: Vec<Vec<usize>>,
    /// Morphism of `L(F)` for each class.
    pub morphisms: Vec<usize>,
    index: HashMap<Premorphism, usize>,
}

/// Properties of the computed one-step homotopy relation on one hom-set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub size: usize,
    pub reflexive: bool,
    pub symmetric: bool,
    pub transitive: bool,
    pub equals_closure: bool,
}

impl HomSet {
    pub fn len(&self) -> usize {
        self.premorphisms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.premorphisms.is_empty()
    }

    pub fn related(&self, i: usize, j: usize) -> bool {
        self.related[i * self.len() + j]
    }

    pub fn position(&self, p: &Premorphism) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Checks the relation directly; the closure is the class partition.
    pub fn relation_report(&self) -> RelationReport {
        let n = self.len();
        let r = |i, j| self.related(i, j);
        let reflexive = (0..n).all(|i| r(i, i));
        let symmetric = (0..n).all(|i| (0..n).all(|j| r(i, j) == r(j, i)));
        let transitive = (0..n).into_par_iter().all(|i| {
            (0..n)
                .filter(|&j| r(i, j))
                .all(|j| (0..n).filter(|&k| r(j, k)).all(|k| r(i, k)))
        });
        let equals_closure =
            (0..n).all(|i| (0..n).all(|j| r(i, j) == (self.class_of[i] == self.class_of[j])));
        RelationReport {
            size: n,
            reflexive,
            symmetric,
            transitive,
            equals_closure,
        }
    }
}

/// `L(F)` as a finite category together with the premorphisms behind each morphism.
#[derive(Clone, Debug)]
pub struct BicolimCategory {
    functor: CatValued2Functor,
    objects: Vec<LObject>,
    object_index: HashMap<LObject, usize>,
    homs: Vec<HomSet>,
    category: FiniteCategory,
    /// `(hom index, class index)` of each morphism.
    locate: Vec<(usize, usize)>,
}

impl BicolimCategory {
    pub fn functor(&self) -> &CatValued2Functor {
        &self.functor
    }

    pub fn category(&self) -> &FiniteCategory {
        &self.category
    }

    pub fn objects(&self) -> &[LObject] {
        &self.objects
    }

    pub fn object_id(&self, x: LObject) -> Option<usize> {
        self.object_index.get(&x).copied()
    }

    pub fn hom(&self, src: usize, dst: usize) -> &HomSet {
        &self.homs[src * self.objects.len() + dst]
    }

    pub fn homs(&self) -> &[HomSet] {
        &self.homs
    }

    pub fn num_premorphisms(&self) -> usize {
        self.homs.iter().map(HomSet::len).sum()
    }

    /// The morphism of `L(F)` containing `p`.
    pub fn class_of(&self, p: &Premorphism) -> Option<usize> {
        let (s, d) = (self.object_id(p.src)?, self.object_id(p.dst)?);
        let hom = self.hom(s, d);
        hom.position(p).map(|i| hom.morphisms[hom.class_of[i]])
    }

    pub fn representative(&self, m: usize) -> &Premorphism {
        let (h, c) = self.locate[m];
        &self.homs[h].premorphisms[self.homs[h].classes[c][0]]
    }

    pub fn members(&self, m: usize) -> impl Iterator<Item = &Premorphism> + '_ {
        let (h, c) = self.locate[m];
        self.homs[h].classes[c]
            .iter()
            .map(move |&i| &self.homs[h].premorphisms[i])
    }

    /// Human-readable form of a premorphism.
    pub fn describe(&self, p: &Premorphism) -> String {
        describe_premorphism(&self.functor, p)
    }

    /// Checks every hom-set relation; used by tests and reports.
    pub fn relation_reports(&self) -> Vec<RelationReport> {
        self.homs.iter().map(HomSet::relation_report).collect()
    }
}

fn object_name(f: &CatValued2Functor, x: LObject) -> String {
    format!(
        "{}@{}",
        f.cat(x.base).object_name(x.element),
        f.base().object_name(x.base)
    )
}

pub(super) fn describe_premorphism(f: &CatValued2Functor, p: &Premorphism) -> String {
    let b = f.base();
    format!(
        "[{}, {}, {}]: {} -> {}",
        b.arrow_name(p.u),
        f.cat(p.apex).morphism_name(p.xi),
        b.arrow_name(p.v),
        object_name(f, p.src),
        object_name(f, p.dst)
    )
}

fn hom_set(f: &CatValued2Functor, src: LObject, dst: LObject) -> Result<HomSet> {
    let premorphisms = enumerate_premorphisms(f, src, dst);
    let n = premorphisms.len();
    let related: Vec<bool> = (0..n * n)
        .into_par_iter()
        .map(|k| find_homotopy(f, &premorphisms[k / n], &premorphisms[k % n]).is_some())
        .collect();
    let mut uf = UnionFind::<usize>::new(n);
    for i in 0..n {
        for j in 0..n {
            if related[i * n + j] {
                uf.union(i, j);
            }
        }
    }
    let mut root_class: HashMap<usize, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![0; n];
    for (i, slot) in class_of.iter_mut().enumerate() {
        let root = uf.find(i);
        let c = *root_class.entry(root).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[c].push(i);
        *slot = c;
    }
    for i in 0..n {
        for j in 0..n {
            if related[i * n + j] != (class_of[i] == class_of[j]) {
                return Err(Error::Internal(format!(
                    "one-step homotopy relation differs from its closure at {} and {}",
                    describe_premorphism(f, &premorphisms[i]),
                    describe_premorphism(f, &premorphisms[j])
                )));
            }
        }
    }
    let index = premorphisms
        .iter()
        .enumerate()
        .map(|(i, p)| (*p, i))
        .collect();
    Ok(HomSet {
        src,
        dst,
        premorphisms,
        related,
        class_of,
        classes,
        morphisms: Vec::new(),
        index,
    })
}

/// Builds `L(F)` with the default premorphism bound.
pub fn build_bicolimit(f: &CatValued2Functor) -> Result<BicolimCategory> {
    build_bicolimit_with(f, BuildOptions::default())
}

/// Builds `L(F)`: enumerates premorphisms, computes the one-step homotopy relation on
/// every hom-set, checks that it is already an equivalence relation, and composes
/// classes through their representatives. The category laws are verified on the
/// resulting table.
pub fn build_bicolimit_with(
    f: &CatValued2Functor,
    options: BuildOptions,
) -> Result<BicolimCategory> {
    let b = f.base();
    if let Err((axiom, input)) = is_pre_2_filtered(b) {
        return Err(precondition(
            format!("pre-2-filtered ({axiom})"),
            describe_input(b, &input),
        ));
    }
    let objects = lobjects(f);
    let n = objects.len();
    let mut total = 0usize;
    for &s in &objects {
        for &d in &objects {
            total += premorphism_count(f, s, d);
            if total > options.max_premorphisms {
                return Err(ResourceError {
                    what: "premorphisms".into(),
                    bound: options.max_premorphisms,
                }
                .into());
            }
        }
    }
    let mut homs = (0..n * n)
        .into_par_iter()
        .map(|k| hom_set(f, objects[k / n], objects[k % n]))
        .collect::<Result<Vec<_>>>()?;

    let mut locate = Vec::new();
    let mut decls = Vec::new();
    for (h, hom) in homs.iter_mut().enumerate() {
        for (c, members) in hom.classes.iter().enumerate() {
            hom.morphisms.push(locate.len());
            locate.push((h, c));
            let rep = &hom.premorphisms[members[0]];
            decls.push((describe_premorphism(f, rep), h / n, h % n));
        }
    }
    let object_index: HashMap<LObject, usize> =
        objects.iter().enumerate().map(|(i, x)| (*x, i)).collect();
    let class_in = |homs: &[HomSet], p: &Premorphism| -> Option<usize> {
        let hom = &homs[object_index[&p.src] * n + object_index[&p.dst]];
        hom.position(p).map(|i| hom.morphisms[hom.class_of[i]])
    };
    let identities = objects
        .iter()
        .map(|&x| {
            class_in(&homs, &identity_premorphism(f, x))
                .expect("identity premorphism is enumerated")
        })
        .collect();
    let rep = |m: usize| {
        let (h, c) = locate[m];
        homs[h].premorphisms[homs[h].classes[c][0]]
    };
    let mut squares: HashMap<(Arrow, Arrow), PastingSquare> = HashMap::new();
    let names = objects.iter().map(|&x| object_name(f, x)).collect();
    let category = FiniteCategory::build(names, decls, identities, |g, m| {
        let (p, q) = (rep(m), rep(g));
        let sq = match squares.get(&(p.v, q.u)) {
            Some(sq) => *sq,
            None => {
                let sq = crate::axioms::first_f1_witness(b, p.v, q.u)
                    .ok_or_else(|| precondition("F1", "a span without an invertible square"))?;
                squares.insert((p.v, q.u), sq);
                sq
            }
        };
        let composite = compose_premorphisms_over(f, &p, &q, &sq)?;
        class_in(&homs, &composite)
            .ok_or_else(|| Error::Internal("composite premorphism is not enumerated".into()))
    })
    .map_err(|e| match e {
        Error::Validation(msg) => Error::Internal(format!("L(F) fails the category laws: {msg}")),
        other => other,
    })?;
    Ok(BicolimCategory {
        functor: f.clone(),
        objects,
        object_index,
        homs,
        category,
        locate,
    })
}

fn premorphism_count(f: &CatValued2Functor, src: LObject, dst: LObject) -> usize {
    let b = f.base();
    let mut count = 0;
    for c in b.objects() {
        for &u in b.arrows_between(src.base, c) {
            for &v in b.arrows_between(dst.base, c) {
                count += f
                    .cat(c)
                    .hom(f.obj(u, src.element), f.obj(v, dst.element))
                    .len();
            }
        }
    }
    count
}

/// Outcome of checking that composition does not depend on representatives or on the
/// square used.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CompositionReport {
    /// Composites computed, one per pair of members and square.
    pub composites: usize,
    /// Composable pairs of classes examined.
    pub class_pairs: usize,
    /// Hom-set pairs skipped because a hom-set exceeded the size limit.
    pub skipped: usize,
    pub violations: Vec<String>,
}

impl CompositionReport {
    pub fn is_well_defined(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For every composable pair of classes whose hom-sets have at most `max_hom`
/// premorphisms, composes every pair of members over every invertible square on the
/// middle span and checks that the result lies in the tabulated composite class.
pub fn check_composition_well_defined(l: &BicolimCategory, max_hom: usize) -> CompositionReport {
    let f = l.functor();
    let b = f.base();
    let n = l.objects().len();
    let triples: Vec<(usize, usize, usize)> = (0..n)
        .flat_map(|a| (0..n).flat_map(move |m| (0..n).map(move |c| (a, m, c))))
        .collect();
    let parts: Vec<CompositionReport> = triples
        .par_iter()
        .map(|&(a, m, c)| {
            let (h1, h2) = (l.hom(a, m), l.hom(m, c));
            let mut rep = CompositionReport::default();
            if h1.len() > max_hom || h2.len() > max_hom || l.hom(a, c).len() > max_hom {
                rep.skipped = 1;
                return rep;
            }
            for (c1, m1) in h1.classes.iter().zip(&h1.morphisms) {
                for (c2, m2) in h2.classes.iter().zip(&h2.morphisms) {
                    rep.class_pairs += 1;
                    let expected = l.category().compose(*m2, *m1);
                    for &i in c1 {
                        let p = &h1.premorphisms[i];
                        for &j in c2 {
                            let q = &h2.premorphisms[j];
                            for sq in invertible_squares(b, p.v, q.u) {
                                rep.composites += 1;
                                let got = compose_premorphisms_over(f, p, q, &sq)
                                    .ok()
                                    .and_then(|r| l.class_of(&r));
                                if got != Some(expected) {
                                    rep.violations.push(format!(
                                        "{} after {} over {} lands outside class {}",
                                        describe_premorphism(f, q),
                                        describe_premorphism(f, p),
                                        b.cell_name(sq.cell),
                                        l.category().morphism_name(expected)
                                    ));
                                }
                            }
                        }
                    }
                }
            }
            rep
        })
        .collect();
    parts
        .into_iter()
        .fold(CompositionReport::default(), |mut acc, r| {
            acc.composites += r.composites;
            acc.class_pairs += r.class_pairs;
            acc.skipped += r.skipped;
            acc.violations.extend(r.violations);
            acc
        })
}
