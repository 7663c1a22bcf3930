use std::sync::Arc;

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::bicolim::{build_bicolimit_with, factor_pseudocone, BuildOptions, Pseudocone};
use crate::fincat::{
    check_equivalence, CatFunctor, CatValued2Functor, EquivalenceReport, FiniteCategory, NatTransf,
};
use crate::twocat::TwoCategory;
use crate::{precondition, Error, Result};

/// The colimit of `F` computed stagewise on objects and morphisms, together with the
/// colimit injections.
#[derive(Clone, Debug)]
pub struct ClassicalColimit {
    pub category: FiniteCategory,
    /// `object_class[A][x]` is the object of the colimit that `x ∈ FA` lands on.
    pub object_class: Vec<Vec<usize>>,
    pub morphism_class: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassicalComparison {
    /// `L(F) -> classical colimit`.
    pub functor: CatFunctor,
    pub bicolimit_objects: usize,
    pub bicolimit_morphisms: usize,
    pub classical_objects: usize,
    pub classical_morphisms: usize,
    pub equivalence: EquivalenceReport,
}

/// Refuses bases with a non-identity 2-cell or that are not filtered as 1-categories.
pub fn check_trivial_filtered(b: &TwoCategory) -> Result<()> {
    if let Some(c) = b.cells().find(|&c| !b.is_identity_cell(c)) {
        return Err(precondition(
            "only identity 2-cells",
            format!("cell {}", b.cell_name(c)),
        ));
    }
    if b.is_empty() {
        return Err(precondition("filtered", "the base is empty"));
    }
    for a in b.objects() {
        for c in b.objects() {
            let joined = b
                .objects()
                .any(|d| !b.arrows_between(a, d).is_empty() && !b.arrows_between(c, d).is_empty());
            if !joined {
                return Err(precondition(
                    "filtered",
                    format!("no cocone on {} and {}", b.object_name(a), b.object_name(c)),
                ));
            }
        }
    }
    for f in b.arrows() {
        for &g in b.arrows_between(b.src(f), b.dst(f)) {
            if !b
                .arrows_from(b.dst(f))
                .iter()
                .any(|&w| b.comp(w, f) == b.comp(w, g))
            {
                return Err(precondition(
                    "filtered",
                    format!(
                        "nothing coequalizes {} and {}",
                        b.arrow_name(f),
                        b.arrow_name(g)
                    ),
                ));
            }
        }
    }
    Ok(())
}

/// Numbers the union-find classes of `0..n` in order of first occurrence.
fn classes(uf: &UnionFind<usize>, n: usize) -> (Vec<usize>, Vec<usize>) {
    let mut number = vec![usize::MAX; n];
    let mut class_of = vec![0; n];
    let mut first = Vec::new();
    for i in 0..n {
        let r = uf.find(i);
        if number[r] == usize::MAX {
            number[r] = first.len();
            first.push(i);
        }
        class_of[i] = number[r];
    }
    (class_of, first)
}

/// The filtered colimit of the fibres, with `x ∈ FA` identified with `F(u)x` and
/// likewise for morphisms. Composition is done at a stage where the middle objects
/// coincide.
pub fn classical_filtered_colimit(f: &CatValued2Functor) -> Result<ClassicalColimit> {
    let b = f.base();
    check_trivial_filtered(b)?;
    let mut obj_offset = Vec::new();
    let mut mor_offset = Vec::new();
    let (mut n0, mut n1) = (0, 0);
    for a in b.objects() {
        obj_offset.push(n0);
        mor_offset.push(n1);
        n0 += f.cat(a).num_objects();
        n1 += f.cat(a).num_morphisms();
    }
    let mut objs = UnionFind::new(n0);
    let mut mors = UnionFind::new(n1);
    for u in b.arrows() {
        let (a, c) = (b.src(u), b.dst(u));
        for x in 0..f.cat(a).num_objects() {
            objs.union(obj_offset[a.0] + x, obj_offset[c.0] + f.obj(u, x));
        }
        for m in 0..f.cat(a).num_morphisms() {
            mors.union(mor_offset[a.0] + m, mor_offset[c.0] + f.mor(u, m));
        }
    }
    let (obj_class, obj_first) = classes(&objs, n0);
    let (mor_class, mor_first) = classes(&mors, n1);
    let locate = |offsets: &[usize], i: usize| {
        let a = offsets.partition_point(|&o| o <= i) - 1;
        (crate::twocat::Obj(a), i - offsets[a])
    };
    let object_names: Vec<String> = obj_first
        .iter()
        .map(|&i| {
            let (a, x) = locate(&obj_offset, i);
            format!("[{}@{}]", f.cat(a).object_name(x), b.object_name(a))
        })
        .collect();
    let morphisms: Vec<(String, usize, usize)> = mor_first
        .iter()
        .map(|&i| {
            let (a, m) = locate(&mor_offset, i);
            let fa = f.cat(a);
            (
                format!("[{}@{}]", fa.morphism_name(m), b.object_name(a)),
                obj_class[obj_offset[a.0] + fa.src(m)],
                obj_class[obj_offset[a.0] + fa.dst(m)],
            )
        })
        .collect();
    let identities: Vec<usize> = obj_first
        .iter()
        .map(|&i| {
            let (a, x) = locate(&obj_offset, i);
            mor_class[mor_offset[a.0] + f.cat(a).id(x)]
        })
        .collect();
    let category = FiniteCategory::build(object_names, morphisms, identities, |g, h| {
        let (a, m) = locate(&mor_offset, mor_first[h]);
        let (c, n) = locate(&mor_offset, mor_first[g]);
        let (mid_a, mid_c) = (f.cat(a).dst(m), f.cat(c).src(n));
        for d in b.objects() {
            for &u in b.arrows_between(a, d) {
                for &v in b.arrows_between(c, d) {
                    if f.obj(u, mid_a) == f.obj(v, mid_c) {
                        let composite = f.cat(d).compose(f.mor(v, n), f.mor(u, m));
                        return Ok(mor_class[mor_offset[d.0] + composite]);
                    }
                }
            }
        }
        Err(Error::Internal(
            "no stage identifies the middle objects of a composable pair".into(),
        ))
    })
    .map_err(|e| match e {
        Error::Validation(msg) => {
            Error::Internal(format!("classical colimit is not a category: {msg}"))
        }
        other => other,
    })?;
    let object_class = b
        .objects()
        .map(|a| {
            (0..f.cat(a).num_objects())
                .map(|x| obj_class[obj_offset[a.0] + x])
                .collect()
        })
        .collect();
    let morphism_class = b
        .objects()
        .map(|a| {
            (0..f.cat(a).num_morphisms())
                .map(|m| mor_class[mor_offset[a.0] + m])
                .collect()
        })
        .collect();
    Ok(ClassicalColimit {
        category,
        object_class,
        morphism_class,
    })
}

/// Factors the colimit cocone of the classical construction through `L(F)` and checks
/// the resulting functor is an equivalence.
pub fn compare_with_classical(
    f: &CatValued2Functor,
    options: BuildOptions,
) -> Result<ClassicalComparison> {
    let classical = classical_filtered_colimit(f)?;
    let b = f.base();
    let k = Arc::new(classical.category);
    let legs = b
        .objects()
        .map(|a| CatFunctor {
            objects: classical.object_class[a.0].clone(),
            morphisms: classical.morphism_class[a.0].clone(),
        })
        .collect();
    let coherence = b
        .arrows()
        .map(|u| NatTransf {
            components: classical.object_class[b.src(u).0]
                .iter()
                .map(|&o| k.id(o))
                .collect(),
        })
        .collect();
    let cone = Pseudocone {
        vertex: k.clone(),
        legs,
        coherence,
    };
    let l = build_bicolimit_with(f, options)?;
    let functor = factor_pseudocone(&l, &cone)?;
    let equivalence = check_equivalence(&functor, l.category(), &k);
    Ok(ClassicalComparison {
        functor,
        bicolimit_objects: l.category().num_objects(),
        bicolimit_morphisms: l.category().num_morphisms(),
        classical_objects: k.num_objects(),
        classical_morphisms: k.num_morphisms(),
        equivalence,
    })
}
