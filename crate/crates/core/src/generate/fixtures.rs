use std::collections::HashMap;
use std::sync::Arc;

use super::weighted::{chaotic_completion, trivial_two_category, weighted_two_category, Weights};
use crate::fincat::{CatFunctor, CatValued2Functor, FiniteCategory, NatTransf};
use crate::twocat::{Cell, TwoCategory, TwoCategoryData};
use crate::{Error, Result};

/// A shipped test instance: a 2-category and a 2-functor on it.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub category: Arc<TwoCategory>,
    pub functor: CatValued2Functor,
}

fn strings(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

/// Finite poset from its strict order relation; the reflexive-transitive closure is taken.
pub fn poset(objects: &[&str], less: &[(&str, &str)]) -> FiniteCategory {
    let n = objects.len();
    let pos = |s: &str| objects.iter().position(|o| *o == s).expect("known object");
    let mut leq = vec![vec![false; n]; n];
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(a, b) in less {
        leq[pos(a)][pos(b)] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if leq[i][k] && leq[k][j] {
                    leq[i][j] = true;
                }
            }
        }
    }
    FiniteCategory::preorder(&strings(objects), &leq).expect("poset")
}

/// Linear order `0 < 1 < ... < n-1` as a path category with steps `s0, s1, ...`;
/// the arrow `i -> j` is named `si.s(i+1)...s(j-1)`.
pub fn chain(n: usize) -> FiniteCategory {
    let objects: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let edges: Vec<(String, usize, usize)> = (0..n.saturating_sub(1))
        .map(|i| (format!("s{i}"), i, i + 1))
        .collect();
    FiniteCategory::path_category(&objects, &edges).expect("chain")
}

/// The one-object category of the monoid `{1, e}` with `e∘e = e`.
pub fn idempotent_monoid() -> FiniteCategory {
    FiniteCategory::build(
        vec!["*".into()],
        vec![("1".into(), 0, 0), ("e".into(), 0, 0)],
        vec![0],
        |g, f| Ok(if g == 1 || f == 1 { 1 } else { 0 }),
    )
    .expect("idempotent monoid")
}

/// Builds a 2-functor from images of generating 1-cells.
///
/// Each non-identity 1-cell of the base is looked up by name in `edges`; if absent its
/// name is split at `.` into generators listed in application order and the image is
/// the composite. 2-cells go to identities when they are identities and otherwise to
/// the unique transformation whose components are the only morphisms available; a
/// 2-cell with several candidate components is an error.
pub fn functor_from_edges(
    base: Arc<TwoCategory>,
    categories: Vec<(String, FiniteCategory)>,
    cat_of: Vec<usize>,
    edges: &[(&str, CatFunctor)],
) -> Result<CatValued2Functor> {
    let edge_map: HashMap<&str, &CatFunctor> = edges.iter().map(|(n, f)| (*n, f)).collect();
    let cat = |o: crate::twocat::Obj| &categories[cat_of[o.0]].1;
    let mut on_arrows = Vec::new();
    for u in base.arrows() {
        let image = if base.is_identity_arrow(u) {
            CatFunctor::identity(cat(base.src(u)))
        } else if let Some(f) = edge_map.get(base.arrow_name(u)) {
            (*f).clone()
        } else {
            let mut acc: Option<CatFunctor> = None;
            for step in base.arrow_name(u).split('.') {
                let f = edge_map
                    .get(step)
                    .ok_or_else(|| Error::Validation(format!("no image for generator `{step}`")))?;
                acc = Some(match acc {
                    None => (*f).clone(),
                    Some(prev) => f.after(&prev),
                });
            }
            acc.expect("non-empty name")
        };
        on_arrows.push(image);
    }
    let mut on_cells = Vec::new();
    for alpha in base.cells() {
        let (f, g) = (base.cell_src(alpha), base.cell_dst(alpha));
        let d = cat(base.dst(f));
        if base.is_identity_cell(alpha) {
            on_cells.push(NatTransf::identity(&on_arrows[f.0], d));
            continue;
        }
        let mut components = Vec::new();
        for x in 0..cat(base.src(f)).num_objects() {
            let hom = d.hom(on_arrows[f.0].obj(x), on_arrows[g.0].obj(x));
            if hom.len() != 1 {
                return Err(Error::Validation(format!(
                    "2-cell `{}` has no forced image",
                    base.cell_name(alpha)
                )));
            }
            components.push(hom[0]);
        }
        on_cells.push(NatTransf { components });
    }
    CatValued2Functor::new(base, categories, cat_of, on_arrows, on_cells)
}

/// Functor between preorders given by an object map.
pub fn monotone(c: &FiniteCategory, d: &FiniteCategory, objects: &[&str]) -> CatFunctor {
    let obj: Vec<usize> = objects
        .iter()
        .map(|s| d.object_by_name(s).expect("object"))
        .collect();
    let morphisms = (0..c.num_morphisms())
        .map(|m| {
            let hom = d.hom(obj[c.src(m)], obj[c.dst(m)]);
            assert_eq!(
                hom.len(),
                1,
                "target must be a preorder and the map monotone"
            );
            hom[0]
        })
        .collect();
    CatFunctor {
        objects: obj,
        morphisms,
    }
}

fn build(data: TwoCategoryData) -> Arc<TwoCategory> {
    Arc::new(TwoCategory::from_data(data).expect("fixture is a valid 2-category"))
}

fn arrow2() -> FiniteCategory {
    poset(&["p", "q"], &[("p", "q")])
}

fn constant(base: Arc<TwoCategory>) -> CatValued2Functor {
    CatValued2Functor::constant(base, "I", arrow2()).expect("constant 2-functor")
}

pub fn terminal() -> Fixture {
    let base = build(trivial_two_category(&FiniteCategory::terminal()));
    Fixture {
        name: "terminal",
        description: "one object, identity 1-cell and 2-cell; F constant at p -> q",
        functor: constant(base.clone()),
        category: base,
    }
}

pub fn empty() -> Fixture {
    let base = build(TwoCategoryData::default());
    Fixture {
        name: "empty",
        description: "no objects",
        functor: constant(base.clone()),
        category: base,
    }
}

pub fn discrete2() -> Fixture {
    let base = build(trivial_two_category(&FiniteCategory::discrete(&["a", "b"])));
    Fixture {
        name: "discrete-2",
        description: "two objects, identities only; F constant",
        functor: constant(base.clone()),
        category: base,
    }
}

pub fn span_no_cocone() -> Fixture {
    let base = build(trivial_two_category(&poset(
        &["e", "a", "b"],
        &[("e", "a"), ("e", "b")],
    )));
    Fixture {
        name: "span-no-cocone",
        description: "poset a <- e -> b without an upper bound; F constant",
        functor: constant(base.clone()),
        category: base,
    }
}

/// Chain `0 -> 1 -> 2` with `F(0) = •`, `F(1) = p -> q`, `F(2) = 0 -> 1 -> 2` and
/// inclusions.
pub fn chain3() -> Fixture {
    let q = chain(3);
    let base = build(trivial_two_category(&q));
    let c0 = FiniteCategory::terminal();
    let c1 = arrow2();
    let c2 = poset(&["0", "1", "2"], &[("0", "1"), ("1", "2")]);
    let s0 = monotone(&c0, &c1, &["p"]);
    let s1 = monotone(&c1, &c2, &["0", "1"]);
    let functor = functor_from_edges(
        base.clone(),
        vec![("pt".into(), c0), ("I".into(), c1), ("J".into(), c2)],
        vec![0, 1, 2],
        &[("s0", s0), ("s1", s1)],
    )
    .expect("chain functor");
    Fixture {
        name: "chain-3",
        description: "chain 0 -> 1 -> 2 with inclusions pt -> (p -> q) -> (0 -> 1 -> 2)",
        category: base,
        functor,
    }
}

/// Poset `a -> t <- b`; `F(a) = {x}`, `F(b) = {y}`, `F(t) = z1 -> z2`.
pub fn poset_top() -> Fixture {
    let q = poset(&["a", "b", "t"], &[("a", "t"), ("b", "t")]);
    let base = build(trivial_two_category(&q));
    let ca = FiniteCategory::discrete(&["x"]);
    let cb = FiniteCategory::discrete(&["y"]);
    let ct = poset(&["z1", "z2"], &[("z1", "z2")]);
    let fa = monotone(&ca, &ct, &["z1"]);
    let fb = monotone(&cb, &ct, &["z2"]);
    let functor = functor_from_edges(
        base.clone(),
        vec![("X".into(), ca), ("Y".into(), cb), ("Z".into(), ct)],
        vec![0, 1, 2],
        &[("a->t", fa), ("b->t", fb)],
    )
    .expect("poset functor");
    Fixture {
        name: "poset-top",
        description: "poset a -> t <- b with F(t) = z1 -> z2 receiving x and y",
        category: base,
        functor,
    }
}

/// Chaotic completion of two parallel arrows `a, b: 0 -> 1`, with `F(1)` an
/// indiscrete pair `y ≅ y'`, `F(a)(x) = y`, `F(b)(x) = y'`.
pub fn chaotic_parallel() -> Fixture {
    let q = FiniteCategory::path_category(
        &strings(&["0", "1"]),
        &[("a".into(), 0, 1), ("b".into(), 0, 1)],
    )
    .expect("graph");
    let base = build(chaotic_completion(&q));
    let c0 = FiniteCategory::discrete(&["x"]);
    let c1 = FiniteCategory::indiscrete(&["y", "y'"]);
    let fa = monotone(&c0, &c1, &["y"]);
    let fb = monotone(&c0, &c1, &["y'"]);
    let functor = functor_from_edges(
        base.clone(),
        vec![("X".into(), c0), ("Y".into(), c1)],
        vec![0, 1],
        &[("a", fa), ("b", fb)],
    )
    .expect("chaotic functor");
    Fixture {
        name: "chaotic-parallel",
        description: "chaotic completion of a, b: 0 => 1; F(a), F(b) pick isomorphic y, y'",
        category: base,
        functor,
    }
}

/// `Z/n` acting on `n` discrete points by rotation.
fn cyclic_action(n: usize) -> Fixture {
    let q = FiniteCategory::cyclic_group(n);
    let base = build(trivial_two_category(&q));
    let names: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let x = FiniteCategory::discrete(&refs);
    let edge_names: Vec<String> = (0..n).map(|k| format!("g{k}")).collect();
    let edges: Vec<(&str, CatFunctor)> = (0..n)
        .map(|k| {
            let objects: Vec<usize> = (0..n).map(|i| (i + k) % n).collect();
            let morphisms = objects.iter().map(|&o| x.id(o)).collect();
            (edge_names[k].as_str(), CatFunctor { objects, morphisms })
        })
        .collect();
    let functor = functor_from_edges(base.clone(), vec![("P".into(), x.clone())], vec![0], &edges)
        .expect("action");
    Fixture {
        name: if n == 2 { "z2-group" } else { "z3-group" },
        description: if n == 2 {
            "Z/2 as a one-object 2-category with identity 2-cells, swapping two points"
        } else {
            "Z/3 as a one-object 2-category with identity 2-cells, rotating three points"
        },
        category: base,
        functor,
    }
}

pub fn z2_group() -> Fixture {
    cyclic_action(2)
}

pub fn z3_group() -> Fixture {
    cyclic_action(3)
}

/// One object, one 1-cell, 2-cells `{0, 1}` under addition mod 2; `F(*)` is the group
/// `Z/2` and the non-identity 2-cell acts by the generator.
pub fn z2_weighted() -> Fixture {
    let q = FiniteCategory::terminal();
    let id = q.id(0);
    let base = build(weighted_two_category(
        &q,
        Weights::Cyclic(2),
        &[(id, id, 1)],
        true,
    ));
    let x = FiniteCategory::cyclic_group(2);
    let on_cells = base
        .cells()
        .map(|c: Cell| NatTransf {
            components: vec![if base.is_identity_cell(c) { 0 } else { 1 }],
        })
        .collect();
    let functor = CatValued2Functor::new(
        base.clone(),
        vec![("G".into(), x.clone())],
        vec![0],
        vec![CatFunctor::identity(&x)],
        on_cells,
    )
    .expect("weighted functor");
    Fixture {
        name: "z2-weighted",
        description: "one 1-cell with 2-cells Z/2; 2-filtered but BF2 fails",
        category: base,
        functor,
    }
}

/// One object, one 1-cell, 2-cells `{0, 1}` with `1 + 1 = 1`: a free idempotent,
/// non-invertible 2-cell.
pub fn free_cell() -> Fixture {
    let q = FiniteCategory::terminal();
    let id = q.id(0);
    let base = build(weighted_two_category(
        &q,
        Weights::Saturating(1),
        &[(id, id, 1)],
        false,
    ));
    let x = idempotent_monoid();
    let on_cells = base
        .cells()
        .map(|c: Cell| NatTransf {
            components: vec![if base.is_identity_cell(c) { 0 } else { 1 }],
        })
        .collect();
    let functor = CatValued2Functor::new(
        base.clone(),
        vec![("E".into(), x.clone())],
        vec![0],
        vec![CatFunctor::identity(&x)],
        on_cells,
    )
    .expect("idempotent functor");
    Fixture {
        name: "free-cell",
        description: "a free non-invertible idempotent 2-cell on the identity; F2 fails",
        category: base,
        functor,
    }
}

/// `a, b: 0 -> 1`, `c: 1 -> 2` with a 2-cell `a => b` and an inverse pair between
/// `c∘a` and `c∘b`.
pub fn locally_posetal() -> Fixture {
    let q = FiniteCategory::path_category(
        &strings(&["0", "1", "2"]),
        &[("a".into(), 0, 1), ("b".into(), 0, 1), ("c".into(), 1, 2)],
    )
    .expect("graph");
    let m = |n: &str| q.morphism_by_name(n).expect("morphism");
    let gens = [(m("a"), m("b"), 0), (m("b.c"), m("a.c"), 0)];
    let base = build(weighted_two_category(&q, Weights::Trivial, &gens, false));
    let c0 = FiniteCategory::discrete(&["x"]);
    let c1 = poset(&["y", "y'"], &[("y", "y'")]);
    let c2 = FiniteCategory::discrete(&["z"]);
    let fa = monotone(&c0, &c1, &["y"]);
    let fb = monotone(&c0, &c1, &["y'"]);
    let fc = monotone(&c1, &c2, &["z", "z"]);
    let functor = functor_from_edges(
        base.clone(),
        vec![("X".into(), c0), ("Y".into(), c1), ("Z".into(), c2)],
        vec![0, 1, 2],
        &[("a", fa), ("b", fb), ("c", fc)],
    )
    .expect("locally posetal functor");
    Fixture {
        name: "locally-posetal",
        description: "a => b: 0 -> 1 made invertible after c: 1 -> 2",
        category: base,
        functor,
    }
}

/// Chaotic completion of the free category on `0 -> 1, 0 -> 2, 1 -> 3 (twice), 2 -> 3`,
/// with indiscrete fibres.
pub fn chaotic_dag_top() -> Fixture {
    let q = FiniteCategory::path_category(
        &strings(&["0", "1", "2", "3"]),
        &[
            ("p".into(), 0, 1),
            ("q".into(), 0, 2),
            ("r".into(), 1, 3),
            ("r'".into(), 1, 3),
            ("s".into(), 2, 3),
        ],
    )
    .expect("graph");
    let base = build(chaotic_completion(&q));
    let c0 = FiniteCategory::indiscrete(&["x"]);
    let c1 = FiniteCategory::indiscrete(&["y1", "y2"]);
    let c2 = FiniteCategory::indiscrete(&["z"]);
    let c3 = FiniteCategory::indiscrete(&["t1", "t2"]);
    let edges = [
        ("p", monotone(&c0, &c1, &["y1"])),
        ("q", monotone(&c0, &c2, &["z"])),
        ("r", monotone(&c1, &c3, &["t1", "t2"])),
        ("r'", monotone(&c1, &c3, &["t2", "t2"])),
        ("s", monotone(&c2, &c3, &["t1"])),
    ];
    let functor = functor_from_edges(
        base.clone(),
        vec![
            ("X0".into(), c0),
            ("X1".into(), c1),
            ("X2".into(), c2),
            ("X3".into(), c3),
        ],
        vec![0, 1, 2, 3],
        &edges,
    )
    .expect("dag functor");
    Fixture {
        name: "chaotic-dag-top",
        description: "chaotic completion of a small free category with a top object",
        category: base,
        functor,
    }
}

/// The shipped fixture suite, in a fixed order.
pub fn fixtures() -> Vec<Fixture> {
    vec![
        terminal(),
        empty(),
        discrete2(),
        span_no_cocone(),
        chain3(),
        poset_top(),
        chaotic_parallel(),
        z2_group(),
        z3_group(),
        z2_weighted(),
        free_cell(),
        locally_posetal(),
        chaotic_dag_top(),
    ]
}

pub fn fixture(name: &str) -> Option<Fixture> {
    fixtures().into_iter().find(|f| f.name == name)
}

/// Chain of length `n` (objects `0..n`) whose fibre at `i` is the linear order with
/// `i + 2` elements and whose steps are the non-identity monotone maps
/// `k ↦ k + 1`, so no step is surjective on objects.
pub fn shifting_chain(n: usize) -> Result<CatValued2Functor> {
    let q = chain(n);
    let base = build(trivial_two_category(&q));
    let fibres: Vec<FiniteCategory> = (0..n)
        .map(|i| {
            let names: Vec<String> = (0..i + 2).map(|k| format!("{i}.{k}")).collect();
            let less: Vec<(usize, usize)> = (0..i + 1).map(|k| (k, k + 1)).collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let pairs: Vec<(&str, &str)> = less.iter().map(|&(a, b)| (refs[a], refs[b])).collect();
            poset(&refs, &pairs)
        })
        .collect();
    let edge_names: Vec<String> = (0..n.saturating_sub(1)).map(|i| format!("s{i}")).collect();
    let edges: Vec<(&str, CatFunctor)> = (0..n.saturating_sub(1))
        .map(|i| {
            let targets: Vec<String> = (0..i + 2).map(|k| format!("{}.{}", i + 1, k + 1)).collect();
            let refs: Vec<&str> = targets.iter().map(String::as_str).collect();
            (
                edge_names[i].as_str(),
                monotone(&fibres[i], &fibres[i + 1], &refs),
            )
        })
        .collect();
    let cats = fibres
        .into_iter()
        .enumerate()
        .map(|(i, c)| (format!("L{i}"), c))
        .collect();
    functor_from_edges(base, cats, (0..n).collect(), &edges)
}
