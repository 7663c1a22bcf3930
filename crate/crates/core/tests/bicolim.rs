mod common;

use std::sync::Arc;

use bicolim::axioms::classify;
use bicolim::bicolim::{
    build_bicolimit, build_bicolimit_with, check_ll_equation, compose_premorphisms,
    enumerate_modifications, factorization_holds, find_homotopy, identity_homotopy,
    identity_premorphism, inverse_homotopy, lambda_pseudocone, vertical_compose_homotopies,
    BuildOptions, LObject,
};
use bicolim::fincat::{CatValued2Functor, FiniteCategory};
use bicolim::generate::{fixture, fixtures, generate, Family, Params};
use bicolim::twocat::TwoCategory;
use bicolim::Error;
use proptest::prelude::*;

use common::axioms::Naive;
use common::homotopy as oracle;

#[test]
fn terminal_base_gives_the_fibre() {
    let fx = fixture("terminal").unwrap();
    let l = build_bicolimit(&fx.functor).unwrap();
    let fibre = fx.functor.cat(fx.category.objects().next().unwrap());
    assert_eq!(l.category().num_objects(), fibre.num_objects());
    assert_eq!(l.category().num_morphisms(), fibre.num_morphisms());
}

/// `Z/2` swapping two points: the bicolimit is the action groupoid, with two objects
/// and one arrow in each direction between them.
#[test]
fn group_action_gives_the_action_groupoid() {
    let fx = fixture("z2-group").unwrap();
    let l = build_bicolimit(&fx.functor).unwrap();
    let c = l.category();
    assert_eq!((c.num_objects(), c.num_morphisms()), (2, 4));
    assert!(c.is_groupoid());
    assert!(c.is_connected());
    assert_eq!(c.hom(0, 1).len(), 1);
}

/// The chain of inclusions has the top fibre `0 -> 1 -> 2` as its colimit: three
/// isomorphism classes, linearly ordered.
#[test]
fn chain_of_inclusions_is_a_preorder_with_three_classes() {
    let fx = fixture("chain-3").unwrap();
    let l = build_bicolimit(&fx.functor).unwrap();
    let c = l.category();
    assert!(c.is_preorder());
    let n = c.num_objects();
    let mut reps: Vec<usize> = Vec::new();
    for x in 0..n {
        if !reps.iter().any(|&r| c.find_iso(r, x).is_some()) {
            reps.push(x);
        }
    }
    assert_eq!(reps.len(), 3);
    let comparable = |a: usize, b: usize| !c.hom(a, b).is_empty() || !c.hom(b, a).is_empty();
    assert!(reps.iter().all(|&a| reps.iter().all(|&b| comparable(a, b))));
}

#[test]
fn bases_that_are_not_pre_2_filtered_are_refused() {
    for name in ["span-no-cocone", "free-cell"] {
        let fx = fixture(name).unwrap();
        match build_bicolimit(&fx.functor) {
            Err(Error::Precondition(p)) => {
                assert!(p.requirement.contains("pre-2-filtered"), "{name}: {p}")
            }
            other => panic!("{name}: {other:?}"),
        }
    }
}

#[test]
fn premorphism_cap_is_a_resource_error() {
    let fx = fixture("chaotic-dag-top").unwrap();
    let r = build_bicolimit_with(
        &fx.functor,
        BuildOptions {
            max_premorphisms: 10,
        },
    );
    assert!(matches!(r, Err(Error::Resource(_))), "{r:?}");
}

#[test]
fn homotopy_search_agrees_with_the_oracle() {
    for fx in fixtures() {
        let Ok(l) = build_bicolimit(&fx.functor) else {
            continue;
        };
        let f = &fx.functor;
        let naive = Naive::new(f.base());
        for hom in l.homs() {
            for p in &hom.premorphisms {
                let id = identity_homotopy(f, p);
                assert!(check_ll_equation(f, &id).unwrap(), "{}", fx.name);
                for q in &hom.premorphisms {
                    let found = find_homotopy(f, p, q);
                    assert_eq!(
                        found.is_some(),
                        oracle::related(f, &naive, p, q),
                        "{}",
                        fx.name
                    );
                    if let Some(h) = found {
                        assert!(oracle::is_homotopy(f, &naive, &h), "{}", fx.name);
                        let back = inverse_homotopy(f, &h).unwrap();
                        assert_eq!((back.from, back.to), (*q, *p));
                        assert!(oracle::is_homotopy(f, &naive, &back), "{}", fx.name);
                    }
                }
            }
        }
    }
}

#[test]
fn vertical_composites_of_homotopies_are_homotopies() {
    for name in [
        "chaotic-parallel",
        "locally-posetal",
        "z2-weighted",
        "chain-3",
    ] {
        let fx = fixture(name).unwrap();
        let f = &fx.functor;
        let l = build_bicolimit(f).unwrap();
        let naive = Naive::new(f.base());
        let mut composed = 0;
        for hom in l.homs().iter().filter(|h| h.len() <= 12) {
            for p in &hom.premorphisms {
                for q in &hom.premorphisms {
                    let Some(h1) = find_homotopy(f, p, q) else {
                        continue;
                    };
                    for r in &hom.premorphisms {
                        let Some(h2) = find_homotopy(f, q, r) else {
                            continue;
                        };
                        let h = vertical_compose_homotopies(f, &h1, &h2).unwrap();
                        assert_eq!((h.from, h.to), (*p, *r));
                        assert!(oracle::is_homotopy(f, &naive, &h), "{name}");
                        composed += 1;
                    }
                }
            }
        }
        assert!(composed > 0, "{name}");
    }
}

#[test]
fn composition_matches_the_tabulated_category() {
    for fx in fixtures() {
        let Ok(l) = build_bicolimit(&fx.functor) else {
            continue;
        };
        let c = l.category();
        for m1 in 0..c.num_morphisms() {
            for &m2 in c.out(c.dst(m1)) {
                let (p, q) = (l.representative(m1), l.representative(m2));
                let r = compose_premorphisms(&fx.functor, p, q).unwrap();
                assert_eq!(l.class_of(&r), Some(c.compose(m2, m1)), "{}", fx.name);
            }
        }
        for x in l.objects() {
            let id = identity_premorphism(&fx.functor, *x);
            let o = l.object_id(*x).unwrap();
            assert_eq!(l.class_of(&id), Some(c.id(o)), "{}", fx.name);
        }
    }
}

#[test]
fn lambda_factors_through_itself() {
    for fx in fixtures() {
        let Ok(l) = build_bicolimit(&fx.functor) else {
            continue;
        };
        let lambda = lambda_pseudocone(&l);
        assert!(factorization_holds(&l, &lambda).unwrap(), "{}", fx.name);
        let mods = enumerate_modifications(&fx.functor, &lambda, &lambda);
        assert!(!mods.is_empty(), "{}: the identity modification", fx.name);
    }
}

#[test]
fn objects_are_all_pairs() {
    for fx in fixtures() {
        let Ok(l) = build_bicolimit(&fx.functor) else {
            continue;
        };
        let f = &fx.functor;
        let expected: usize = f.base().objects().map(|a| f.cat(a).num_objects()).sum();
        assert_eq!(l.objects().len(), expected, "{}", fx.name);
        for a in f.base().objects() {
            for e in 0..f.cat(a).num_objects() {
                assert!(l
                    .object_id(LObject {
                        base: a,
                        element: e
                    })
                    .is_some());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Constant 2-functors over generated pre-2-filtered bases: the computed relation is
    /// an equivalence relation and agrees with the oracle on every pair.
    #[test]
    fn relation_is_an_equivalence_on_generated_bases(
        fam in prop::sample::select(vec![Family::Chaotic, Family::TrivialPoset, Family::TrivialCategory]),
        objects in 2usize..4,
        seed in any::<u64>(),
    ) {
        let b = Arc::new(TwoCategory::from_data(generate(fam, Params { objects, edges: 3, density: 0.5 }, seed)).unwrap());
        prop_assume!(classify(&b).pre_2_filtered);
        let f = CatValued2Functor::constant(b.clone(), "I", FiniteCategory::indiscrete(&["x", "y"])).unwrap();
        let l = build_bicolimit(&f).unwrap();
        for r in l.relation_reports() {
            prop_assert!(r.reflexive && r.symmetric && r.transitive && r.equals_closure);
        }
        let naive = Naive::new(&b);
        for hom in l.homs().iter().filter(|h| h.len() <= 30) {
            let n = hom.len();
            for i in 0..n {
                for j in 0..n {
                    let (p, q) = (&hom.premorphisms[i], &hom.premorphisms[j]);
                    prop_assert_eq!(hom.related(i, j), oracle::related(&f, &naive, p, q));
                }
            }
        }
    }
}
