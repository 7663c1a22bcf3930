use std::collections::HashSet;

use bicolim::generate::{
    axiom_suite, fixture, fixtures, generate, random_dag_category, random_poset, Family, Params,
};
use bicolim::twocat::TwoCategory;
use proptest::prelude::*;

#[test]
fn fixtures_have_unique_names() {
    let all = fixtures();
    assert!(all.len() >= 12);
    let names: HashSet<_> = all.iter().map(|f| f.name).collect();
    assert_eq!(names.len(), all.len());
    for fx in &all {
        assert_eq!(fixture(fx.name).unwrap().name, fx.name);
        assert!(!fx.description.is_empty());
        assert_eq!(fx.functor.base().data(), fx.category.data());
    }
    assert!(fixture("missing").is_none());
}

#[test]
fn axiom_suite_has_every_family() {
    let suite = axiom_suite(25, 7);
    for fam in Family::ALL {
        assert!(
            suite.iter().filter(|i| i.family == fam).count() >= 25,
            "{}",
            fam.name()
        );
        assert_eq!(Family::parse(fam.name()), Some(fam));
    }
    let names: HashSet<_> = suite.iter().map(|i| i.name.as_str()).collect();
    assert_eq!(names.len(), suite.len());
    let again = axiom_suite(25, 7);
    assert!(suite
        .iter()
        .zip(&again)
        .all(|(a, b)| a.category.data() == b.category.data()));
}

fn only_identity_cells(b: &TwoCategory) -> bool {
    b.cells().all(|c| b.is_identity_cell(c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn generation_is_deterministic(
        fam in prop::sample::select(Family::ALL.to_vec()), objects in 2usize..6, seed in any::<u64>()
    ) {
        let params = Params { objects, edges: 3, density: 0.4 };
        prop_assert_eq!(generate(fam, params, seed), generate(fam, params, seed));
    }

    #[test]
    fn trivial_families_have_only_identity_cells(objects in 2usize..6, seed in any::<u64>()) {
        let params = Params { objects, ..Params::default() };
        for fam in [Family::TrivialPoset, Family::TrivialCategory] {
            let b = TwoCategory::from_data(generate(fam, params, seed)).unwrap();
            prop_assert!(only_identity_cells(&b));
        }
    }

    /// A chaotic completion has exactly one 2-cell between any two parallel 1-cells.
    #[test]
    fn chaotic_completion_has_one_cell_per_parallel_pair(objects in 2usize..5, seed in any::<u64>()) {
        let b = TwoCategory::from_data(generate(Family::Chaotic, Params { objects, ..Params::default() }, seed)).unwrap();
        for f in b.arrows() {
            for &g in b.arrows_between(b.src(f), b.dst(f)) {
                let n = b.cells().filter(|&c| b.cell_src(c) == f && b.cell_dst(c) == g).count();
                prop_assert_eq!(n, 1);
            }
        }
        prop_assert!(b.cells().all(|c| b.is_invertible(c)));
    }

    #[test]
    fn random_posets_are_preorders(n in 1usize..7, p in 0.0f64..1.0, seed in any::<u64>()) {
        let q = random_poset(n, p, seed);
        prop_assert_eq!(q.num_objects(), n);
        prop_assert!(q.is_preorder());
        // Antisymmetric: no two distinct objects are isomorphic.
        for a in 0..n {
            for b in 0..n {
                prop_assert!(a == b || q.hom(a, b).is_empty() || q.hom(b, a).is_empty());
            }
        }
    }

    #[test]
    /// The top is weakly terminal: every object reaches it and nothing leaves it.
    fn dag_categories_with_a_top_reach_the_last_object(n in 2usize..6, edges in 0usize..6, seed in any::<u64>()) {
        let q = random_dag_category(n, edges, true, seed);
        let top = n - 1;
        prop_assert!((0..n).all(|o| !q.hom(o, top).is_empty()));
        prop_assert_eq!(q.out(top).len(), 1);
        prop_assert!(q.is_connected());
    }
}
