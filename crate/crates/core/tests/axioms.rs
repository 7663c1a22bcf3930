mod common;

use bicolim::axioms::{
    check_axiom, check_kennison_equivalence, check_prop_equivalence, classify, is_pre_2_filtered,
    replay, Axiom, AxiomInput,
};
use bicolim::generate::{fixture, fixtures, generate, Family, Params};
use bicolim::twocat::TwoCategory;
use proptest::prelude::*;

use common::axioms::Naive;

/// Flags `pre pseudo 2-filtered - bifiltered`, worked out by hand for each fixture.
const EXPECTED: [(&str, &str); 13] = [
    ("terminal", "TTT-T"),
    ("empty", "TTF-F"),
    ("discrete-2", "TTF-F"),
    ("span-no-cocone", "FFF-F"),
    ("chain-3", "TTT-T"),
    ("poset-top", "TTT-T"),
    ("chaotic-parallel", "TTT-T"),
    ("z2-group", "TFF-F"),
    ("z3-group", "TFF-F"),
    ("z2-weighted", "TTT-F"),
    ("free-cell", "FFF-F"),
    ("locally-posetal", "TTT-T"),
    ("chaotic-dag-top", "TTT-T"),
];

#[test]
fn fixture_flags() {
    assert_eq!(fixtures().len(), EXPECTED.len());
    for (name, flags) in EXPECTED {
        let fx = fixture(name).unwrap();
        let c = classify(&fx.category);
        assert_eq!(c.flags(), flags, "{name}");
        let v = Naive::new(&fx.category).verdicts();
        let oracle = format!(
            "{}{}{}-{}",
            if v.pre() { 'T' } else { 'F' },
            if v.pseudo() { 'T' } else { 'F' },
            if v.two() { 'T' } else { 'F' },
            if v.bifiltered() { 'T' } else { 'F' }
        );
        assert_eq!(oracle, flags, "{name} (oracle)");
    }
}

#[test]
fn witnesses_replay_and_counterexamples_are_genuine() {
    for fx in fixtures() {
        let b = &fx.category;
        for axiom in Axiom::ALL {
            let r = check_axiom(axiom, b);
            assert_eq!(r.holds, r.counterexample.is_none(), "{} {axiom}", fx.name);
            assert_eq!(
                r.holds,
                r.instances.iter().all(|i| i.witness.is_some()),
                "{} {axiom}",
                fx.name
            );
            for inst in &r.instances {
                if let Some(w) = &inst.witness {
                    assert!(
                        replay(b, axiom, &inst.input, w),
                        "{} {axiom}: {:?}",
                        fx.name,
                        inst.input
                    );
                }
            }
            if let Some(c) = &r.counterexample {
                let listed = r
                    .instances
                    .iter()
                    .find(|i| i.input == *c)
                    .expect("counterexample is an instance");
                assert!(listed.witness.is_none());
            }
        }
    }
}

#[test]
fn named_counterexamples() {
    let d2 = fixture("discrete-2").unwrap();
    let r = check_axiom(Axiom::F0, &d2.category);
    assert!(matches!(r.counterexample, Some(AxiomInput::Objects(a, b)) if a != b));

    let span = fixture("span-no-cocone").unwrap();
    let r = check_axiom(Axiom::F1, &span.category);
    let Some(AxiomInput::Span { f, g }) = r.counterexample else {
        panic!("{:?}", r.counterexample)
    };
    let b = &span.category;
    assert_ne!(b.dst(f), b.dst(g));
    assert!(matches!(is_pre_2_filtered(b), Err((Axiom::F1, _))));

    let free = fixture("free-cell").unwrap();
    assert!(check_axiom(Axiom::F1, &free.category).holds);
    assert!(!check_axiom(Axiom::F2, &free.category).holds);
    assert!(matches!(
        is_pre_2_filtered(&free.category),
        Err((Axiom::F2, _))
    ));

    let weighted = fixture("z2-weighted").unwrap();
    let r = check_axiom(Axiom::BF2, &weighted.category);
    assert!(matches!(
        r.counterexample,
        Some(AxiomInput::ParallelCells(_, _))
    ));
}

#[test]
fn the_empty_category_is_vacuously_pseudo_2_filtered() {
    let fx = fixture("empty").unwrap();
    let c = classify(&fx.category);
    assert!(c.pseudo_2_filtered);
    assert!(!c.holds(Axiom::NonEmpty));
    assert!(!c.two_filtered);
}

#[test]
fn weak_axioms_and_kennison_on_fixtures() {
    for fx in fixtures() {
        assert!(check_prop_equivalence(&fx.category), "{}", fx.name);
        let expected = fx.name != "z2-weighted";
        assert_eq!(
            check_kennison_equivalence(&fx.category),
            expected,
            "{}",
            fx.name
        );
    }
}

fn family() -> impl Strategy<Value = Family> {
    prop::sample::select(Family::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn axiom_values_match_the_naive_deciders(
        fam in family(), objects in 2usize..5, edges in 1usize..5, seed in any::<u64>()
    ) {
        let b = TwoCategory::from_data(generate(fam, Params { objects, edges, density: 0.5 }, seed)).unwrap();
        let c = classify(&b);
        let v = Naive::new(&b).verdicts();
        prop_assert_eq!(c.holds(Axiom::F0), v.f0);
        prop_assert_eq!(c.holds(Axiom::F1), v.f1);
        prop_assert_eq!(c.holds(Axiom::F2), v.f2);
        prop_assert_eq!(c.holds(Axiom::FF1), v.ff1);
        prop_assert_eq!(c.holds(Axiom::WF1), v.wf1);
        prop_assert_eq!(c.holds(Axiom::WF2), v.wf2);
        prop_assert_eq!(c.holds(Axiom::WF3), v.wf3);
        prop_assert_eq!(c.holds(Axiom::BF1), v.bf1);
        prop_assert_eq!(c.holds(Axiom::BF2), v.bf2);
        prop_assert_eq!(c.holds(Axiom::BF0), c.holds(Axiom::F0));
        // The implication chain between the notions.
        prop_assert!(!c.two_filtered || c.pseudo_2_filtered);
        prop_assert!(!c.pseudo_2_filtered || c.pre_2_filtered);
        prop_assert_eq!(c.pre_2_filtered, v.weak());
    }
}
