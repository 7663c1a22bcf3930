mod common;

use bicolim::axioms::squares;
use bicolim::bicolim::{
    build_bicolimit, identity_premorphism, lemma_witnesses, LObject, LemmaInput, LemmaTag,
    LemmaWitness, Premorphism,
};
use bicolim::generate::fixture;
use bicolim::Error;

use common::axioms::Naive;
use common::homotopy as oracle;

#[test]
fn a_single_square_needs_no_extension() {
    for name in ["chain-3", "chaotic-parallel", "locally-posetal"] {
        let fx = fixture(name).unwrap();
        let b = &fx.category;
        let f = b.arrows().find(|&f| !b.is_identity_arrow(f)).unwrap();
        let sq = squares(b, f, f).next().unwrap();
        let input = LemmaInput::EqualizingFamily {
            squares: vec![sq],
            second: Vec::new(),
        };
        let w = lemma_witnesses(&fx.functor, &input).unwrap();
        assert!(w.replay(&fx.functor, &input), "{name}");
        let LemmaWitness::EqualizingFamily {
            legs, value, apex, ..
        } = w
        else {
            panic!("{name}")
        };
        assert_eq!(legs.len(), 1);
        assert!(b.is_identity_arrow(legs[0].w), "{name}");
        assert_eq!(apex, sq.apex(b));
        assert_eq!(value, sq.cell);
    }
}

#[test]
fn equal_images_on_the_terminal_base_need_only_the_identity() {
    let fx = fixture("terminal").unwrap();
    let a = fx.category.objects().next().unwrap();
    let fa = fx.functor.cat(a);
    for m in 0..fa.num_morphisms() {
        let input = LemmaInput::EqualizingArrow {
            base: a,
            first: m,
            second: m,
        };
        let w = lemma_witnesses(&fx.functor, &input).unwrap();
        assert!(w.replay(&fx.functor, &input));
        let LemmaWitness::EqualizingArrow { w } = w else {
            panic!()
        };
        assert!(fx.category.is_identity_arrow(w));
    }
}

/// A premorphism of the chaotic fixture with different legs `a` and `b`.
fn split_premorphism() -> (bicolim::generate::Fixture, Premorphism) {
    let fx = fixture("chaotic-parallel").unwrap();
    let l = build_bicolimit(&fx.functor).unwrap();
    let p = l
        .homs()
        .iter()
        .flat_map(|h| h.premorphisms.iter())
        .find(|p| p.src.base == p.dst.base && p.u != p.v)
        .copied()
        .expect("legs a and b");
    (fx, p)
}

#[test]
fn equal_legs_on_the_chaotic_fixture() {
    let (fx, p) = split_premorphism();
    let input = LemmaInput::EqualLegs { premorphism: p };
    let w = lemma_witnesses(&fx.functor, &input).unwrap();
    assert!(w.replay(&fx.functor, &input));
    let LemmaWitness::EqualLegs {
        representative,
        homotopy,
    } = &w
    else {
        panic!()
    };
    assert_eq!(representative.u, representative.v);
    let naive = Naive::new(&fx.category);
    assert!(oracle::is_homotopy(&fx.functor, &naive, homotopy));
    assert!(oracle::related(&fx.functor, &naive, &p, representative));
}

#[test]
fn tampered_witnesses_do_not_replay() {
    let (fx, p) = split_premorphism();
    let input = LemmaInput::EqualLegs { premorphism: p };
    let LemmaWitness::EqualLegs { homotopy, .. } = lemma_witnesses(&fx.functor, &input).unwrap()
    else {
        panic!()
    };
    // The input itself has different legs, so it cannot stand in for the representative.
    let forged = LemmaWitness::EqualLegs {
        representative: p,
        homotopy,
    };
    assert!(!forged.replay(&fx.functor, &input));
}

#[test]
fn transport_along_identities_is_the_identity() {
    let fx = fixture("locally-posetal").unwrap();
    let b = &fx.category;
    let l = build_bicolimit(&fx.functor).unwrap();
    for p in l.homs().iter().flat_map(|h| h.premorphisms.iter()).take(20) {
        let w = b.id(p.apex);
        let input = LemmaInput::Transport {
            premorphism: *p,
            w,
            s: p.u,
            t: p.v,
            alpha: b.id_cell(p.u),
            beta: b.id_cell(p.v),
        };
        let wit = lemma_witnesses(&fx.functor, &input).unwrap();
        assert!(wit.replay(&fx.functor, &input));
        let LemmaWitness::Transport { premorphism, .. } = wit else {
            panic!()
        };
        assert_eq!(premorphism, *p);
    }
}

#[test]
fn a_single_cocone_for_one_premorphism() {
    let (fx, p) = split_premorphism();
    let input = LemmaInput::SingleCocone { family: vec![p] };
    let w = lemma_witnesses(&fx.functor, &input).unwrap();
    assert!(w.replay(&fx.functor, &input));
    let LemmaWitness::SingleCocone { transported, .. } = w else {
        panic!()
    };
    let naive = Naive::new(&fx.category);
    assert!(oracle::related(&fx.functor, &naive, &p, &transported[0]));
}

#[test]
fn preconditions_name_the_missing_axiom() {
    let span = fixture("span-no-cocone").unwrap();
    let a = span.category.objects().next().unwrap();
    let p = identity_premorphism(
        &span.functor,
        LObject {
            base: a,
            element: 0,
        },
    );
    for input in [
        LemmaInput::EqualCells {
            first: p,
            second: p,
        },
        LemmaInput::EqualLegs { premorphism: p },
    ] {
        match lemma_witnesses(&span.functor, &input) {
            Err(Error::Precondition(e)) => assert!(e.requirement.contains("pre-2-filtered"), "{e}"),
            other => panic!("{other:?}"),
        }
    }
    let z2 = fixture("z2-group").unwrap();
    let a = z2.category.objects().next().unwrap();
    let p = identity_premorphism(
        &z2.functor,
        LObject {
            base: a,
            element: 0,
        },
    );
    for tag in [LemmaTag::EqualLegs, LemmaTag::SingleCocone] {
        assert!(tag.needs_ff1());
        let input = match tag {
            LemmaTag::EqualLegs => LemmaInput::EqualLegs { premorphism: p },
            _ => LemmaInput::SingleCocone { family: vec![p] },
        };
        match lemma_witnesses(&z2.functor, &input) {
            Err(Error::Precondition(e)) => assert!(e.requirement.contains("FF1"), "{e}"),
            other => panic!("{other:?}"),
        }
    }
    // The statements needing only F1 and F2 apply to the group.
    let input = LemmaInput::EqualCells {
        first: p,
        second: p,
    };
    assert!(lemma_witnesses(&z2.functor, &input)
        .unwrap()
        .replay(&z2.functor, &input));
}

#[test]
fn ill_typed_inputs_are_validation_errors() {
    let fx = fixture("chain-3").unwrap();
    let l = build_bicolimit(&fx.functor).unwrap();
    let homs: Vec<_> = l.homs().iter().filter(|h| !h.is_empty()).collect();
    let p = homs[0].premorphisms[0];
    let q = homs
        .iter()
        .map(|h| h.premorphisms[0])
        .find(|q| (q.src, q.dst) != (p.src, p.dst))
        .unwrap();
    let input = LemmaInput::EqualCells {
        first: p,
        second: q,
    };
    assert!(matches!(
        lemma_witnesses(&fx.functor, &input),
        Err(Error::Validation(_))
    ));
}

#[test]
fn tag_names_round_trip() {
    for tag in LemmaTag::ALL {
        assert_eq!(LemmaTag::parse(tag.name()), Some(tag));
    }
    assert_eq!(LemmaTag::parse("no-such-lemma"), None);
}
