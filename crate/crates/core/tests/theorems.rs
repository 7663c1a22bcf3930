use bicolim::bicolim::{build_bicolimit, BuildOptions};
use bicolim::fincat::FiniteCategory;
use bicolim::generate::{
    chain, fixture, fixtures, idempotent_monoid, random_poset, shifting_chain,
};
use bicolim::theorems::{
    check_finite_limits_corollary, classical_filtered_colimit, compare_with_classical,
    detect_finite_limits, diamond_functor, diamond_functor_with, DiamondOptions,
};
use bicolim::Error;

fn is_terminal(x: &FiniteCategory, t: usize) -> bool {
    (0..x.num_objects()).all(|o| x.hom(o, t).len() == 1)
}

/// Every pair `(x, y)` of arrows out of `o` factors through `(p1, p2)` exactly once.
fn is_product(x: &FiniteCategory, p1: usize, p2: usize) -> bool {
    let (p, a, b) = (x.src(p1), x.dst(p1), x.dst(p2));
    (0..x.num_objects()).all(|o| {
        x.hom(o, a).iter().all(|&s| {
            x.hom(o, b).iter().all(|&t| {
                x.hom(o, p)
                    .iter()
                    .filter(|&&h| x.compose(p1, h) == s && x.compose(p2, h) == t)
                    .count()
                    == 1
            })
        })
    })
}

/// Every arrow `h` with `f h = g h` factors through `i` exactly once.
fn is_equalizer(x: &FiniteCategory, i: usize, f: usize, g: usize) -> bool {
    let (e, a) = (x.src(i), x.dst(i));
    x.compose(f, i) == x.compose(g, i)
        && (0..x.num_objects()).all(|o| {
            x.hom(o, a)
                .iter()
                .filter(|&&h| x.compose(f, h) == x.compose(g, h))
                .all(|&h| {
                    x.hom(o, e)
                        .iter()
                        .filter(|&&k| x.compose(i, k) == h)
                        .count()
                        == 1
                })
        })
}

/// `(terminal, all products, all equalizers)` by exhaustive search.
fn oracle_limits(x: &FiniteCategory) -> (bool, bool, bool) {
    let n = x.num_objects();
    let terminal = (0..n).any(|t| is_terminal(x, t));
    let products = (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).any(|p| {
                x.hom(p, a)
                    .iter()
                    .any(|&p1| x.hom(p, b).iter().any(|&p2| is_product(x, p1, p2)))
            })
        })
    });
    let equalizers = (0..x.num_morphisms()).all(|f| {
        x.hom(x.src(f), x.dst(f))
            .iter()
            .all(|&g| (0..n).any(|e| x.hom(e, x.src(f)).iter().any(|&i| is_equalizer(x, i, f, g))))
    });
    (terminal, products, equalizers)
}

#[test]
fn limit_detection_matches_exhaustive_search() {
    let mut samples = vec![
        ("terminal", FiniteCategory::terminal(), (true, true, true)),
        (
            "discrete-2",
            FiniteCategory::discrete(&["a", "b"]),
            (false, false, true),
        ),
        ("chain-3", chain(3), (true, true, true)),
        (
            "Z/2",
            FiniteCategory::cyclic_group(2),
            (false, false, false),
        ),
        (
            "indiscrete-2",
            FiniteCategory::indiscrete(&["a", "b"]),
            (true, true, true),
        ),
    ];
    samples.push((
        "idempotent",
        idempotent_monoid(),
        oracle_limits(&idempotent_monoid()),
    ));
    for seed in 0..6 {
        let p = random_poset(4, 0.5, seed);
        let expected = oracle_limits(&p);
        samples.push(("random poset", p, expected));
    }
    for (name, x, expected) in samples {
        assert_eq!(oracle_limits(&x), expected, "{name} (oracle)");
        let r = detect_finite_limits(&x);
        assert_eq!(
            (r.has_terminal(), r.has_products(), r.has_equalizers()),
            expected,
            "{name}"
        );
        if let Some(t) = r.terminal {
            assert!(is_terminal(&x, t));
        }
        for (_, w) in r.products.iter().filter_map(|(k, w)| w.map(|w| (k, w))) {
            assert!(is_product(&x, w.first, w.second), "{name}");
        }
        for ((f, g), w) in r.equalizers.iter().filter_map(|&(k, w)| w.map(|w| (k, w))) {
            assert!(is_equalizer(&x, w.inclusion, f, g), "{name}");
        }
    }
}

/// The top fibre of the shifting chain of length `n` is the linear order on `n + 1`
/// elements and every earlier fibre embeds into it.
#[test]
fn shifting_chains_have_the_top_fibre_as_colimit() {
    for n in 1..=4 {
        let f = shifting_chain(n).unwrap();
        let k = classical_filtered_colimit(&f).unwrap();
        let objects = n + 1;
        assert_eq!(k.category.num_objects(), objects, "n = {n}");
        assert_eq!(
            k.category.num_morphisms(),
            objects * (objects + 1) / 2,
            "n = {n}"
        );
        assert!(k.category.is_preorder());
        let cmp = compare_with_classical(&f, BuildOptions::default()).unwrap();
        assert!(
            cmp.equivalence.is_equivalence(),
            "n = {n}: {:?}",
            cmp.equivalence.failures
        );
    }
}

#[test]
fn classical_comparison_needs_trivial_cells() {
    for name in ["z2-group", "chaotic-parallel"] {
        let fx = fixture(name).unwrap();
        assert!(
            matches!(
                compare_with_classical(&fx.functor, BuildOptions::default()),
                Err(Error::Precondition(_))
            ),
            "{name}"
        );
    }
    let fx = fixture("discrete-2").unwrap();
    match classical_filtered_colimit(&fx.functor) {
        Err(Error::Precondition(p)) => assert!(p.requirement.contains("filtered")),
        other => panic!("{other:?}"),
    }
}

#[test]
fn powers_over_the_point_change_nothing() {
    let point = FiniteCategory::terminal();
    for fx in fixtures() {
        let Ok(l) = build_bicolimit(&fx.functor) else {
            continue;
        };
        let Ok(r) = diamond_functor(&fx.functor, &point) else {
            continue;
        };
        assert_eq!(
            (r.source_objects, r.source_morphisms),
            (l.category().num_objects(), l.category().num_morphisms()),
            "{}",
            fx.name
        );
        assert_eq!(
            (r.source_objects, r.source_morphisms),
            (r.target_objects, r.target_morphisms)
        );
        let mut objs = r.functor.objects.clone();
        objs.sort_unstable();
        objs.dedup();
        let mut mors = r.functor.morphisms.clone();
        mors.sort_unstable();
        mors.dedup();
        assert_eq!(
            (objs.len(), mors.len()),
            (r.target_objects, r.target_morphisms),
            "{}",
            fx.name
        );
        assert!(r.is_equivalence(), "{}", fx.name);
    }
}

#[test]
fn disconnected_shapes_over_a_disconnected_base() {
    let fx = fixture("discrete-2").unwrap();
    let p = FiniteCategory::discrete(&["x", "y"]);
    assert!(matches!(
        diamond_functor(&fx.functor, &p),
        Err(Error::Precondition(_))
    ));
    let options = DiamondOptions {
        allow_hypothesis_violation: true,
        ..DiamondOptions::default()
    };
    let r = diamond_functor_with(&fx.functor, &p, options).unwrap();
    assert!(!r.hypotheses.hold);
    assert!(r.hypotheses.note.is_some());
    // Diagrams landing in both components of L(F) do not come from either fibre.
    assert!(!r.essentially_surjective);
}

#[test]
fn small_functor_caps_are_resource_errors() {
    let fx = fixture("chain-3").unwrap();
    let p = chain(3);
    let options = DiamondOptions {
        max_functors: 2,
        ..DiamondOptions::default()
    };
    assert!(matches!(
        diamond_functor_with(&fx.functor, &p, options),
        Err(Error::Resource(_))
    ));
}

#[test]
fn finite_limits_pass_to_the_colimit_of_a_shifting_chain() {
    for n in 1..=3 {
        let f = shifting_chain(n).unwrap();
        let r = check_finite_limits_corollary(&f, BuildOptions::default()).unwrap();
        assert!(r.hypothesis(), "n = {n}");
        assert!(r.consistent(), "n = {n}");
        assert!(r.bicolimit.has_finite_limits());
    }
    // Z/2 fibres lack a terminal object, so nothing is claimed.
    let z2 = fixture("z2-group").unwrap();
    let r = check_finite_limits_corollary(&z2.functor, BuildOptions::default()).unwrap();
    assert!(!r.base_two_filtered);
    assert!(!r.hypothesis() && r.consistent());
}
