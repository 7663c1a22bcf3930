use serde::Serialize;
use std::sync::Arc;

use crate::axioms::{classify, describe_input, Axiom};
use crate::bicolim::{
    build_bicolimit_with, factor_pseudocone, lambda_pseudocone, BuildOptions, Pseudocone,
};
use crate::fincat::{
    check_equivalence, functor_category, lift_to_power, CatFunctor, CatValued2Functor,
    EquivalenceReport, FiniteCategory, NatTransf, DEFAULT_MAX_FUNCTORS,
};
use crate::{precondition, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiamondOptions {
    pub max_functors: usize,
    pub max_premorphisms: usize,
    /// Compute the flags even when the base and shape fall outside the theorem.
    pub allow_hypothesis_violation: bool,
}

impl Default for DiamondOptions {
    fn default() -> Self {
        DiamondOptions {
            max_functors: DEFAULT_MAX_FUNCTORS,
            max_premorphisms: BuildOptions::default().max_premorphisms,
            allow_hypothesis_violation: false,
        }
    }
}

/// Which hypotheses of the comparison theorem the input meets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    pub two_filtered: bool,
    pub pseudo_2_filtered: bool,
    pub pre_2_filtered: bool,
    pub shape_connected: bool,
    pub shape_is_preorder: bool,
    /// 2-filtered, or pseudo-2-filtered with a connected shape.
    pub hold: bool,
    /// The first failing axiom instance when `hold` is false.
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiamondReport {
    /// `L(F^P) -> L(F)^P`.
    pub functor: CatFunctor,
    pub source_objects: usize,
    pub source_morphisms: usize,
    pub target_objects: usize,
    pub target_morphisms: usize,
    pub essentially_surjective: bool,
    pub full: bool,
    pub faithful: bool,
    /// Isomorphism witnesses for essential surjectivity and descriptions of every
    /// fullness or faithfulness failure.
    pub equivalence: EquivalenceReport,
    pub hypotheses: Hypotheses,
}

impl DiamondReport {
    pub fn is_equivalence(&self) -> bool {
        self.essentially_surjective && self.full && self.faithful
    }
}

fn hypotheses(f: &CatValued2Functor, p: &FiniteCategory) -> Hypotheses {
    let b = f.base();
    let c = classify(b);
    let connected = p.is_connected();
    let hold = c.two_filtered || (c.pseudo_2_filtered && connected);
    let note = (!hold).then(|| {
        let order = if c.pseudo_2_filtered {
            vec![Axiom::NonEmpty, Axiom::F0]
        } else {
            vec![Axiom::F1, Axiom::F2, Axiom::FF1]
        };
        let failing = order.into_iter().find(|&a| !c.holds(a));
        match failing {
            Some(a) => {
                let input = c
                    .result(a)
                    .counterexample
                    .expect("failing axiom has a counterexample");
                format!("{a} fails at {}", describe_input(b, &input))
            }
            None => "shape is not connected".to_string(),
        }
    });
    Hypotheses {
        two_filtered: c.two_filtered,
        pseudo_2_filtered: c.pseudo_2_filtered,
        pre_2_filtered: c.pre_2_filtered,
        shape_connected: connected,
        shape_is_preorder: p.is_preorder(),
        hold,
        note,
    }
}

pub fn diamond_functor(f: &CatValued2Functor, p: &FiniteCategory) -> Result<DiamondReport> {
    diamond_functor_with(f, p, DiamondOptions::default())
}

/// Builds `L(F^P)`, `L(F)^P` and the functor between them induced by the pseudocone
/// `F^P => L(F)^P` whose leg at `A` sends `D: P -> FA` to `λ_A∘D`, then checks the
/// functor for essential surjectivity, fullness and faithfulness.
///
/// Without `allow_hypothesis_violation`, an input outside the theorem is refused with
/// a precondition error. Either way both bicolimits need a pre-2-filtered base.
pub fn diamond_functor_with(
    f: &CatValued2Functor,
    p: &FiniteCategory,
    options: DiamondOptions,
) -> Result<DiamondReport> {
    let hyp = hypotheses(f, p);
    if !hyp.hold && !options.allow_hypothesis_violation {
        return Err(precondition(
            "2-filtered, or pseudo-2-filtered with a connected shape",
            hyp.note.clone().unwrap_or_default(),
        ));
    }
    let build = BuildOptions {
        max_premorphisms: options.max_premorphisms,
    };
    let lf = build_bicolimit_with(f, build)?;
    let lambda = lambda_pseudocone(&lf);
    let lifted = lift_to_power(f, p, options.max_functors)?;
    let lfp = build_bicolimit_with(&lifted.functor, build)?;
    let target = functor_category(lf.category(), p, options.max_functors)?;

    let b = f.base();
    let missing = || Error::Internal("λ-image missing from the target functor category".into());
    let mut legs = Vec::with_capacity(b.num_objects());
    for a in b.objects() {
        let power = &lifted.powers[f.category_index(a)];
        let lam = &lambda.legs[a.0];
        let objects = power
            .functors
            .iter()
            .map(|d| target.functor_id(&lam.after(d)).ok_or_else(missing))
            .collect::<Result<Vec<_>>>()?;
        let morphisms = power
            .transformations
            .iter()
            .enumerate()
            .map(|(m, t)| {
                let image = NatTransf {
                    components: t.components.iter().map(|&c| lam.mor(c)).collect(),
                };
                let (s, d) = (power.category.src(m), power.category.dst(m));
                target
                    .transf_id(objects[s], objects[d], &image)
                    .ok_or_else(missing)
            })
            .collect::<Result<Vec<_>>>()?;
        legs.push(CatFunctor { objects, morphisms });
    }
    let mut coherence = Vec::with_capacity(b.num_arrows());
    for u in b.arrows() {
        let (a, bb) = (b.src(u), b.dst(u));
        let power = &lifted.powers[f.category_index(a)];
        let components = power
            .functors
            .iter()
            .enumerate()
            .map(|(i, d)| {
                let t = NatTransf {
                    components: d
                        .objects
                        .iter()
                        .map(|&x| lambda.coherence[u.0].at(x))
                        .collect(),
                };
                let src = legs[bb.0].obj(lifted.functor.obj(u, i));
                target
                    .transf_id(src, legs[a.0].obj(i), &t)
                    .ok_or_else(missing)
            })
            .collect::<Result<Vec<_>>>()?;
        coherence.push(NatTransf { components });
    }
    let cone = Pseudocone {
        vertex: Arc::new(target.category.clone()),
        legs,
        coherence,
    };
    let functor = factor_pseudocone(&lfp, &cone)?;
    let equivalence = check_equivalence(&functor, lfp.category(), &target.category);
    Ok(DiamondReport {
        source_objects: lfp.category().num_objects(),
        source_morphisms: lfp.category().num_morphisms(),
        target_objects: target.category.num_objects(),
        target_morphisms: target.category.num_morphisms(),
        essentially_surjective: equivalence.essentially_surjective,
        full: equivalence.full,
        faithful: equivalence.faithful,
        functor,
        equivalence,
        hypotheses: hyp,
    })
}
