use serde::Serialize;

use super::{CatFunctor, FiniteCategory};

/// Brute-force verdict on whether a functor is an equivalence of categories.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub essentially_surjective: bool,
    pub full: bool,
    pub faithful: bool,
    /// For each target object: `(source object, isomorphism G(source) -> target)`,
    /// or `None` when no image is isomorphic to it.
    pub iso_witnesses: Vec<Option<(usize, usize)>>,
    /// Human-readable descriptions of every failure found.
    pub failures: Vec<String>,
}

impl EquivalenceReport {
    pub fn is_equivalence(&self) -> bool {
        self.essentially_surjective && self.full && self.faithful
    }
}

/// Decides essential surjectivity, fullness and faithfulness of `g: c -> d`.
pub fn check_equivalence(
    g: &CatFunctor,
    c: &FiniteCategory,
    d: &FiniteCategory,
) -> EquivalenceReport {
    let mut failures = Vec::new();
    let iso_witnesses: Vec<Option<(usize, usize)>> = (0..d.num_objects())
        .map(|y| (0..c.num_objects()).find_map(|x| d.find_iso(g.obj(x), y).map(|iso| (x, iso))))
        .collect();
    for (y, w) in iso_witnesses.iter().enumerate() {
        if w.is_none() {
            failures.push(format!(
                "object {} is not isomorphic to any image",
                d.object_name(y)
            ));
        }
    }
    let mut full = true;
    let mut faithful = true;
    let mut seen = vec![usize::MAX; d.num_morphisms()];
    for a in 0..c.num_objects() {
        for b in 0..c.num_objects() {
            let target = d.hom(g.obj(a), g.obj(b));
            let mut hit = 0;
            for &m in c.hom(a, b) {
                let gm = g.mor(m);
                // Stamp with the pair index so the buffer never needs clearing.
                let stamp = a * c.num_objects() + b;
                if seen[gm] == stamp {
                    if faithful {
                        failures.push(format!(
                            "not faithful on hom({}, {})",
                            c.object_name(a),
                            c.object_name(b)
                        ));
                    }
                    faithful = false;
                } else {
                    seen[gm] = stamp;
                    hit += 1;
                }
            }
            if hit < target.len() {
                if full {
                    failures.push(format!(
                        "not full on hom({}, {})",
                        c.object_name(a),
                        c.object_name(b)
                    ));
                }
                full = false;
            }
        }
    }
    EquivalenceReport {
        essentially_surjective: iso_witnesses.iter().all(Option::is_some),
        full,
        faithful,
        iso_witnesses,
        failures,
    }
}
