//! Locally small 2-categories built inside `Q × ΣM`, where `Q` is a finite category
//! made locally chaotic and `ΣM` is the one-object 2-category of a finite commutative
//! monoid `M`.
//!
//! A cell is a triple `(f, g, m)` for parallel `f, g` of `Q` and `m ∈ M`. The
//! sub-2-category generated by a set of such triples is closed under vertical
//! composition `(g, h, n)·(f, g, m) = (f, h, m + n)` and whiskering, which leaves the
//! weight unchanged. Commutativity of `M` gives interchange.

use std::collections::{BTreeMap, BTreeSet};

use crate::fincat::FiniteCategory;
use crate::twocat::{OneCellDecl, TwoCategoryData, TwoCellDecl};

/// The weight monoid of a weighted 2-category.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Weights {
    /// `{0}`.
    Trivial,
    /// `Z/n`.
    Cyclic(u32),
    /// `{0, ..., k}` with addition truncated at `k`; only `0` is invertible.
    Saturating(u32),
}

impl Weights {
    fn add(self, a: u32, b: u32) -> u32 {
        match self {
            Weights::Trivial => 0,
            Weights::Cyclic(n) => (a + b) % n,
            Weights::Saturating(k) => (a + b).min(k),
        }
    }

    fn neg(self, a: u32) -> Option<u32> {
        match self {
            Weights::Trivial => Some(0),
            Weights::Cyclic(n) => Some((n - a % n) % n),
            Weights::Saturating(_) => (a == 0).then_some(0),
        }
    }

    fn reduce(self, a: u32) -> u32 {
        self.add(a, 0)
    }
}

/// Presentation of the sub-2-category of `Q × ΣM` generated by `generators`, each a
/// triple `(f, g, weight)` of morphism indices of `q` with `f`, `g` parallel.
///
/// With `declare_inverses` every invertible cell also gets an `inverses` row; otherwise
/// inverses are left to the exhaustive search.
pub fn weighted_two_category(
    q: &FiniteCategory,
    weights: Weights,
    generators: &[(usize, usize, u32)],
    declare_inverses: bool,
) -> TwoCategoryData {
    let mut cells: BTreeSet<(usize, usize, u32)> =
        (0..q.num_morphisms()).map(|f| (f, f, 0)).collect();
    for &(f, g, m) in generators {
        assert!(
            q.src(f) == q.src(g) && q.dst(f) == q.dst(g),
            "generator cells must join parallel morphisms"
        );
        cells.insert((f, g, weights.reduce(m)));
    }
    loop {
        let mut fresh = BTreeSet::new();
        let by_src: BTreeMap<usize, Vec<(usize, usize, u32)>> =
            cells.iter().fold(BTreeMap::new(), |mut acc, &c| {
                acc.entry(c.0).or_insert_with(Vec::new).push(c);
                acc
            });
        for &(f, g, m) in &cells {
            if let Some(next) = by_src.get(&g) {
                for &(_, h, n) in next {
                    fresh.insert((f, h, weights.add(m, n)));
                }
            }
            for &h in q.out(q.dst(f)) {
                fresh.insert((q.compose(h, f), q.compose(h, g), m));
            }
            for k in (0..q.num_morphisms()).filter(|&k| q.dst(k) == q.src(f)) {
                fresh.insert((q.compose(f, k), q.compose(g, k), m));
            }
        }
        let before = cells.len();
        cells.extend(fresh);
        if cells.len() == before {
            break;
        }
    }

    let cells: Vec<(usize, usize, u32)> = cells.into_iter().collect();
    let index: BTreeMap<(usize, usize, u32), usize> =
        cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let plain = matches!(weights, Weights::Trivial);
    let cell_name = |&(f, g, m): &(usize, usize, u32)| {
        if f == g && m == 0 {
            format!("1_{}", q.morphism_name(f))
        } else if plain {
            format!("{}=>{}", q.morphism_name(f), q.morphism_name(g))
        } else {
            format!("{}=>{}@{}", q.morphism_name(f), q.morphism_name(g), m)
        }
    };
    let names: Vec<String> = cells.iter().map(cell_name).collect();

    let mut data = TwoCategoryData {
        objects: q.object_names().to_vec(),
        ..Default::default()
    };
    for m in 0..q.num_morphisms() {
        data.one_cells.push(OneCellDecl {
            id: q.morphism_name(m).to_string(),
            src: q.object_name(q.src(m)).to_string(),
            dst: q.object_name(q.dst(m)).to_string(),
            identity: q.is_identity(m),
        });
    }
    for f in 0..q.num_morphisms() {
        for &g in q.out(q.dst(f)) {
            data.comp1.push([
                q.morphism_name(g).to_string(),
                q.morphism_name(f).to_string(),
                q.morphism_name(q.compose(g, f)).to_string(),
            ]);
        }
    }
    for (i, &(f, g, m)) in cells.iter().enumerate() {
        data.two_cells.push(TwoCellDecl {
            id: names[i].clone(),
            src: q.morphism_name(f).to_string(),
            dst: q.morphism_name(g).to_string(),
            identity: f == g && m == 0,
        });
    }
    for (i, &(f, g, m)) in cells.iter().enumerate() {
        for (j, &(g2, h, n)) in cells.iter().enumerate() {
            if g2 == g {
                let k = index[&(f, h, weights.add(m, n))];
                data.vcomp
                    .push([names[j].clone(), names[i].clone(), names[k].clone()]);
            }
        }
        for &h in q.out(q.dst(f)) {
            let k = index[&(q.compose(h, f), q.compose(h, g), m)];
            data.whisker_left.push([
                q.morphism_name(h).to_string(),
                names[i].clone(),
                names[k].clone(),
            ]);
        }
        for kk in (0..q.num_morphisms()).filter(|&kk| q.dst(kk) == q.src(f)) {
            let k = index[&(q.compose(f, kk), q.compose(g, kk), m)];
            data.whisker_right.push([
                names[i].clone(),
                q.morphism_name(kk).to_string(),
                names[k].clone(),
            ]);
        }
        if declare_inverses {
            if let Some(inv) = weights.neg(m).and_then(|n| index.get(&(g, f, n))) {
                data.inverses.push([names[i].clone(), names[*inv].clone()]);
            }
        }
    }
    data
}

/// Only identity 2-cells.
pub fn trivial_two_category(q: &FiniteCategory) -> TwoCategoryData {
    weighted_two_category(q, Weights::Trivial, &[], false)
}

/// Exactly one 2-cell between any two parallel 1-cells.
pub fn chaotic_completion(q: &FiniteCategory) -> TwoCategoryData {
    let mut gens = Vec::new();
    for f in 0..q.num_morphisms() {
        for &g in q.hom(q.src(f), q.dst(f)) {
            gens.push((f, g, 0));
        }
    }
    weighted_two_category(q, Weights::Trivial, &gens, true)
}
