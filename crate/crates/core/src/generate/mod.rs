//! Instance generators: the shipped fixtures, random finite categories, the 2-category
//! families built from them, and mutation operators.
//!
//! Every random generator takes an explicit seed and uses ChaCha8, so a `(family,
//! params, seed)` triple always reproduces the same instance.

mod fixtures;
mod weighted;

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use fixtures::{
    chain, chain3, chaotic_dag_top, chaotic_parallel, discrete2, empty, fixture, fixtures,
    free_cell, functor_from_edges, idempotent_monoid, locally_posetal, monotone, poset, poset_top,
    shifting_chain, span_no_cocone, terminal, z2_group, z2_weighted, z3_group, Fixture,
};
pub use weighted::{chaotic_completion, trivial_two_category, weighted_two_category, Weights};

use crate::fincat::FiniteCategory;
use crate::twocat::{TwoCategory, TwoCategoryData};

/// Random poset on `n` objects: each pair `i < j` is related with probability `p`,
/// then closed transitively.
pub fn random_poset(n: usize, p: f64, seed: u64) -> FiniteCategory {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names: Vec<String> = (0..n).map(|i| format!("o{i}")).collect();
    let mut leq = vec![vec![false; n]; n];
    for (i, row) in leq.iter_mut().enumerate() {
        row[i] = true;
        for cell in row.iter_mut().skip(i + 1) {
            *cell = rng.gen_bool(p);
        }
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
    FiniteCategory::preorder(&names, &leq).expect("closed relation is a preorder")
}

/// Free category on a random acyclic multigraph with `n` objects and `edges` edges,
/// each from a lower to a higher index. With `with_top`, every object other than the
/// last one gets an extra edge to the last.
pub fn random_dag_category(n: usize, edges: usize, with_top: bool, seed: u64) -> FiniteCategory {
    assert!(n >= 2, "need at least two objects");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names: Vec<String> = (0..n).map(|i| format!("o{i}")).collect();
    let mut list = Vec::new();
    for e in 0..edges {
        let a = rng.gen_range(0..n - 1);
        let b = rng.gen_range(a + 1..n);
        list.push((format!("e{e}"), a, b));
    }
    if with_top {
        for a in 0..n - 1 {
            list.push((format!("t{a}"), a, n - 1));
        }
    }
    FiniteCategory::path_category(&names, &list).expect("acyclic graph")
}

/// Removes one object, typically the only cocone vertex of some pair.
pub fn delete_object(q: &FiniteCategory, o: usize) -> FiniteCategory {
    q.full_subcategory(|x| x != o)
}

/// Adds free non-invertible 2-cells between the given parallel pairs of `q`, with
/// saturating weights bounded by `k`.
pub fn add_free_cells(q: &FiniteCategory, pairs: &[(usize, usize)], k: u32) -> TwoCategoryData {
    let gens: Vec<(usize, usize, u32)> = pairs.iter().map(|&(f, g)| (f, g, 1)).collect();
    weighted_two_category(q, Weights::Saturating(k), &gens, false)
}

/// Parallel pairs `(f, g)` of `q` (including `f = g`) chosen at random.
pub fn random_parallel_pairs(q: &FiniteCategory, count: usize, seed: u64) -> Vec<(usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut all = Vec::new();
    for f in 0..q.num_morphisms() {
        for &g in q.hom(q.src(f), q.dst(f)) {
            all.push((f, g));
        }
    }
    (0..count.min(all.len()))
        .map(|_| all[rng.gen_range(0..all.len())])
        .collect()
}

/// One generated 2-category with the family it came from.
#[derive(Clone, Debug)]
pub struct Instance {
    pub name: String,
    pub family: Family,
    pub category: Arc<TwoCategory>,
}

/// Generator families of the axiom sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum Family {
    TrivialPoset,
    TrivialCategory,
    Chaotic,
    DeletedCocone,
    FreeCells,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::TrivialPoset,
        Family::TrivialCategory,
        Family::Chaotic,
        Family::DeletedCocone,
        Family::FreeCells,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::TrivialPoset => "trivial-poset",
            Family::TrivialCategory => "trivial-category",
            Family::Chaotic => "chaotic",
            Family::DeletedCocone => "deleted-cocone",
            Family::FreeCells => "free-cells",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == s)
    }
}

/// Size parameters for [`generate`].
#[derive(Clone, Copy, Debug)]
pub struct Params {
    pub objects: usize,
    pub edges: usize,
    pub density: f64,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            objects: 4,
            edges: 4,
            density: 0.5,
        }
    }
}

/// Presentation of one instance of `family`.
pub fn generate(family: Family, params: Params, seed: u64) -> TwoCategoryData {
    let n = params.objects.max(2);
    match family {
        Family::TrivialPoset => trivial_two_category(&random_poset(n, params.density, seed)),
        Family::TrivialCategory => trivial_two_category(&random_dag_category(
            n,
            params.edges,
            seed.is_multiple_of(2),
            seed,
        )),
        Family::Chaotic => chaotic_completion(&random_dag_category(
            n,
            params.edges,
            !seed.is_multiple_of(3),
            seed,
        )),
        Family::DeletedCocone => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
            let q = random_dag_category(n + 1, params.edges, true, seed);
            let victim = if rng.gen_bool(0.5) {
                n
            } else {
                rng.gen_range(0..n + 1)
            };
            let q = delete_object(&q, victim);
            if rng.gen_bool(0.5) {
                chaotic_completion(&q)
            } else {
                trivial_two_category(&q)
            }
        }
        Family::FreeCells => {
            let q = random_dag_category(n, params.edges, true, seed);
            let pairs = random_parallel_pairs(&q, 2, seed ^ 0xce11);
            add_free_cells(&q, &pairs, 2)
        }
    }
}

/// The sweep used for the axiom-equivalence checks: `per_family` instances of each
/// family with sizes cycling through small values, plus the bases of the fixtures
/// built from posets, chaotic completions and free cells.
pub fn axiom_suite(per_family: usize, seed: u64) -> Vec<Instance> {
    let mut out = Vec::new();
    for family in Family::ALL {
        for i in 0..per_family {
            let params = Params {
                objects: 2 + i % 4,
                edges: 1 + i % 5,
                density: [0.3, 0.5, 0.8][i % 3],
            };
            let s = seed
                .wrapping_mul(1_000_003)
                .wrapping_add((family as u64) << 32 | i as u64);
            let data = generate(family, params, s);
            let category =
                Arc::new(TwoCategory::from_data(data).expect("generated instances are valid"));
            out.push(Instance {
                name: format!("{}#{i}", family.name()),
                family,
                category,
            });
        }
    }
    for f in fixtures() {
        let family = match f.name {
            "chaotic-parallel" | "chaotic-dag-top" => Family::Chaotic,
            "free-cell" | "locally-posetal" => Family::FreeCells,
            "span-no-cocone" | "discrete-2" | "empty" => Family::DeletedCocone,
            "terminal" | "poset-top" => Family::TrivialPoset,
            "chain-3" => Family::TrivialCategory,
            _ => continue,
        };
        out.push(Instance {
            name: f.name.to_string(),
            family,
            category: f.category,
        });
    }
    out
}
