use serde::{Deserialize, Serialize};

use super::FiniteCategory;

/// A functor between two finite categories, given by its object and morphism maps.
/// The categories themselves are supplied by the caller.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CatFunctor {
    pub objects: Vec<usize>,
    pub morphisms: Vec<usize>,
}

/// A natural transformation, given by one component per object of the source category.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NatTransf {
    pub components: Vec<usize>,
}

impl CatFunctor {
    pub fn identity(c: &FiniteCategory) -> Self {
        CatFunctor {
            objects: (0..c.num_objects()).collect(),
            morphisms: (0..c.num_morphisms()).collect(),
        }
    }

    /// Constant functor at object `x` of `d`.
    pub fn constant(c: &FiniteCategory, d: &FiniteCategory, x: usize) -> Self {
        CatFunctor {
            objects: vec![x; c.num_objects()],
            morphisms: vec![d.id(x); c.num_morphisms()],
        }
    }

    pub fn obj(&self, x: usize) -> usize {
        self.objects[x]
    }

    pub fn mor(&self, m: usize) -> usize {
        self.morphisms[m]
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &CatFunctor) -> CatFunctor {
        CatFunctor {
            objects: first.objects.iter().map(|&x| self.objects[x]).collect(),
            morphisms: first.morphisms.iter().map(|&m| self.morphisms[m]).collect(),
        }
    }

    /// Every violated functor law, described in words. Empty iff `self: c -> d` is a functor.
    pub fn violations(&self, c: &FiniteCategory, d: &FiniteCategory) -> Vec<String> {
        let mut v = Vec::new();
        if self.objects.len() != c.num_objects() || self.morphisms.len() != c.num_morphisms() {
            v.push("map sizes do not match the source category".to_string());
            return v;
        }
        if self.objects.iter().any(|&x| x >= d.num_objects())
            || self.morphisms.iter().any(|&m| m >= d.num_morphisms())
        {
            v.push("image outside the target category".to_string());
            return v;
        }
        for m in 0..c.num_morphisms() {
            let fm = self.morphisms[m];
            if d.src(fm) != self.objects[c.src(m)] || d.dst(fm) != self.objects[c.dst(m)] {
                v.push(format!(
                    "image of {} has the wrong endpoints",
                    c.morphism_name(m)
                ));
            }
        }
        if !v.is_empty() {
            return v;
        }
        for o in 0..c.num_objects() {
            if self.morphisms[c.id(o)] != d.id(self.objects[o]) {
                v.push(format!("identity of {} not preserved", c.object_name(o)));
            }
        }
        for f in 0..c.num_morphisms() {
            for &g in c.out(c.dst(f)) {
                if self.morphisms[c.compose(g, f)]
                    != d.compose(self.morphisms[g], self.morphisms[f])
                {
                    v.push(format!(
                        "composite {} after {} not preserved",
                        c.morphism_name(g),
                        c.morphism_name(f)
                    ));
                }
            }
        }
        v
    }

    pub fn is_functor(&self, c: &FiniteCategory, d: &FiniteCategory) -> bool {
        self.violations(c, d).is_empty()
    }
}

impl NatTransf {
    pub fn identity(g: &CatFunctor, d: &FiniteCategory) -> Self {
        NatTransf {
            components: g.objects.iter().map(|&x| d.id(x)).collect(),
        }
    }

    pub fn at(&self, x: usize) -> usize {
        self.components[x]
    }

    /// Vertical composite `self · first` (first applied first).
    pub fn after(&self, first: &NatTransf, d: &FiniteCategory) -> NatTransf {
        NatTransf {
            components: first
                .components
                .iter()
                .zip(&self.components)
                .map(|(&a, &b)| d.compose(b, a))
                .collect(),
        }
    }

    /// `K σ`: apply the functor `k` to every component.
    pub fn whisker_left(k: &CatFunctor, sigma: &NatTransf) -> NatTransf {
        NatTransf {
            components: sigma.components.iter().map(|&m| k.mor(m)).collect(),
        }
    }

    /// `σ K`: restrict the components along the functor `k`.
    pub fn whisker_right(sigma: &NatTransf, k: &CatFunctor) -> NatTransf {
        NatTransf {
            components: k.objects.iter().map(|&x| sigma.components[x]).collect(),
        }
    }

    /// Componentwise inverse, if every component is invertible.
    pub fn inverse(&self, d: &FiniteCategory) -> Option<NatTransf> {
        let components = self
            .components
            .iter()
            .map(|&m| d.inverse(m))
            .collect::<Option<Vec<_>>>()?;
        Some(NatTransf { components })
    }

    /// Every violated condition for `self: g => h` with `g, h: c -> d`.
    pub fn violations(
        &self,
        g: &CatFunctor,
        h: &CatFunctor,
        c: &FiniteCategory,
        d: &FiniteCategory,
    ) -> Vec<String> {
        let mut v = Vec::new();
        if self.components.len() != c.num_objects() {
            v.push("component count does not match the source category".to_string());
            return v;
        }
        for (x, &m) in self.components.iter().enumerate() {
            if m >= d.num_morphisms() || d.src(m) != g.obj(x) || d.dst(m) != h.obj(x) {
                v.push(format!(
                    "component at {} has the wrong endpoints",
                    c.object_name(x)
                ));
            }
        }
        if !v.is_empty() {
            return v;
        }
        for m in 0..c.num_morphisms() {
            let (a, b) = (c.src(m), c.dst(m));
            if d.compose(h.mor(m), self.components[a]) != d.compose(self.components[b], g.mor(m)) {
                v.push(format!("naturality fails at {}", c.morphism_name(m)));
            }
        }
        v
    }

    pub fn is_natural(
        &self,
        g: &CatFunctor,
        h: &CatFunctor,
        c: &FiniteCategory,
        d: &FiniteCategory,
    ) -> bool {
        self.violations(g, h, c, d).is_empty()
    }
}
