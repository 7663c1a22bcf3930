use std::collections::HashMap;

use super::{CatFunctor, FiniteCategory, NatTransf};
use crate::{Error, ResourceError, Result};

/// Default bound on the number of functors any enumeration may produce.
pub const DEFAULT_MAX_FUNCTORS: usize = 10_000;

/// Bound on the natural transformations materialized by [`functor_category`].
pub const MAX_TRANSFORMATIONS: usize = 1 << 20;

/// Bound on the composable pairs tabulated by [`functor_category`].
pub const MAX_COMPOSABLE_PAIRS: usize = 1 << 25;

struct FunctorSearch<'a> {
    c: &'a FiniteCategory,
    d: &'a FiniteCategory,
    /// Non-identity morphisms of `c` in declaration order.
    order: Vec<usize>,
    /// Position in `order` of each non-identity morphism.
    rank: Vec<usize>,
    /// Composition constraints `(g, f, g∘f)` checkable once the morphism with this
    /// rank has been assigned.
    checks: Vec<Vec<(usize, usize, usize)>>,
    /// Morphisms whose endpoints are both assigned once this object is.
    obj_checks: Vec<Vec<usize>>,
    objects: Vec<usize>,
    morphisms: Vec<usize>,
    cap: usize,
    out: Vec<CatFunctor>,
}

/// All functors `c -> d` in lexicographic order of object assignments, then of
/// morphism assignments. Fails once more than `cap` functors exist.
pub fn enumerate_functors(
    c: &FiniteCategory,
    d: &FiniteCategory,
    cap: usize,
) -> Result<Vec<CatFunctor>> {
    let order: Vec<usize> = (0..c.num_morphisms())
        .filter(|&m| !c.is_identity(m))
        .collect();
    let mut rank = vec![usize::MAX; c.num_morphisms()];
    for (i, &m) in order.iter().enumerate() {
        rank[m] = i;
    }
    let mut checks = vec![Vec::new(); order.len()];
    for f in 0..c.num_morphisms() {
        for &g in c.out(c.dst(f)) {
            if c.is_identity(f) || c.is_identity(g) {
                continue;
            }
            let gf = c.compose(g, f);
            let ready = [f, g, gf]
                .iter()
                .filter(|&&m| !c.is_identity(m))
                .map(|&m| rank[m])
                .max()
                .expect("f is not an identity");
            checks[ready].push((g, f, gf));
        }
    }
    let mut obj_checks = vec![Vec::new(); c.num_objects()];
    for &m in &order {
        obj_checks[c.src(m).max(c.dst(m))].push(m);
    }
    let mut s = FunctorSearch {
        c,
        d,
        order,
        rank,
        checks,
        obj_checks,
        objects: vec![0; c.num_objects()],
        morphisms: (0..c.num_morphisms()).collect(),
        cap,
        out: Vec::new(),
    };
    s.assign_object(0)?;
    Ok(s.out)
}

impl FunctorSearch<'_> {
    fn assign_object(&mut self, k: usize) -> Result<()> {
        if k == self.c.num_objects() {
            for o in 0..self.c.num_objects() {
                self.morphisms[self.c.id(o)] = self.d.id(self.objects[o]);
            }
            return self.assign_morphism(0);
        }
        for x in 0..self.d.num_objects() {
            self.objects[k] = x;
            let feasible = self.obj_checks[k].iter().all(|&m| {
                !self
                    .d
                    .hom(self.objects[self.c.src(m)], self.objects[self.c.dst(m)])
                    .is_empty()
            });
            if feasible {
                self.assign_object(k + 1)?;
            }
        }
        Ok(())
    }

    fn value(&self, m: usize, upto: usize) -> Option<usize> {
        (self.c.is_identity(m) || self.rank[m] <= upto).then(|| self.morphisms[m])
    }

    fn assign_morphism(&mut self, i: usize) -> Result<()> {
        if i == self.order.len() {
            if self.out.len() == self.cap {
                return Err(Error::Resource(ResourceError {
                    what: "functors".into(),
                    bound: self.cap,
                }));
            }
            self.out.push(CatFunctor {
                objects: self.objects.clone(),
                morphisms: self.morphisms.clone(),
            });
            return Ok(());
        }
        let m = self.order[i];
        let a = self.objects[self.c.src(m)];
        let b = self.objects[self.c.dst(m)];
        for idx in 0..self.d.hom(a, b).len() {
            let candidate = self.d.hom(a, b)[idx];
            self.morphisms[m] = candidate;
            let ok = self.checks[i].iter().all(|&(g, f, gf)| {
                let fg = self.value(g, i).expect("ready");
                let ff = self.value(f, i).expect("ready");
                let fgf = self.value(gf, i).expect("ready");
                self.d.compose(fg, ff) == fgf
            });
            if ok {
                self.assign_morphism(i + 1)?;
            }
        }
        Ok(())
    }
}

/// All natural transformations `g => h` for `g, h: c -> d`, lexicographic in the
/// components.
pub fn enumerate_nat_transfs(
    g: &CatFunctor,
    h: &CatFunctor,
    c: &FiniteCategory,
    d: &FiniteCategory,
) -> Vec<NatTransf> {
    let n = c.num_objects();
    // Morphisms whose naturality square is decided once the later endpoint is assigned.
    let mut ready = vec![Vec::new(); n];
    for m in 0..c.num_morphisms() {
        if !c.is_identity(m) {
            ready[c.src(m).max(c.dst(m))].push(m);
        }
    }
    let mut out = Vec::new();
    let mut comps = vec![0usize; n];
    fn go(
        k: usize,
        comps: &mut Vec<usize>,
        out: &mut Vec<NatTransf>,
        g: &CatFunctor,
        h: &CatFunctor,
        c: &FiniteCategory,
        d: &FiniteCategory,
        ready: &[Vec<usize>],
    ) {
        if k == comps.len() {
            out.push(NatTransf {
                components: comps.clone(),
            });
            return;
        }
        for &m in d.hom(g.obj(k), h.obj(k)) {
            comps[k] = m;
            let natural = ready[k].iter().all(|&e| {
                let (a, b) = (c.src(e), c.dst(e));
                d.compose(h.mor(e), comps[a]) == d.compose(comps[b], g.mor(e))
            });
            if natural {
                go(k + 1, comps, out, g, h, c, d, ready);
            }
        }
    }
    go(0, &mut comps, &mut out, g, h, c, d, &ready);
    out
}

/// The functor category `X^P` together with the functors and transformations its
/// objects and morphisms stand for.
#[derive(Clone, Debug)]
pub struct FunctorCategory {
    pub category: FiniteCategory,
    pub functors: Vec<CatFunctor>,
    pub transformations: Vec<NatTransf>,
    functor_index: HashMap<CatFunctor, usize>,
    transf_index: HashMap<(usize, usize, NatTransf), usize>,
}

impl FunctorCategory {
    pub fn functor_id(&self, f: &CatFunctor) -> Option<usize> {
        self.functor_index.get(f).copied()
    }

    /// Morphism of `X^P` standing for `t: functors[src] => functors[dst]`.
    pub fn transf_id(&self, src: usize, dst: usize, t: &NatTransf) -> Option<usize> {
        self.transf_index.get(&(src, dst, t.clone())).copied()
    }
}

/// `X^P`: functors `P -> X` and natural transformations, composed componentwise.
/// Objects are numbered in the enumeration order of [`enumerate_functors`].
pub fn functor_category(
    x: &FiniteCategory,
    p: &FiniteCategory,
    cap: usize,
) -> Result<FunctorCategory> {
    let functors = enumerate_functors(p, x, cap)?;
    let functor_index: HashMap<CatFunctor, usize> = functors
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, f)| (f, i))
        .collect();
    let object_names: Vec<String> = functors.iter().map(|f| functor_name(f, p, x)).collect();
    let mut transformations = Vec::new();
    let mut ends = Vec::new();
    let mut transf_index = HashMap::new();
    let mut identities = vec![0; functors.len()];
    for (a, fa) in functors.iter().enumerate() {
        for (b, fb) in functors.iter().enumerate() {
            for t in enumerate_nat_transfs(fa, fb, p, x) {
                if transformations.len() == MAX_TRANSFORMATIONS {
                    return Err(Error::Resource(ResourceError {
                        what: "natural transformations".into(),
                        bound: MAX_TRANSFORMATIONS,
                    }));
                }
                if a == b && t == NatTransf::identity(fa, x) {
                    identities[a] = transformations.len();
                }
                transf_index.insert((a, b, t.clone()), transformations.len());
                transformations.push(t);
                ends.push((a, b));
            }
        }
    }
    let mut incoming = vec![0usize; functors.len()];
    let mut outgoing = vec![0usize; functors.len()];
    for &(a, b) in &ends {
        outgoing[a] += 1;
        incoming[b] += 1;
    }
    let pairs: usize = incoming
        .iter()
        .zip(&outgoing)
        .map(|(i, o)| i.saturating_mul(*o))
        .sum();
    if pairs > MAX_COMPOSABLE_PAIRS {
        return Err(Error::Resource(ResourceError {
            what: "composable pairs of natural transformations".into(),
            bound: MAX_COMPOSABLE_PAIRS,
        }));
    }
    let morphisms = transformations
        .iter()
        .zip(&ends)
        .map(|(t, &(a, b))| {
            let comps: Vec<&str> = t.components.iter().map(|&m| x.morphism_name(m)).collect();
            (
                format!(
                    "[{}]:{}=>{}",
                    comps.join(","),
                    object_names[a],
                    object_names[b]
                ),
                a,
                b,
            )
        })
        .collect();
    // Componentwise composition inherits the laws of `x`.
    let category = FiniteCategory::build_lawful(object_names, morphisms, identities, |g, f| {
        let t = transformations[g].after(&transformations[f], x);
        transf_index
            .get(&(ends[f].0, ends[g].1, t))
            .copied()
            .ok_or_else(|| Error::Internal("componentwise composite is not natural".into()))
    })?;
    Ok(FunctorCategory {
        category,
        functors,
        transformations,
        functor_index,
        transf_index,
    })
}

fn functor_name(f: &CatFunctor, p: &FiniteCategory, x: &FiniteCategory) -> String {
    let objs: Vec<&str> = f.objects.iter().map(|&o| x.object_name(o)).collect();
    let mors: Vec<&str> = (0..p.num_morphisms())
        .filter(|&m| !p.is_identity(m))
        .map(|m| x.morphism_name(f.mor(m)))
        .collect();
    if mors.is_empty() {
        format!("<{}>", objs.join(","))
    } else {
        format!("<{};{}>", objs.join(","), mors.join(","))
    }
}
