use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

fn is_false(b: &bool) -> bool {
    !*b
}

/// Declaration of a morphism `id: src -> dst`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismDecl {
    pub id: String,
    pub src: String,
    pub dst: String,
    #[serde(default, skip_serializing_if = "is_false")]
    pub identity: bool,
}

/// Unvalidated presentation of a finite category. `comp` rows are `[g, f, g∘f]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteCategoryData {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismDecl>,
    #[serde(default)]
    pub comp: Vec<[String; 3]>,
}

/// A validated finite category. Objects and morphisms are referred to by their
/// declaration index.
#[derive(Clone, Debug)]
pub struct FiniteCategory {
    objects: Vec<String>,
    mor_names: Vec<String>,
    ends: Vec<(usize, usize)>,
    identity: Vec<usize>,
    is_identity: Vec<bool>,
    /// Morphisms out of each object, sorted by (dst, index).
    out: Vec<Vec<usize>>,
    pos_in_out: Vec<usize>,
    /// `comp[f][pos_in_out[g]] = g∘f` for every `g` out of `dst f`.
    comp: Vec<Vec<u32>>,
    inverse: Vec<Option<usize>>,
    object_index: HashMap<String, usize>,
    mor_index: HashMap<String, usize>,
}

impl PartialEq for FiniteCategory {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.mor_names == other.mor_names
            && self.ends == other.ends
            && self.identity == other.identity
            && self.comp == other.comp
            && self.out == other.out
    }
}

impl Eq for FiniteCategory {}

impl FiniteCategory {
    /// Builds a category from morphism declarations and a composition rule, then checks
    /// the unit and associativity laws.
    ///
    /// `morphisms` lists `(name, src, dst)`; `identities[o]` is the identity of object `o`;
    /// `compose(g, f)` is only called on composable pairs.
    pub fn build(
        objects: Vec<String>,
        morphisms: Vec<(String, usize, usize)>,
        identities: Vec<usize>,
        compose: impl FnMut(usize, usize) -> Result<usize>,
    ) -> Result<Self> {
        Self::build_inner(objects, morphisms, identities, compose, true)
    }

    /// As [`FiniteCategory::build`] but without the law check, for constructions whose
    /// laws follow from those of their inputs. Boundaries are still checked.
    pub(crate) fn build_lawful(
        objects: Vec<String>,
        morphisms: Vec<(String, usize, usize)>,
        identities: Vec<usize>,
        compose: impl FnMut(usize, usize) -> Result<usize>,
    ) -> Result<Self> {
        Self::build_inner(objects, morphisms, identities, compose, false)
    }

    fn build_inner(
        objects: Vec<String>,
        morphisms: Vec<(String, usize, usize)>,
        identities: Vec<usize>,
        mut compose: impl FnMut(usize, usize) -> Result<usize>,
        check_laws: bool,
    ) -> Result<Self> {
        let n0 = objects.len();
        let n1 = morphisms.len();
        if identities.len() != n0 {
            return Err(Error::Validation("one identity per object required".into()));
        }
        let mut mor_names = Vec::with_capacity(n1);
        let mut ends = Vec::with_capacity(n1);
        for (name, s, d) in morphisms {
            if s >= n0 || d >= n0 {
                return Err(Error::Validation(format!(
                    "morphism {name} has an unknown endpoint"
                )));
            }
            mor_names.push(name);
            ends.push((s, d));
        }
        let mut is_identity = vec![false; n1];
        for (o, &i) in identities.iter().enumerate() {
            if i >= n1 || ends[i] != (o, o) || is_identity[i] {
                return Err(Error::Validation(format!(
                    "bad identity for object {}",
                    objects[o]
                )));
            }
            is_identity[i] = true;
        }
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); n0];
        for (m, &(s, _)) in ends.iter().enumerate() {
            out[s].push(m);
        }
        for list in &mut out {
            list.sort_by_key(|&m| (ends[m].1, m));
        }
        let mut pos_in_out = vec![0; n1];
        for list in &out {
            for (p, &m) in list.iter().enumerate() {
                pos_in_out[m] = p;
            }
        }
        let mut comp = Vec::with_capacity(n1);
        for f in 0..n1 {
            let d = ends[f].1;
            let mut row = Vec::with_capacity(out[d].len());
            for &g in &out[d] {
                let gf = compose(g, f)?;
                if gf >= n1 || ends[gf] != (ends[f].0, ends[g].1) {
                    return Err(Error::Validation(format!(
                        "composite of {} after {} has the wrong boundary",
                        mor_names[g], mor_names[f]
                    )));
                }
                row.push(gf as u32);
            }
            comp.push(row);
        }
        let object_index = objects
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect::<HashMap<_, _>>();
        if object_index.len() != n0 {
            return Err(Error::Validation("duplicate object name".into()));
        }
        let mor_index = mor_names
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i))
            .collect::<HashMap<_, _>>();
        if mor_index.len() != n1 {
            return Err(Error::Validation("duplicate morphism name".into()));
        }
        let mut cat = FiniteCategory {
            objects,
            mor_names,
            ends,
            identity: identities,
            is_identity,
            out,
            pos_in_out,
            comp,
            inverse: Vec::new(),
            object_index,
            mor_index,
        };
        let violations = if check_laws {
            cat.law_violations()
        } else {
            Vec::new()
        };
        if let Some(v) = violations.first() {
            return Err(Error::Validation(format!(
                "{} category law violation(s), first: {v}",
                violations.len()
            )));
        }
        cat.inverse = (0..n1).map(|m| cat.search_inverse(m)).collect();
        Ok(cat)
    }

    /// Parses and validates a presentation.
    pub fn from_data(data: &FiniteCategoryData) -> Result<Self> {
        let object_index: HashMap<&str, usize> = data
            .objects
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        let find_obj = |s: &str, ctx: &str| {
            object_index
                .get(s)
                .copied()
                .ok_or_else(|| Error::Validation(format!("{ctx}: unknown object `{s}`")))
        };
        let mut morphisms = Vec::new();
        let mut identities = vec![None; data.objects.len()];
        for (i, m) in data.morphisms.iter().enumerate() {
            let s = find_obj(&m.src, &m.id)?;
            let d = find_obj(&m.dst, &m.id)?;
            if m.identity && (s != d || identities[s].replace(i).is_some()) {
                return Err(Error::Validation(format!(
                    "bad identity flag on `{}`",
                    m.id
                )));
            }
            morphisms.push((m.id.clone(), s, d));
        }
        let identities = identities
            .into_iter()
            .enumerate()
            .map(|(o, i)| {
                i.ok_or_else(|| {
                    Error::Validation(format!("object `{}` has no identity", data.objects[o]))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let mor_index: HashMap<&str, usize> = data
            .morphisms
            .iter()
            .enumerate()
            .map(|(i, m)| (m.id.as_str(), i))
            .collect();
        let find_mor = |s: &str| {
            mor_index
                .get(s)
                .copied()
                .ok_or_else(|| Error::Validation(format!("comp: unknown morphism `{s}`")))
        };
        let mut table: HashMap<(usize, usize), usize> = HashMap::new();
        for row in &data.comp {
            let g = find_mor(&row[0])?;
            let f = find_mor(&row[1])?;
            let gf = find_mor(&row[2])?;
            if morphisms[f].2 != morphisms[g].1 {
                return Err(Error::Validation(format!(
                    "comp: ({}, {}) is not composable",
                    row[0], row[1]
                )));
            }
            if table.insert((g, f), gf).is_some() {
                return Err(Error::Validation(format!(
                    "comp: duplicate entry ({}, {})",
                    row[0], row[1]
                )));
            }
        }
        // Composites with identities may be omitted.
        let ids = identities.clone();
        let is_id = |m: usize| ids.contains(&m);
        let names: Vec<String> = morphisms.iter().map(|m| m.0.clone()).collect();
        Self::build(
            data.objects.clone(),
            morphisms,
            identities.clone(),
            |g, f| {
                if let Some(&gf) = table.get(&(g, f)) {
                    Ok(gf)
                } else if is_id(g) {
                    Ok(f)
                } else if is_id(f) {
                    Ok(g)
                } else {
                    Err(Error::Validation(format!(
                        "comp: missing entry ({}, {})",
                        names[g], names[f]
                    )))
                }
            },
        )
    }

    /// Presentation listing every composite with a non-identity factor.
    pub fn to_data(&self) -> FiniteCategoryData {
        let morphisms = (0..self.num_morphisms())
            .map(|m| MorphismDecl {
                id: self.mor_names[m].clone(),
                src: self.objects[self.ends[m].0].clone(),
                dst: self.objects[self.ends[m].1].clone(),
                identity: self.is_identity[m],
            })
            .collect();
        let mut comp = Vec::new();
        for f in 0..self.num_morphisms() {
            if self.is_identity[f] {
                continue;
            }
            for &g in &self.out[self.ends[f].1] {
                if !self.is_identity[g] {
                    let gf = self.compose(g, f);
                    comp.push([
                        self.mor_names[g].clone(),
                        self.mor_names[f].clone(),
                        self.mor_names[gf].clone(),
                    ]);
                }
            }
        }
        FiniteCategoryData {
            objects: self.objects.clone(),
            morphisms,
            comp,
        }
    }

    fn law_violations(&self) -> Vec<String> {
        let mut v = Vec::new();
        for f in 0..self.num_morphisms() {
            let (s, d) = self.ends[f];
            if self.compose(self.identity[d], f) != f || self.compose(f, self.identity[s]) != f {
                v.push(format!("unit law fails at {}", self.mor_names[f]));
            }
        }
        for f in 0..self.num_morphisms() {
            for &g in &self.out[self.ends[f].1] {
                let gf = self.compose(g, f);
                for &h in &self.out[self.ends[g].1] {
                    if self.compose(self.compose(h, g), f) != self.compose(h, gf) {
                        v.push(format!(
                            "associativity fails at ({}, {}, {})",
                            self.mor_names[h], self.mor_names[g], self.mor_names[f]
                        ));
                    }
                }
            }
        }
        v
    }

    /// Category with one object and only its identity.
    pub fn terminal() -> Self {
        Self::discrete(&["*"])
    }

    pub fn empty() -> Self {
        Self::build(Vec::new(), Vec::new(), Vec::new(), |_, _| unreachable!())
            .expect("empty category")
    }

    /// Discrete category on the given objects; identities are named `1_<object>`.
    pub fn discrete(objects: &[&str]) -> Self {
        let objs: Vec<String> = objects.iter().map(|s| s.to_string()).collect();
        let mors = objs
            .iter()
            .enumerate()
            .map(|(i, o)| (format!("1_{o}"), i, i))
            .collect();
        let ids = (0..objs.len()).collect();
        Self::build(objs, mors, ids, |g, _| Ok(g)).expect("discrete category")
    }

    /// Finite preorder; `leq[a][b]` must be reflexive and transitive. The arrow `a -> b`
    /// is named `a->b` and identities `1_a`.
    pub fn preorder(objects: &[String], leq: &[Vec<bool>]) -> Result<Self> {
        let n = objects.len();
        let mut index = HashMap::new();
        let mut mors = Vec::new();
        let mut ids = vec![0; n];
        for a in 0..n {
            for b in 0..n {
                if leq[a][b] {
                    index.insert((a, b), mors.len());
                    if a == b {
                        ids[a] = mors.len();
                        mors.push((format!("1_{}", objects[a]), a, a));
                    } else {
                        mors.push((format!("{}->{}", objects[a], objects[b]), a, b));
                    }
                }
            }
        }
        let ends: Vec<(usize, usize)> = mors.iter().map(|m| (m.1, m.2)).collect();
        Self::build(objects.to_vec(), mors, ids, |g, f| {
            index
                .get(&(ends[f].0, ends[g].1))
                .copied()
                .ok_or_else(|| Error::Validation("preorder is not transitive".into()))
        })
    }

    /// Cyclic group `Z/n` as a one-object category; `g^k` is named `g<k>` (`g0` the identity).
    pub fn cyclic_group(n: usize) -> Self {
        assert!(n > 0);
        let mors = (0..n).map(|k| (format!("g{k}"), 0, 0)).collect();
        Self::build(vec!["*".into()], mors, vec![0], |g, f| Ok((g + f) % n)).expect("cyclic group")
    }

    /// Category with exactly one morphism between any two objects.
    pub fn indiscrete(objects: &[&str]) -> Self {
        let n = objects.len();
        let objs: Vec<String> = objects.iter().map(|s| s.to_string()).collect();
        Self::preorder(&objs, &vec![vec![true; n]; n]).expect("indiscrete category")
    }

    /// Free category on a finite directed acyclic multigraph; edges are
    /// `(name, src, dst)` and paths are named by their edges joined with `.` in
    /// application order.
    pub fn path_category(objects: &[String], edges: &[(String, usize, usize)]) -> Result<Self> {
        let n = objects.len();
        // paths[i] = list of edge indices in application order
        let mut paths: Vec<(Vec<usize>, usize, usize)> =
            (0..n).map(|o| (Vec::new(), o, o)).collect();
        let mut frontier: Vec<usize> = (0..n).collect();
        let mut guard = 0;
        while let Some(p) = frontier.pop() {
            guard += 1;
            if guard > 100_000 {
                return Err(Error::Validation(
                    "path category too large or graph has a cycle".into(),
                ));
            }
            let (_, s, d) = paths[p].clone();
            for (e, (_, es, ed)) in edges.iter().enumerate() {
                if *es == d {
                    let mut path = paths[p].0.clone();
                    path.push(e);
                    paths.push((path, s, *ed));
                    frontier.push(paths.len() - 1);
                }
            }
        }
        paths.sort_by(|a, b| (a.0.len(), a.1, a.2, &a.0).cmp(&(b.0.len(), b.1, b.2, &b.0)));
        let index: HashMap<(Vec<usize>, usize), usize> = paths
            .iter()
            .enumerate()
            .map(|(i, p)| ((p.0.clone(), p.1), i))
            .collect();
        let mut ids = vec![0; n];
        let mors = paths
            .iter()
            .enumerate()
            .map(|(i, (path, s, d))| {
                if path.is_empty() {
                    ids[*s] = i;
                    (format!("1_{}", objects[*s]), *s, *d)
                } else {
                    let name: Vec<&str> = path.iter().map(|&e| edges[e].0.as_str()).collect();
                    (name.join("."), *s, *d)
                }
            })
            .collect();
        Self::build(objects.to_vec(), mors, ids, |g, f| {
            let mut path = paths[f].0.clone();
            path.extend_from_slice(&paths[g].0);
            Ok(index[&(path, paths[f].1)])
        })
    }

    /// Full subcategory on the objects for which `keep` holds, in declaration order.
    pub fn full_subcategory(&self, keep: impl Fn(usize) -> bool) -> FiniteCategory {
        let kept: Vec<usize> = (0..self.num_objects()).filter(|&o| keep(o)).collect();
        let mut new_obj = vec![usize::MAX; self.num_objects()];
        for (i, &o) in kept.iter().enumerate() {
            new_obj[o] = i;
        }
        let mors: Vec<usize> = (0..self.num_morphisms())
            .filter(|&m| new_obj[self.src(m)] != usize::MAX && new_obj[self.dst(m)] != usize::MAX)
            .collect();
        let mut new_mor = vec![usize::MAX; self.num_morphisms()];
        for (i, &m) in mors.iter().enumerate() {
            new_mor[m] = i;
        }
        let decls = mors
            .iter()
            .map(|&m| {
                (
                    self.mor_names[m].clone(),
                    new_obj[self.src(m)],
                    new_obj[self.dst(m)],
                )
            })
            .collect();
        let ids = kept.iter().map(|&o| new_mor[self.id(o)]).collect();
        let objects = kept.iter().map(|&o| self.objects[o].clone()).collect();
        Self::build(objects, decls, ids, |g, f| {
            Ok(new_mor[self.compose(mors[g], mors[f])])
        })
        .expect("full subcategory of a valid category")
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.ends.len()
    }

    pub fn object_name(&self, o: usize) -> &str {
        &self.objects[o]
    }

    pub fn morphism_name(&self, m: usize) -> &str {
        &self.mor_names[m]
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }

    pub fn object_by_name(&self, name: &str) -> Option<usize> {
        self.object_index.get(name).copied()
    }

    pub fn morphism_by_name(&self, name: &str) -> Option<usize> {
        self.mor_index.get(name).copied()
    }

    pub fn src(&self, m: usize) -> usize {
        self.ends[m].0
    }

    pub fn dst(&self, m: usize) -> usize {
        self.ends[m].1
    }

    pub fn id(&self, o: usize) -> usize {
        self.identity[o]
    }

    pub fn is_identity(&self, m: usize) -> bool {
        self.is_identity[m]
    }

    /// Morphisms `a -> b` in declaration order.
    pub fn hom(&self, a: usize, b: usize) -> &[usize] {
        let list = &self.out[a];
        let lo = list.partition_point(|&m| self.ends[m].1 < b);
        let hi = list.partition_point(|&m| self.ends[m].1 <= b);
        &list[lo..hi]
    }

    /// Morphisms out of `a`, grouped by target.
    pub fn out(&self, a: usize) -> &[usize] {
        &self.out[a]
    }

    /// `g ∘ f`; panics unless composable.
    pub fn compose(&self, g: usize, f: usize) -> usize {
        self.try_compose(g, f)
            .expect("composing non-composable morphisms")
    }

    pub fn try_compose(&self, g: usize, f: usize) -> Option<usize> {
        if self.ends[f].1 != self.ends[g].0 {
            return None;
        }
        Some(self.comp[f][self.pos_in_out[g]] as usize)
    }

    /// Composite of morphisms listed in application order.
    pub fn compose_path(&self, path: &[usize]) -> Option<usize> {
        let (first, rest) = path.split_first()?;
        rest.iter()
            .try_fold(*first, |acc, &g| self.try_compose(g, acc))
    }

    pub fn inverse(&self, m: usize) -> Option<usize> {
        self.inverse[m]
    }

    pub fn is_iso(&self, m: usize) -> bool {
        self.inverse[m].is_some()
    }

    fn search_inverse(&self, m: usize) -> Option<usize> {
        let (s, d) = self.ends[m];
        self.hom(d, s).iter().copied().find(|&n| {
            self.compose(n, m) == self.identity[s] && self.compose(m, n) == self.identity[d]
        })
    }

    /// First isomorphism `a -> b` in declaration order.
    pub fn find_iso(&self, a: usize, b: usize) -> Option<usize> {
        self.hom(a, b).iter().copied().find(|&m| self.is_iso(m))
    }

    /// Is every morphism invertible?
    pub fn is_groupoid(&self) -> bool {
        self.inverse.iter().all(Option::is_some)
    }

    /// Connected as an undirected graph (the empty category is not connected).
    pub fn is_connected(&self) -> bool {
        let n = self.num_objects();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(o) = stack.pop() {
            for m in 0..self.num_morphisms() {
                let (s, d) = self.ends[m];
                for (a, b) in [(s, d), (d, s)] {
                    if a == o && !seen[b] {
                        seen[b] = true;
                        stack.push(b);
                    }
                }
            }
        }
        seen.into_iter().all(|b| b)
    }

    /// Is the category a preorder (at most one morphism between two objects)?
    pub fn is_preorder(&self) -> bool {
        (0..self.num_objects()).all(|a| (0..self.num_objects()).all(|b| self.hom(a, b).len() <= 1))
    }
}
