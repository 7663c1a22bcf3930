//! A naive law checker working directly on the string tables of a presentation, and the
//! single-entry mutations used to probe the library's validators.

use std::collections::{BTreeMap, HashMap, HashSet};

use bicolim::fincat::{FiniteCategoryData, TwoFunctorData};
use bicolim::twocat::TwoCategoryData;

type Key<'a> = (&'a str, &'a str);

struct Tables<'a> {
    arrow: HashMap<&'a str, (&'a str, &'a str)>,
    arrow_ids: Vec<&'a str>,
    id_arrow: HashMap<&'a str, &'a str>,
    cell: HashMap<&'a str, (&'a str, &'a str)>,
    cell_ids: Vec<&'a str>,
    id_cell: HashMap<&'a str, &'a str>,
    comp: HashMap<Key<'a>, &'a str>,
    vc: HashMap<Key<'a>, &'a str>,
    wl: HashMap<Key<'a>, &'a str>,
    wr: HashMap<Key<'a>, &'a str>,
    inv: HashMap<&'a str, &'a str>,
}

fn unique<'a>(ids: impl Iterator<Item = &'a str>) -> Option<Vec<&'a str>> {
    let v: Vec<&str> = ids.collect();
    let set: HashSet<&str> = v.iter().copied().collect();
    (set.len() == v.len()).then_some(v)
}

/// Reads rows into a map, refusing unknown ids, non-composable keys, duplicates and
/// missing composable pairs.
fn table<'a>(
    rows: &'a [[String; 3]],
    left: &[&'a str],
    right: &[&'a str],
    results: &HashSet<&'a str>,
    composable: impl Fn(&str, &str) -> bool,
) -> Option<HashMap<Key<'a>, &'a str>> {
    let (ls, rs): (HashSet<&str>, HashSet<&str>) = (
        left.iter().copied().collect(),
        right.iter().copied().collect(),
    );
    let mut out = HashMap::new();
    for [l, r, x] in rows {
        if !ls.contains(l.as_str()) || !rs.contains(r.as_str()) || !results.contains(x.as_str()) {
            return None;
        }
        if !composable(l, r) || out.insert((l.as_str(), r.as_str()), x.as_str()).is_some() {
            return None;
        }
    }
    let expected = left
        .iter()
        .map(|l| right.iter().filter(|r| composable(l, r)).count())
        .sum::<usize>();
    (expected == out.len()).then_some(out)
}

impl<'a> Tables<'a> {
    fn read(d: &'a TwoCategoryData) -> Option<Self> {
        let objects: HashSet<&str> = unique(d.objects.iter().map(String::as_str))?
            .into_iter()
            .collect();
        let arrow_ids = unique(d.one_cells.iter().map(|c| c.id.as_str()))?;
        let mut arrow = HashMap::new();
        let mut id_arrow = HashMap::new();
        for c in &d.one_cells {
            if !objects.contains(c.src.as_str()) || !objects.contains(c.dst.as_str()) {
                return None;
            }
            if c.identity
                && (c.src != c.dst || id_arrow.insert(c.src.as_str(), c.id.as_str()).is_some())
            {
                return None;
            }
            arrow.insert(c.id.as_str(), (c.src.as_str(), c.dst.as_str()));
        }
        if id_arrow.len() != objects.len() {
            return None;
        }
        let cell_ids = unique(d.two_cells.iter().map(|c| c.id.as_str()))?;
        let mut cell = HashMap::new();
        let mut id_cell = HashMap::new();
        for c in &d.two_cells {
            let (s, t) = (arrow.get(c.src.as_str())?, arrow.get(c.dst.as_str())?);
            if s != t {
                return None;
            }
            if c.identity
                && (c.src != c.dst || id_cell.insert(c.src.as_str(), c.id.as_str()).is_some())
            {
                return None;
            }
            cell.insert(c.id.as_str(), (c.src.as_str(), c.dst.as_str()));
        }
        if id_cell.len() != arrow.len() {
            return None;
        }
        let arrow_set: HashSet<&str> = arrow_ids.iter().copied().collect();
        let cell_set: HashSet<&str> = cell_ids.iter().copied().collect();
        let comp = table(&d.comp1, &arrow_ids, &arrow_ids, &arrow_set, |g, f| {
            arrow[f].1 == arrow[g].0
        })?;
        let vc = table(&d.vcomp, &cell_ids, &cell_ids, &cell_set, |b, a| {
            cell[a].1 == cell[b].0
        })?;
        let wl = table(&d.whisker_left, &arrow_ids, &cell_ids, &cell_set, |h, a| {
            arrow[cell[a].0].1 == arrow[h].0
        })?;
        let wr = table(
            &d.whisker_right,
            &cell_ids,
            &arrow_ids,
            &cell_set,
            |a, f| arrow[f].1 == arrow[cell[a].0].0,
        )?;
        let mut inv = HashMap::new();
        for [a, b] in &d.inverses {
            if !cell_set.contains(a.as_str()) || !cell_set.contains(b.as_str()) {
                return None;
            }
            if inv.insert(a.as_str(), b.as_str()).is_some() {
                return None;
            }
        }
        Some(Tables {
            arrow,
            arrow_ids,
            id_arrow,
            cell,
            cell_ids,
            id_cell,
            comp,
            vc,
            wl,
            wr,
            inv,
        })
    }

    fn c(&self, g: &'a str, f: &'a str) -> Option<&'a str> {
        self.comp.get(&(g, f)).copied()
    }
    fn v(&self, b: &'a str, a: &'a str) -> Option<&'a str> {
        self.vc.get(&(b, a)).copied()
    }
    fn l(&self, h: &'a str, a: &'a str) -> Option<&'a str> {
        self.wl.get(&(h, a)).copied()
    }
    fn r(&self, a: &'a str, f: &'a str) -> Option<&'a str> {
        self.wr.get(&(a, f)).copied()
    }

    fn comp1_laws(&self) -> Option<bool> {
        for (&(g, f), &gf) in &self.comp {
            if self.arrow[gf] != (self.arrow[f].0, self.arrow[g].1) {
                return Some(false);
            }
        }
        for &f in &self.arrow_ids {
            let (s, t) = self.arrow[f];
            if self.c(self.id_arrow[t], f)? != f || self.c(f, self.id_arrow[s])? != f {
                return Some(false);
            }
        }
        for &f in &self.arrow_ids {
            for &g in self
                .arrow_ids
                .iter()
                .filter(|g| self.arrow[**g].0 == self.arrow[f].1)
            {
                for &h in self
                    .arrow_ids
                    .iter()
                    .filter(|h| self.arrow[**h].0 == self.arrow[g].1)
                {
                    if self.c(h, self.c(g, f)?)? != self.c(self.c(h, g)?, f)? {
                        return Some(false);
                    }
                }
            }
        }
        Some(true)
    }

    fn vcomp_laws(&self) -> Option<bool> {
        for (&(b, a), &ba) in &self.vc {
            if self.cell[ba] != (self.cell[a].0, self.cell[b].1) {
                return Some(false);
            }
        }
        for &a in &self.cell_ids {
            let (s, t) = self.cell[a];
            if self.v(self.id_cell[t], a)? != a || self.v(a, self.id_cell[s])? != a {
                return Some(false);
            }
        }
        for &a in &self.cell_ids {
            for &b in self
                .cell_ids
                .iter()
                .filter(|b| self.cell[**b].0 == self.cell[a].1)
            {
                for &c in self
                    .cell_ids
                    .iter()
                    .filter(|c| self.cell[**c].0 == self.cell[b].1)
                {
                    if self.v(c, self.v(b, a)?)? != self.v(self.v(c, b)?, a)? {
                        return Some(false);
                    }
                }
            }
        }
        Some(true)
    }

    fn whisker_laws(&self) -> Option<bool> {
        for (&(h, a), &ha) in &self.wl {
            let (s, t) = self.cell[a];
            if self.cell[ha] != (self.c(h, s)?, self.c(h, t)?) {
                return Some(false);
            }
        }
        for (&(a, f), &af) in &self.wr {
            let (s, t) = self.cell[a];
            if self.cell[af] != (self.c(s, f)?, self.c(t, f)?) {
                return Some(false);
            }
        }
        let objects_of = |a: &str| self.arrow[self.cell[a].0];
        for &a in &self.cell_ids {
            let (from, to) = objects_of(a);
            if self.l(self.id_arrow[to], a)? != a || self.r(a, self.id_arrow[from])? != a {
                return Some(false);
            }
            let after: Vec<&str> = self
                .arrow_ids
                .iter()
                .copied()
                .filter(|h| self.arrow[*h].0 == to)
                .collect();
            let before: Vec<&str> = self
                .arrow_ids
                .iter()
                .copied()
                .filter(|f| self.arrow[*f].1 == from)
                .collect();
            for &b in self
                .cell_ids
                .iter()
                .filter(|b| self.cell[**b].0 == self.cell[a].1)
            {
                let ba = self.v(b, a)?;
                for &h in &after {
                    if self.l(h, ba)? != self.v(self.l(h, b)?, self.l(h, a)?)? {
                        return Some(false);
                    }
                }
                for &f in &before {
                    if self.r(ba, f)? != self.v(self.r(b, f)?, self.r(a, f)?)? {
                        return Some(false);
                    }
                }
            }
            for &h in &after {
                for &k in self
                    .arrow_ids
                    .iter()
                    .filter(|k| self.arrow[**k].0 == self.arrow[h].1)
                {
                    if self.l(k, self.l(h, a)?)? != self.l(self.c(k, h)?, a)? {
                        return Some(false);
                    }
                }
                for &f in &before {
                    if self.r(self.l(h, a)?, f)? != self.l(h, self.r(a, f)?)? {
                        return Some(false);
                    }
                }
            }
            for &f in &before {
                for &k in self
                    .arrow_ids
                    .iter()
                    .filter(|k| self.arrow[**k].1 == self.arrow[f].0)
                {
                    if self.r(self.r(a, f)?, k)? != self.r(a, self.c(f, k)?)? {
                        return Some(false);
                    }
                }
            }
        }
        for &f in &self.arrow_ids {
            let idf = self.id_cell[f];
            for &h in self
                .arrow_ids
                .iter()
                .filter(|h| self.arrow[**h].0 == self.arrow[f].1)
            {
                if self.l(h, idf)? != self.id_cell[self.c(h, f)?] {
                    return Some(false);
                }
            }
            for &k in self
                .arrow_ids
                .iter()
                .filter(|k| self.arrow[**k].1 == self.arrow[f].0)
            {
                if self.r(idf, k)? != self.id_cell[self.c(f, k)?] {
                    return Some(false);
                }
            }
        }
        Some(true)
    }

    fn interchange(&self) -> Option<bool> {
        for &a in &self.cell_ids {
            let (f, f2) = self.cell[a];
            let mid = self.arrow[f].1;
            for &b in self
                .cell_ids
                .iter()
                .filter(|b| self.arrow[self.cell[**b].0].0 == mid)
            {
                let (g, g2) = self.cell[b];
                let lhs = self.v(self.l(g2, a)?, self.r(b, f)?)?;
                let rhs = self.v(self.r(b, f2)?, self.l(g, a)?)?;
                if lhs != rhs {
                    return Some(false);
                }
            }
        }
        Some(true)
    }

    fn inverse_laws(&self) -> Option<bool> {
        for (&a, &b) in &self.inv {
            let (s, t) = self.cell[a];
            if self.cell[b] != (t, s) {
                return Some(false);
            }
            if self.inv.get(b).is_some_and(|back| *back != a) {
                return Some(false);
            }
            if self.v(b, a)? != self.id_cell[s] || self.v(a, b)? != self.id_cell[t] {
                return Some(false);
            }
        }
        Some(true)
    }

    fn lawful(&self) -> bool {
        [
            self.comp1_laws(),
            self.vcomp_laws(),
            self.whisker_laws(),
            self.interchange(),
            self.inverse_laws(),
        ]
        .into_iter()
        .all(|r| r == Some(true))
    }
}

/// Whether the presentation is well formed and satisfies every strict 2-category law.
pub fn lawful(d: &TwoCategoryData) -> bool {
    Tables::read(d).is_some_and(|t| t.lawful())
}

/// One altered copy of a presentation.
pub struct Mutation<T> {
    pub label: String,
    pub data: T,
}

fn next_other<'a>(
    pool: &[&'a str],
    current: &str,
    prefer: impl Fn(&str) -> bool,
) -> Option<&'a str> {
    let start = pool.iter().position(|x| *x == current).map_or(0, |i| i + 1);
    let rotated = pool[start..]
        .iter()
        .chain(&pool[..start])
        .copied()
        .filter(|x| *x != current);
    let all: Vec<&str> = rotated.collect();
    all.iter()
        .copied()
        .find(|x| prefer(x))
        .or(all.first().copied())
}

/// For every table row, the copy whose result is replaced by the next id of the same
/// kind with the same boundary (or the next id at all when none has it), the copy whose
/// result is replaced by the next id regardless of boundary, and the copy without
/// that row. Inverse declarations get their second entry replaced.
pub fn two_category_mutations(d: &TwoCategoryData) -> Vec<Mutation<TwoCategoryData>> {
    let arrows: Vec<&str> = d.one_cells.iter().map(|c| c.id.as_str()).collect();
    let cells: Vec<&str> = d.two_cells.iter().map(|c| c.id.as_str()).collect();
    let arrow_ends: &HashMap<&str, (&str, &str)> = &d
        .one_cells
        .iter()
        .map(|c| (c.id.as_str(), (c.src.as_str(), c.dst.as_str())))
        .collect();
    let cell_ends: &HashMap<&str, (&str, &str)> = &d
        .two_cells
        .iter()
        .map(|c| (c.id.as_str(), (c.src.as_str(), c.dst.as_str())))
        .collect();
    let mut out = Vec::new();
    type Pick = fn(&TwoCategoryData) -> &Vec<[String; 3]>;
    type PickMut = fn(&mut TwoCategoryData) -> &mut Vec<[String; 3]>;
    let tables: [(&str, Pick, PickMut, bool); 4] = [
        ("comp1", |d| &d.comp1, |d| &mut d.comp1, true),
        ("vcomp", |d| &d.vcomp, |d| &mut d.vcomp, false),
        (
            "whisker_left",
            |d| &d.whisker_left,
            |d| &mut d.whisker_left,
            false,
        ),
        (
            "whisker_right",
            |d| &d.whisker_right,
            |d| &mut d.whisker_right,
            false,
        ),
    ];
    for (name, pick, pick_mut, of_arrows) in tables {
        for (i, row) in pick(d).iter().enumerate() {
            let current = row[2].as_str();
            let (pool, same): (&[&str], Box<dyn Fn(&str) -> bool>) = if of_arrows {
                let ends = arrow_ends[current];
                (&arrows, Box::new(move |x: &str| arrow_ends[x] == ends))
            } else {
                let ends = cell_ends[current];
                (&cells, Box::new(move |x: &str| cell_ends[x] == ends))
            };
            let mut replacements: Vec<&str> = Vec::new();
            replacements.extend(next_other(pool, current, &same));
            replacements.extend(next_other(pool, current, |_| true));
            replacements.dedup();
            for r in replacements {
                let mut m = d.clone();
                pick_mut(&mut m)[i][2] = r.to_string();
                out.push(Mutation {
                    label: format!("{name}[{i}] result {current} -> {r}"),
                    data: m,
                });
            }
            let mut m = d.clone();
            pick_mut(&mut m).remove(i);
            out.push(Mutation {
                label: format!("{name}[{i}] removed"),
                data: m,
            });
        }
    }
    for (i, row) in d.inverses.iter().enumerate() {
        let current = row[1].as_str();
        let ends = cell_ends[current];
        if let Some(r) = next_other(&cells, current, |x| cell_ends[x] == ends) {
            let mut m = d.clone();
            m.inverses[i][1] = r.to_string();
            out.push(Mutation {
                label: format!("inverses[{i}] {current} -> {r}"),
                data: m,
            });
        }
    }
    out
}

/// A finite category read from its presentation, assumed valid.
struct Cat<'a> {
    objects: Vec<&'a str>,
    ends: HashMap<&'a str, (&'a str, &'a str)>,
    ids: HashMap<&'a str, &'a str>,
    comp: HashMap<Key<'a>, &'a str>,
}

impl<'a> Cat<'a> {
    /// Composites with an identity factor are implicit in the presentation.
    fn read(d: &'a FiniteCategoryData) -> Self {
        let ids: HashMap<&str, &str> = d
            .morphisms
            .iter()
            .filter(|m| m.identity)
            .map(|m| (m.src.as_str(), m.id.as_str()))
            .collect();
        let mut comp: HashMap<Key<'a>, &'a str> = d
            .comp
            .iter()
            .map(|[g, f, x]| ((g.as_str(), f.as_str()), x.as_str()))
            .collect();
        for m in &d.morphisms {
            let (s, t) = (m.src.as_str(), m.dst.as_str());
            if let (Some(&is), Some(&it)) = (ids.get(s), ids.get(t)) {
                comp.insert((it, m.id.as_str()), m.id.as_str());
                comp.insert((m.id.as_str(), is), m.id.as_str());
            }
        }
        Cat {
            objects: d.objects.iter().map(String::as_str).collect(),
            ends: d
                .morphisms
                .iter()
                .map(|m| (m.id.as_str(), (m.src.as_str(), m.dst.as_str())))
                .collect(),
            ids,
            comp,
        }
    }

    fn is_identity(&self, m: &str) -> bool {
        self.ids.get(self.ends[m].0) == Some(&m)
    }
}

/// Object and morphism maps of one functor, with omitted identities filled in.
type Maps<'a> = (HashMap<&'a str, &'a str>, HashMap<&'a str, &'a str>);

fn functor_maps<'a>(
    img: Option<&'a bicolim::fincat::FunctorImage>,
    identity: bool,
    c: &Cat<'a>,
    d: &Cat<'a>,
) -> Option<Maps<'a>> {
    let mut obj = HashMap::new();
    let mut mor = HashMap::new();
    match img {
        None if identity => {
            for &o in &c.objects {
                obj.insert(o, o);
            }
            for &m in c.ends.keys() {
                mor.insert(m, m);
            }
        }
        None => return None,
        Some(img) => {
            if img.objects.keys().any(|k| !c.objects.contains(&k.as_str()))
                || img
                    .morphisms
                    .keys()
                    .any(|k| !c.ends.contains_key(k.as_str()))
            {
                return None;
            }
            for &o in &c.objects {
                let y = img.objects.get(o)?.as_str();
                if !d.objects.contains(&y) {
                    return None;
                }
                obj.insert(o, y);
            }
            for &m in c.ends.keys() {
                let y = match img.morphisms.get(m) {
                    Some(y) => y.as_str(),
                    None if c.is_identity(m) => d.ids[obj[c.ends[m].0]],
                    None => return None,
                };
                if !d.ends.contains_key(y) {
                    return None;
                }
                mor.insert(m, y);
            }
        }
    }
    for (&m, &y) in &mor {
        let (s, t) = c.ends[m];
        if d.ends[y] != (obj[s], obj[t]) {
            return None;
        }
    }
    for &o in &c.objects {
        if mor[c.ids[o]] != d.ids[obj[o]] {
            return None;
        }
    }
    for (&(g, f), &gf) in &c.comp {
        if d.comp.get(&(mor[g], mor[f])) != Some(&mor[gf]) {
            return None;
        }
    }
    Some((obj, mor))
}

/// Whether `data` presents a strict 2-functor from `base` into the named categories:
/// every image is a functor, every 2-cell image is natural, and identities and all three
/// compositions are preserved.
pub fn functor_lawful(
    base: &TwoCategoryData,
    categories: &BTreeMap<String, FiniteCategoryData>,
    data: &TwoFunctorData,
) -> bool {
    functor_check(base, categories, data).unwrap_or(false)
}

fn functor_check(
    base: &TwoCategoryData,
    categories: &BTreeMap<String, FiniteCategoryData>,
    data: &TwoFunctorData,
) -> Option<bool> {
    let t = Tables::read(base)?;
    if data.on_objects.len() != base.objects.len()
        || data
            .on_one_cells
            .keys()
            .any(|k| !t.arrow.contains_key(k.as_str()))
        || data
            .on_two_cells
            .keys()
            .any(|k| !t.cell.contains_key(k.as_str()))
    {
        return Some(false);
    }
    let cats: HashMap<&str, Cat> = categories
        .iter()
        .map(|(k, v)| (k.as_str(), Cat::read(v)))
        .collect();
    let mut fib: HashMap<&str, &Cat> = HashMap::new();
    for o in &base.objects {
        fib.insert(o.as_str(), cats.get(data.on_objects.get(o)?.as_str())?);
    }
    let mut maps: HashMap<&str, Maps> = HashMap::new();
    for &u in &t.arrow_ids {
        let (a, b) = t.arrow[u];
        let identity = t.id_arrow[a] == u;
        maps.insert(
            u,
            functor_maps(data.on_one_cells.get(u), identity, fib[a], fib[b])?,
        );
    }
    for &a in t.id_arrow.keys() {
        let (obj, mor) = &maps[t.id_arrow[a]];
        if obj.iter().any(|(x, y)| x != y) || mor.iter().any(|(x, y)| x != y) {
            return Some(false);
        }
    }
    for (&(g, f), &gf) in &t.comp {
        let (og, mg) = &maps[g];
        let (of, mf) = &maps[f];
        let (ogf, mgf) = &maps[gf];
        if of.iter().any(|(x, y)| og[y] != ogf[x]) || mf.iter().any(|(m, y)| mg[y] != mgf[m]) {
            return Some(false);
        }
    }
    // Components of every 2-cell, by source object.
    let mut comps: HashMap<&str, HashMap<&str, &str>> = HashMap::new();
    for &al in &t.cell_ids {
        let (u, v) = t.cell[al];
        let (a, b) = t.arrow[u];
        let (fa, fb) = (fib[a], fib[b]);
        let given = data.on_two_cells.get(al);
        let mut c = HashMap::new();
        if let Some(g) = given {
            if g.keys().any(|k| !fa.objects.contains(&k.as_str())) {
                return Some(false);
            }
        }
        for &x in &fa.objects {
            let m = match given.and_then(|g| g.get(x)) {
                Some(m) => m.as_str(),
                None if t.id_cell[u] == al => fb.ids[maps[u].0[x]],
                None => return Some(false),
            };
            if fb.ends.get(m) != Some(&(maps[u].0[x], maps[v].0[x])) {
                return Some(false);
            }
            c.insert(x, m);
        }
        for (&m, &(s, d)) in &fa.ends {
            let lhs = fb.comp.get(&(maps[v].1[m], c[s]));
            let rhs = fb.comp.get(&(c[d], maps[u].1[m]));
            if lhs.is_none() || lhs != rhs {
                return Some(false);
            }
        }
        comps.insert(al, c);
    }
    for &u in &t.arrow_ids {
        let idc = t.id_cell[u];
        let fb = fib[t.arrow[u].1];
        if comps[idc].iter().any(|(_, m)| !fb.is_identity(m)) {
            return Some(false);
        }
    }
    for (&(b2, a2), &ba) in &t.vc {
        let fb = fib[t.arrow[t.cell[a2].0].1];
        for (&x, &m) in &comps[ba] {
            if fb.comp.get(&(comps[b2][x], comps[a2][x])) != Some(&m) {
                return Some(false);
            }
        }
    }
    for (&(h, a2), &ha) in &t.wl {
        for (&x, &m) in &comps[ha] {
            if maps[h].1[comps[a2][x]] != m {
                return Some(false);
            }
        }
    }
    for (&(a2, f), &af) in &t.wr {
        for (&x, &m) in &comps[af] {
            if comps[a2][maps[f].0[x]] != m {
                return Some(false);
            }
        }
    }
    Some(true)
}

/// For every explicit entry of the 2-functor presentation, the copy with that entry
/// replaced by the next id of the same kind in the target fibre.
pub fn functor_mutations(
    base: &TwoCategoryData,
    categories: &BTreeMap<String, FiniteCategoryData>,
    data: &TwoFunctorData,
) -> Vec<Mutation<TwoFunctorData>> {
    let arrow_dst = |u: &str| {
        base.one_cells
            .iter()
            .find(|c| c.id == u)
            .map(|c| c.dst.clone())
    };
    let cell_arrow = |a: &str| {
        base.two_cells
            .iter()
            .find(|c| c.id == a)
            .map(|c| c.src.clone())
    };
    let target = |object: Option<String>| {
        object
            .and_then(|o| data.on_objects.get(&o))
            .and_then(|name| categories.get(name))
    };
    let rotate =
        |pool: Vec<&str>, current: &str| next_other(&pool, current, |_| true).map(str::to_string);
    fn objects(c: &FiniteCategoryData) -> Vec<&str> {
        c.objects.iter().map(String::as_str).collect()
    }
    fn morphisms(c: &FiniteCategoryData) -> Vec<&str> {
        c.morphisms.iter().map(|m| m.id.as_str()).collect()
    }
    let mut out = Vec::new();
    for (u, img) in &data.on_one_cells {
        let Some(cat) = target(arrow_dst(u)) else {
            continue;
        };
        for (x, y) in &img.objects {
            if let Some(next) = rotate(objects(cat), y) {
                let mut m = data.clone();
                m.on_one_cells
                    .get_mut(u)
                    .unwrap()
                    .objects
                    .insert(x.clone(), next.clone());
                out.push(Mutation {
                    label: format!("on_one_cells[{u}] object {x}: {y} -> {next}"),
                    data: m,
                });
            }
        }
        for (x, y) in &img.morphisms {
            if let Some(next) = rotate(morphisms(cat), y) {
                let mut m = data.clone();
                m.on_one_cells
                    .get_mut(u)
                    .unwrap()
                    .morphisms
                    .insert(x.clone(), next.clone());
                out.push(Mutation {
                    label: format!("on_one_cells[{u}] morphism {x}: {y} -> {next}"),
                    data: m,
                });
            }
        }
    }
    for (al, comps) in &data.on_two_cells {
        let Some(cat) = target(cell_arrow(al).and_then(|u| arrow_dst(&u))) else {
            continue;
        };
        for (x, y) in comps {
            if let Some(next) = rotate(morphisms(cat), y) {
                let mut m = data.clone();
                m.on_two_cells
                    .get_mut(al)
                    .unwrap()
                    .insert(x.clone(), next.clone());
                out.push(Mutation {
                    label: format!("on_two_cells[{al}] at {x}: {y} -> {next}"),
                    data: m,
                });
            }
        }
    }
    out
}
