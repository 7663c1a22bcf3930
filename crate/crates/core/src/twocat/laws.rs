use std::collections::HashMap;

use super::data::{TableName, TwoCategoryData};
use super::report::{Law, LawViolation, StructuralError, ValidationReport};
use super::{Arrow, Cell, Obj, TwoCategory};
use crate::table::Table;

/// Index-resolved presentation whose tables are known to be total on composable pairs,
/// but whose values have not yet been checked against the laws.
pub(super) struct Skeleton<'a> {
    data: &'a TwoCategoryData,
    object_index: HashMap<String, usize>,
    arrow_index: HashMap<String, usize>,
    cell_index: HashMap<String, usize>,
    arrows: Vec<(usize, usize)>,
    id_arrow: Vec<usize>,
    cells: Vec<(usize, usize)>,
    id_cell: Vec<usize>,
    comp1: Table,
    vcomp: Table,
    wl: Table,
    wr: Table,
    inverse: Vec<Option<usize>>,
}

fn index_ids<'s>(
    kind: &'static str,
    ids: impl Iterator<Item = &'s String>,
) -> Result<HashMap<String, usize>, StructuralError> {
    let mut map = HashMap::new();
    for (i, id) in ids.enumerate() {
        if map.insert(id.clone(), i).is_some() {
            return Err(StructuralError::DuplicateId {
                kind,
                id: id.clone(),
            });
        }
    }
    Ok(map)
}

fn lookup(
    map: &HashMap<String, usize>,
    kind: &'static str,
    id: &str,
    context: impl FnOnce() -> String,
) -> Result<usize, StructuralError> {
    map.get(id)
        .copied()
        .ok_or_else(|| StructuralError::UnknownId {
            context: context(),
            kind,
            id: id.to_string(),
        })
}

impl<'a> Skeleton<'a> {
    pub(super) fn parse(data: &'a TwoCategoryData) -> Result<Self, StructuralError> {
        let object_index = index_ids("object", data.objects.iter())?;
        let arrow_index = index_ids("1-cell", data.one_cells.iter().map(|c| &c.id))?;
        let cell_index = index_ids("2-cell", data.two_cells.iter().map(|c| &c.id))?;
        let n0 = data.objects.len();

        let mut arrows = Vec::with_capacity(data.one_cells.len());
        let mut id_arrow: Vec<Option<usize>> = vec![None; n0];
        for (i, decl) in data.one_cells.iter().enumerate() {
            let ctx = || format!("1-cell `{}`", decl.id);
            let s = lookup(&object_index, "object", &decl.src, ctx)?;
            let d = lookup(&object_index, "object", &decl.dst, ctx)?;
            if decl.identity {
                if s != d {
                    return Err(StructuralError::IdentityShape {
                        id: decl.id.clone(),
                    });
                }
                if id_arrow[s].replace(i).is_some() {
                    return Err(StructuralError::DuplicateIdentityArrow {
                        object: decl.src.clone(),
                    });
                }
            }
            arrows.push((s, d));
        }
        let id_arrow = id_arrow
            .into_iter()
            .enumerate()
            .map(|(o, a)| {
                a.ok_or_else(|| StructuralError::MissingIdentityArrow {
                    object: data.objects[o].clone(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;

        let n1 = arrows.len();
        let mut cells = Vec::with_capacity(data.two_cells.len());
        let mut id_cell: Vec<Option<usize>> = vec![None; n1];
        for (i, decl) in data.two_cells.iter().enumerate() {
            let ctx = || format!("2-cell `{}`", decl.id);
            let s = lookup(&arrow_index, "1-cell", &decl.src, ctx)?;
            let d = lookup(&arrow_index, "1-cell", &decl.dst, ctx)?;
            if arrows[s] != arrows[d] {
                return Err(StructuralError::NotParallel {
                    cell: decl.id.clone(),
                    src: decl.src.clone(),
                    dst: decl.dst.clone(),
                });
            }
            if decl.identity {
                if s != d {
                    return Err(StructuralError::IdentityShape {
                        id: decl.id.clone(),
                    });
                }
                if id_cell[s].replace(i).is_some() {
                    return Err(StructuralError::DuplicateIdentityCell {
                        arrow: decl.src.clone(),
                    });
                }
            }
            cells.push((s, d));
        }
        let id_cell = id_cell
            .into_iter()
            .enumerate()
            .map(|(a, c)| {
                c.ok_or_else(|| StructuralError::MissingIdentityCell {
                    arrow: data.one_cells[a].id.clone(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let n2 = cells.len();

        // Every table: resolve ids, reject non-composable and duplicate keys, then demand totality.
        let comp1 = fill_table(
            TableName::Comp1,
            &data.comp1,
            (n1, &arrow_index, "1-cell"),
            (n1, &arrow_index, "1-cell"),
            (&arrow_index, "1-cell"),
            |g, f| arrows[f].1 == arrows[g].0,
        )?;
        let vcomp = fill_table(
            TableName::Vcomp,
            &data.vcomp,
            (n2, &cell_index, "2-cell"),
            (n2, &cell_index, "2-cell"),
            (&cell_index, "2-cell"),
            |b, a| cells[a].1 == cells[b].0,
        )?;
        let wl = fill_table(
            TableName::WhiskerLeft,
            &data.whisker_left,
            (n1, &arrow_index, "1-cell"),
            (n2, &cell_index, "2-cell"),
            (&cell_index, "2-cell"),
            |h, a| arrows[cells[a].0].1 == arrows[h].0,
        )?;
        let wr = fill_table(
            TableName::WhiskerRight,
            &data.whisker_right,
            (n2, &cell_index, "2-cell"),
            (n1, &arrow_index, "1-cell"),
            (&cell_index, "2-cell"),
            |a, f| arrows[f].1 == arrows[cells[a].0].0,
        )?;

        let mut inverse = vec![None; n2];
        for row in &data.inverses {
            let ctx = || format!("inverses entry ({}, {})", row[0], row[1]);
            let a = lookup(&cell_index, "2-cell", &row[0], ctx)?;
            let b = lookup(&cell_index, "2-cell", &row[1], ctx)?;
            if inverse[a].replace(b).is_some() {
                return Err(StructuralError::DuplicateEntry {
                    table: TableName::Inverses,
                    left: row[0].clone(),
                    right: row[1].clone(),
                });
            }
        }

        Ok(Skeleton {
            data,
            object_index,
            arrow_index,
            cell_index,
            arrows,
            id_arrow,
            cells,
            id_cell,
            comp1,
            vcomp,
            wl,
            wr,
            inverse,
        })
    }

    fn an(&self, a: usize) -> String {
        self.data.one_cells[a].id.clone()
    }

    fn cn(&self, c: usize) -> String {
        self.data.two_cells[c].id.clone()
    }

    /// Checks all laws, stopping once `limit` violations have been collected.
    pub(super) fn check(&self, limit: usize) -> ValidationReport {
        let mut out = Vec::new();
        let steps: [fn(&Self, &mut Vec<LawViolation>, usize); 5] = [
            Self::check_comp1,
            Self::check_vcomp,
            Self::check_whiskers,
            Self::check_interchange,
            Self::check_inverses,
        ];
        for step in steps {
            step(self, &mut out, limit);
            if out.len() >= limit {
                out.truncate(limit);
                break;
            }
        }
        ValidationReport { violations: out }
    }

    fn check_comp1(&self, out: &mut Vec<LawViolation>, limit: usize) {
        let n1 = self.arrows.len();
        let c = |g: usize, f: usize| self.comp1.get(g, f);
        // Boundaries first: later laws only make sense on well-typed values.
        for g in 0..n1 {
            for f in 0..n1 {
                if let Some(gf) = c(g, f) {
                    if self.arrows[gf] != (self.arrows[f].0, self.arrows[g].1) {
                        out.push(viol(
                            Law::Comp1Boundary,
                            [self.an(g), self.an(f), self.an(gf)],
                        ));
                    }
                }
            }
        }
        if out.len() >= limit {
            return;
        }
        for f in 0..n1 {
            let (s, d) = self.arrows[f];
            if c(self.id_arrow[d], f) != Some(f) || c(f, self.id_arrow[s]) != Some(f) {
                out.push(viol(Law::Comp1Unit, [self.an(f)]));
                if out.len() >= limit {
                    return;
                }
            }
        }
        for f in 0..n1 {
            for g in 0..n1 {
                let Some(gf) = c(g, f) else { continue };
                for h in 0..n1 {
                    let Some(hg) = c(h, g) else { continue };
                    let lhs = c(hg, f);
                    let rhs = c(h, gf);
                    if lhs.is_none() || lhs != rhs {
                        out.push(viol(Law::Comp1Assoc, [self.an(h), self.an(g), self.an(f)]));
                        if out.len() >= limit {
                            return;
                        }
                    }
                }
            }
        }
    }

    fn check_vcomp(&self, out: &mut Vec<LawViolation>, limit: usize) {
        let n2 = self.cells.len();
        let v = |b: usize, a: usize| self.vcomp.get(b, a);
        for a in 0..n2 {
            for b in 0..n2 {
                if let Some(ba) = v(b, a) {
                    if self.cells[ba] != (self.cells[a].0, self.cells[b].1) {
                        out.push(viol(
                            Law::VcompBoundary,
                            [self.cn(b), self.cn(a), self.cn(ba)],
                        ));
                    }
                }
            }
        }
        if out.len() >= limit {
            return;
        }
        for a in 0..n2 {
            let (s, d) = self.cells[a];
            if v(self.id_cell[d], a) != Some(a) || v(a, self.id_cell[s]) != Some(a) {
                out.push(viol(Law::VcompUnit, [self.cn(a)]));
                if out.len() >= limit {
                    return;
                }
            }
        }
        let by_src = self.cells_by_src();
        for a in 0..n2 {
            for &b in &by_src[self.cells[a].1] {
                let Some(ba) = v(b, a) else { continue };
                for &g in &by_src[self.cells[b].1] {
                    let Some(gb) = v(g, b) else { continue };
                    let lhs = v(gb, a);
                    if lhs.is_none() || lhs != v(g, ba) {
                        out.push(viol(Law::VcompAssoc, [self.cn(g), self.cn(b), self.cn(a)]));
                        if out.len() >= limit {
                            return;
                        }
                    }
                }
            }
        }
    }

    fn cells_by_src(&self) -> Vec<Vec<usize>> {
        let mut by_src = vec![Vec::new(); self.arrows.len()];
        for (i, &(s, _)) in self.cells.iter().enumerate() {
            by_src[s].push(i);
        }
        by_src
    }

    fn check_whiskers(&self, out: &mut Vec<LawViolation>, limit: usize) {
        let n1 = self.arrows.len();
        let n2 = self.cells.len();
        let c = |g: usize, f: usize| self.comp1.get(g, f);
        let v = |b: usize, a: usize| self.vcomp.get(b, a);
        let wl = |h: usize, a: usize| self.wl.get(h, a);
        let wr = |a: usize, f: usize| self.wr.get(a, f);

        for h in 0..n1 {
            for a in 0..n2 {
                let Some(ha) = wl(h, a) else { continue };
                let (f, g) = self.cells[a];
                let want = (c(h, f), c(h, g));
                if want.0.is_none() || want != (Some(self.cells[ha].0), Some(self.cells[ha].1)) {
                    out.push(viol(
                        Law::WhiskerBoundary,
                        [self.an(h), self.cn(a), self.cn(ha)],
                    ));
                }
            }
        }
        for a in 0..n2 {
            for k in 0..n1 {
                let Some(ak) = wr(a, k) else { continue };
                let (f, g) = self.cells[a];
                let want = (c(f, k), c(g, k));
                if want.0.is_none() || want != (Some(self.cells[ak].0), Some(self.cells[ak].1)) {
                    out.push(viol(
                        Law::WhiskerBoundary,
                        [self.cn(a), self.an(k), self.cn(ak)],
                    ));
                }
            }
        }
        if out.len() >= limit {
            return;
        }

        // Identities and units.
        for f in 0..n1 {
            let idf = self.id_cell[f];
            for h in 0..n1 {
                if let Some(hid) = wl(h, idf) {
                    if c(h, f).map(|hf| self.id_cell[hf]) != Some(hid) {
                        out.push(viol(Law::WhiskerIdentity, [self.an(h), self.cn(idf)]));
                    }
                }
                if let Some(idh) = wr(idf, h) {
                    if c(f, h).map(|fh| self.id_cell[fh]) != Some(idh) {
                        out.push(viol(Law::WhiskerIdentity, [self.cn(idf), self.an(h)]));
                    }
                }
            }
            if out.len() >= limit {
                return;
            }
        }
        for a in 0..n2 {
            let (f, _) = self.cells[a];
            let (s, d) = self.arrows[f];
            if wl(self.id_arrow[d], a) != Some(a) || wr(a, self.id_arrow[s]) != Some(a) {
                out.push(viol(Law::WhiskerUnit, [self.cn(a)]));
                if out.len() >= limit {
                    return;
                }
            }
        }

        // Functoriality in the 2-cell argument.
        let by_src = self.cells_by_src();
        for a in 0..n2 {
            for &b in &by_src[self.cells[a].1] {
                let Some(ba) = v(b, a) else { continue };
                for h in 0..n1 {
                    if let (Some(hb), Some(ha), Some(hba)) = (wl(h, b), wl(h, a), wl(h, ba)) {
                        if v(hb, ha) != Some(hba) {
                            out.push(viol(
                                Law::WhiskerVcomp,
                                [self.an(h), self.cn(b), self.cn(a)],
                            ));
                        }
                    }
                    if let (Some(bh), Some(ah), Some(bah)) = (wr(b, h), wr(a, h), wr(ba, h)) {
                        if v(bh, ah) != Some(bah) {
                            out.push(viol(
                                Law::WhiskerVcomp,
                                [self.cn(b), self.cn(a), self.an(h)],
                            ));
                        }
                    }
                }
                if out.len() >= limit {
                    return;
                }
            }
        }

        // Compatibility with comp1.
        for a in 0..n2 {
            for h in 0..n1 {
                if let Some(ha) = wl(h, a) {
                    for k in 0..n1 {
                        if let (Some(kha), Some(kh)) = (wl(k, ha), c(k, h)) {
                            if wl(kh, a) != Some(kha) {
                                out.push(viol(
                                    Law::WhiskerAssoc,
                                    [self.an(k), self.an(h), self.cn(a)],
                                ));
                            }
                        }
                        if let Some(hak) = wr(ha, k) {
                            if wr(a, k).and_then(|ak| wl(h, ak)) != Some(hak) {
                                out.push(viol(
                                    Law::WhiskerMixed,
                                    [self.an(h), self.cn(a), self.an(k)],
                                ));
                            }
                        }
                    }
                }
                if let Some(ah) = wr(a, h) {
                    for k in 0..n1 {
                        if let (Some(ahk), Some(hk)) = (wr(ah, k), c(h, k)) {
                            if wr(a, hk) != Some(ahk) {
                                out.push(viol(
                                    Law::WhiskerAssoc,
                                    [self.cn(a), self.an(h), self.an(k)],
                                ));
                            }
                        }
                    }
                }
            }
            if out.len() >= limit {
                return;
            }
        }
    }

    fn check_interchange(&self, out: &mut Vec<LawViolation>, limit: usize) {
        let n2 = self.cells.len();
        let v = |b: usize, a: usize| self.vcomp.get(b, a);
        let mut by_src_obj = vec![Vec::new(); self.data.objects.len()];
        for (i, &(f, _)) in self.cells.iter().enumerate() {
            by_src_obj[self.arrows[f].0].push(i);
        }
        // alpha: f => f' on A -> B, beta: g => g' on B -> C.
        for a in 0..n2 {
            let (f, f2) = self.cells[a];
            for &b in &by_src_obj[self.arrows[f].1] {
                let (g, g2) = self.cells[b];
                let one = (self.wl.get(g2, a), self.wr.get(b, f));
                let two = (self.wr.get(b, f2), self.wl.get(g, a));
                let lhs = match one {
                    (Some(x), Some(y)) => v(x, y),
                    _ => None,
                };
                let rhs = match two {
                    (Some(x), Some(y)) => v(x, y),
                    _ => None,
                };
                if lhs.is_none() || lhs != rhs {
                    out.push(viol(Law::Interchange, [self.cn(b), self.cn(a)]));
                    if out.len() >= limit {
                        return;
                    }
                }
            }
        }
    }

    fn check_inverses(&self, out: &mut Vec<LawViolation>, limit: usize) {
        for (a, inv) in self.inverse.iter().enumerate() {
            let Some(b) = *inv else { continue };
            let (s, d) = self.cells[a];
            if self.cells[b] != (d, s) {
                out.push(viol(Law::InverseBoundary, [self.cn(a), self.cn(b)]));
            } else {
                if let Some(back) = self.inverse[b] {
                    if back != a {
                        out.push(viol(Law::InverseInvolution, [self.cn(a), self.cn(b)]));
                    }
                }
                if self.vcomp.get(b, a) != Some(self.id_cell[s])
                    || self.vcomp.get(a, b) != Some(self.id_cell[d])
                {
                    out.push(viol(Law::InverseLaw, [self.cn(a), self.cn(b)]));
                }
            }
            if out.len() >= limit {
                return;
            }
        }
    }

    pub(super) fn finish(self, data: TwoCategoryData) -> TwoCategory {
        let n0 = data.objects.len();
        let n1 = self.arrows.len();
        let n2 = self.cells.len();
        let mut arrows_between = vec![Vec::new(); n0 * n0];
        let mut arrows_from = vec![Vec::new(); n0];
        for (i, &(s, d)) in self.arrows.iter().enumerate() {
            arrows_between[s * n0 + d].push(Arrow(i));
            arrows_from[s].push(Arrow(i));
        }
        let mut cells_between = vec![Vec::new(); n1 * n1];
        for (i, &(s, d)) in self.cells.iter().enumerate() {
            cells_between[s * n1 + d].push(Cell(i));
        }
        let mut is_id_arrow = vec![false; n1];
        for &a in &self.id_arrow {
            is_id_arrow[a] = true;
        }
        let mut is_id_cell = vec![false; n2];
        for &c in &self.id_cell {
            is_id_cell[c] = true;
        }
        let mut cat = TwoCategory {
            object_index: self.object_index,
            arrow_index: self.arrow_index,
            cell_index: self.cell_index,
            arrow_ends: self.arrows.iter().map(|&(s, d)| (Obj(s), Obj(d))).collect(),
            id_arrow: self.id_arrow.iter().map(|&a| Arrow(a)).collect(),
            is_id_arrow,
            cell_ends: self
                .cells
                .iter()
                .map(|&(s, d)| (Arrow(s), Arrow(d)))
                .collect(),
            id_cell: self.id_cell.iter().map(|&c| Cell(c)).collect(),
            is_id_cell,
            comp1: self.comp1,
            vcomp: self.vcomp,
            wl: self.wl,
            wr: self.wr,
            declared_inverse: self.inverse.iter().map(|i| i.map(Cell)).collect(),
            inverse: Vec::new(),
            arrows_between,
            arrows_from,
            cells_between,
            data,
        };
        cat.inverse = (0..n2)
            .map(|c| cat.declared_inverse[c].or_else(|| cat.search_inverse(Cell(c))))
            .collect();
        cat
    }
}

fn viol<const N: usize>(law: Law, tuple: [String; N]) -> LawViolation {
    LawViolation {
        law,
        tuple: tuple.into(),
    }
}

type Axis<'m> = (usize, &'m HashMap<String, usize>, &'static str);

fn fill_table(
    table: TableName,
    rows: &[[String; 3]],
    left: Axis<'_>,
    right: Axis<'_>,
    value: (&HashMap<String, usize>, &'static str),
    composable: impl Fn(usize, usize) -> bool,
) -> Result<Table, StructuralError> {
    let mut t = Table::new(left.0, right.0);
    for row in rows {
        let ctx = || format!("{} entry ({}, {})", table, row[0], row[1]);
        let l = lookup(left.1, left.2, &row[0], ctx)?;
        let r = lookup(right.1, right.2, &row[1], ctx)?;
        let x = lookup(value.0, value.1, &row[2], ctx)?;
        if !composable(l, r) {
            return Err(StructuralError::NonComposableKey {
                table,
                left: row[0].clone(),
                right: row[1].clone(),
            });
        }
        if t.is_set(l, r) {
            return Err(StructuralError::DuplicateEntry {
                table,
                left: row[0].clone(),
                right: row[1].clone(),
            });
        }
        t.set(l, r, x);
    }
    let left_names = invert(left.1, left.0);
    let right_names = invert(right.1, right.0);
    for l in 0..left.0 {
        for r in 0..right.0 {
            if composable(l, r) && !t.is_set(l, r) {
                return Err(StructuralError::MissingEntry {
                    table,
                    left: left_names[l].clone(),
                    right: right_names[r].clone(),
                });
            }
        }
    }
    Ok(t)
}

fn invert(map: &HashMap<String, usize>, n: usize) -> Vec<String> {
    let mut names = vec![String::new(); n];
    for (k, &v) in map {
        names[v] = k.clone();
    }
    names
}
