//! Finitely presented strict 2-categories.
//!
//! A [`TwoCategory`] is built from a [`TwoCategoryData`] presentation (explicit
//! composition, vertical composition and whiskering tables). Construction fails with a
//! [`StructuralError`] when the tables are malformed and with a [`ValidationReport`]
//! when a 2-category law is violated. Once built, the structure is immutable and every
//! table is total on its composable domain.

mod data;
mod laws;
mod pasting;
mod report;

use std::collections::HashMap;

use serde::Serialize;

use crate::table::Table;

pub use data::{OneCellDecl, TableName, TwoCategoryData, TwoCellDecl};
pub use pasting::{LlShape, PastingSquare};
pub use report::{
    BoundaryMismatch, BuildError, Law, LawViolation, StructuralError, ValidationReport,
};

/// Object of a 2-category, by declaration index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Obj(pub usize);

/// 1-cell of a 2-category, by declaration index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Arrow(pub usize);

/// 2-cell of a 2-category, by declaration index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Cell(pub usize);

/// Checks a presentation against every strict 2-category law.
///
/// Returns the full list of violations (empty iff valid); malformed tables are reported
/// as a [`StructuralError`] instead.
pub fn validate_two_category(data: &TwoCategoryData) -> Result<ValidationReport, StructuralError> {
    let sk = laws::Skeleton::parse(data)?;
    Ok(sk.check(usize::MAX))
}

/// Like [`validate_two_category`] but stops at the first violated law.
pub fn first_violation(data: &TwoCategoryData) -> Result<Option<LawViolation>, StructuralError> {
    let sk = laws::Skeleton::parse(data)?;
    Ok(sk.check(1).violations.into_iter().next())
}

/// A validated strict 2-category with finitely many cells.
#[derive(Clone, Debug)]
pub struct TwoCategory {
    data: TwoCategoryData,
    object_index: HashMap<String, usize>,
    arrow_index: HashMap<String, usize>,
    cell_index: HashMap<String, usize>,
    arrow_ends: Vec<(Obj, Obj)>,
    id_arrow: Vec<Arrow>,
    is_id_arrow: Vec<bool>,
    cell_ends: Vec<(Arrow, Arrow)>,
    id_cell: Vec<Cell>,
    is_id_cell: Vec<bool>,
    comp1: Table,
    vcomp: Table,
    wl: Table,
    wr: Table,
    declared_inverse: Vec<Option<Cell>>,
    inverse: Vec<Option<Cell>>,
    arrows_between: Vec<Vec<Arrow>>,
    arrows_from: Vec<Vec<Arrow>>,
    cells_between: Vec<Vec<Cell>>,
}

impl TwoCategory {
    pub fn from_data(data: TwoCategoryData) -> Result<Self, BuildError> {
        let sk = laws::Skeleton::parse(&data)?;
        let report = sk.check(usize::MAX);
        if !report.is_valid() {
            return Err(BuildError::Laws(report));
        }
        Ok(sk.finish(data.clone()))
    }

    /// The presentation this structure was built from.
    pub fn data(&self) -> &TwoCategoryData {
        &self.data
    }

    pub fn num_objects(&self) -> usize {
        self.data.objects.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrow_ends.len()
    }

    pub fn num_cells(&self) -> usize {
        self.cell_ends.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.objects.is_empty()
    }

    pub fn objects(&self) -> impl Iterator<Item = Obj> + '_ {
        (0..self.num_objects()).map(Obj)
    }

    pub fn arrows(&self) -> impl Iterator<Item = Arrow> + '_ {
        (0..self.num_arrows()).map(Arrow)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.num_cells()).map(Cell)
    }

    pub fn object_name(&self, o: Obj) -> &str {
        &self.data.objects[o.0]
    }

    pub fn arrow_name(&self, a: Arrow) -> &str {
        &self.data.one_cells[a.0].id
    }

    pub fn cell_name(&self, c: Cell) -> &str {
        &self.data.two_cells[c.0].id
    }

    pub fn object_by_name(&self, name: &str) -> Option<Obj> {
        self.object_index.get(name).copied().map(Obj)
    }

    pub fn arrow_by_name(&self, name: &str) -> Option<Arrow> {
        self.arrow_index.get(name).copied().map(Arrow)
    }

    pub fn cell_by_name(&self, name: &str) -> Option<Cell> {
        self.cell_index.get(name).copied().map(Cell)
    }

    pub fn src(&self, a: Arrow) -> Obj {
        self.arrow_ends[a.0].0
    }

    pub fn dst(&self, a: Arrow) -> Obj {
        self.arrow_ends[a.0].1
    }

    pub fn id(&self, o: Obj) -> Arrow {
        self.id_arrow[o.0]
    }

    pub fn is_identity_arrow(&self, a: Arrow) -> bool {
        self.is_id_arrow[a.0]
    }

    pub fn cell_src(&self, c: Cell) -> Arrow {
        self.cell_ends[c.0].0
    }

    pub fn cell_dst(&self, c: Cell) -> Arrow {
        self.cell_ends[c.0].1
    }

    pub fn id_cell(&self, a: Arrow) -> Cell {
        self.id_cell[a.0]
    }

    pub fn is_identity_cell(&self, c: Cell) -> bool {
        self.is_id_cell[c.0]
    }

    /// 1-cells `a -> b` in declaration order.
    pub fn arrows_between(&self, a: Obj, b: Obj) -> &[Arrow] {
        &self.arrows_between[a.0 * self.num_objects() + b.0]
    }

    /// 1-cells with source `a` in declaration order.
    pub fn arrows_from(&self, a: Obj) -> &[Arrow] {
        &self.arrows_from[a.0]
    }

    /// 2-cells `f => g` in declaration order.
    pub fn cells_between(&self, f: Arrow, g: Arrow) -> &[Cell] {
        &self.cells_between[f.0 * self.num_arrows() + g.0]
    }

    /// `g ∘ f`. Panics unless `dst(f) == src(g)`.
    pub fn comp(&self, g: Arrow, f: Arrow) -> Arrow {
        self.try_comp(g, f).expect("comp on non-composable 1-cells")
    }

    pub fn try_comp(&self, g: Arrow, f: Arrow) -> Result<Arrow, BoundaryMismatch> {
        self.comp1.get(g.0, f.0).map(Arrow).ok_or_else(|| {
            BoundaryMismatch(format!(
                "1-cells {} after {} are not composable",
                self.arrow_name(g),
                self.arrow_name(f)
            ))
        })
    }

    /// Composite of a path of 1-cells listed in application order (first applied first).
    pub fn comp_path(&self, path: &[Arrow]) -> Result<Arrow, BoundaryMismatch> {
        let (first, rest) = path
            .split_first()
            .ok_or_else(|| BoundaryMismatch("empty path".into()))?;
        rest.iter()
            .try_fold(*first, |acc, &next| self.try_comp(next, acc))
    }

    /// Vertical composite `β · α` (α first). Panics unless `dst(α) == src(β)`.
    pub fn vcomp(&self, beta: Cell, alpha: Cell) -> Cell {
        self.try_vcomp(beta, alpha)
            .expect("vcomp on non-composable 2-cells")
    }

    pub fn try_vcomp(&self, beta: Cell, alpha: Cell) -> Result<Cell, BoundaryMismatch> {
        self.vcomp.get(beta.0, alpha.0).map(Cell).ok_or_else(|| {
            BoundaryMismatch(format!(
                "2-cells {} after {} are not vertically composable",
                self.cell_name(beta),
                self.cell_name(alpha)
            ))
        })
    }

    /// `h α`: post-whiskering by a 1-cell.
    pub fn whisker_left(&self, h: Arrow, alpha: Cell) -> Cell {
        self.try_whisker_left(h, alpha)
            .expect("whisker_left on non-composable data")
    }

    pub fn try_whisker_left(&self, h: Arrow, alpha: Cell) -> Result<Cell, BoundaryMismatch> {
        self.wl.get(h.0, alpha.0).map(Cell).ok_or_else(|| {
            BoundaryMismatch(format!(
                "cannot whisker {} by {} on the left",
                self.cell_name(alpha),
                self.arrow_name(h)
            ))
        })
    }

    /// `α f`: pre-whiskering by a 1-cell.
    pub fn whisker_right(&self, alpha: Cell, f: Arrow) -> Cell {
        self.try_whisker_right(alpha, f)
            .expect("whisker_right on non-composable data")
    }

    pub fn try_whisker_right(&self, alpha: Cell, f: Arrow) -> Result<Cell, BoundaryMismatch> {
        self.wr.get(alpha.0, f.0).map(Cell).ok_or_else(|| {
            BoundaryMismatch(format!(
                "cannot whisker {} by {} on the right",
                self.cell_name(alpha),
                self.arrow_name(f)
            ))
        })
    }

    /// Declared inverse if any, otherwise the first parallel cell that inverts `alpha`.
    pub fn inverse(&self, alpha: Cell) -> Option<Cell> {
        self.inverse[alpha.0]
    }

    pub fn is_invertible(&self, alpha: Cell) -> bool {
        self.inverse[alpha.0].is_some()
    }

    pub fn declared_inverse(&self, alpha: Cell) -> Option<Cell> {
        self.declared_inverse[alpha.0]
    }

    /// Exhaustive inverse search ignoring the declared table.
    pub fn search_inverse(&self, alpha: Cell) -> Option<Cell> {
        let (f, g) = self.cell_ends[alpha.0];
        self.cells_between(g, f).iter().copied().find(|&beta| {
            self.vcomp.get(beta.0, alpha.0) == Some(self.id_cell(f).0)
                && self.vcomp.get(alpha.0, beta.0) == Some(self.id_cell(g).0)
        })
    }

    /// Invertible 2-cells `f => g` in declaration order.
    pub fn invertible_cells_between(&self, f: Arrow, g: Arrow) -> impl Iterator<Item = Cell> + '_ {
        self.cells_between(f, g)
            .iter()
            .copied()
            .filter(move |&c| self.is_invertible(c))
    }

    /// Does every 2-cell equal an identity?
    pub fn is_trivial(&self) -> bool {
        self.is_id_cell.iter().all(|&b| b)
    }
}
