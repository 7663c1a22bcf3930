//! Pasting of 2-cells: squares, horizontal composites, and the hexagonal
//! LL-composite.
//!
//! Orientation is fixed once for the whole crate. A square on the span
//! `(f: E -> A, g: E -> B)` has right edge `u: A -> C`, bottom edge `v: B -> C`
//! and a cell `γ: u∘f => v∘g` ("top-then-right" to "left-then-bottom").

use serde::Serialize;

use super::{Arrow, BoundaryMismatch, Cell, Obj, TwoCategory};

/// A 2-cell filling the square `u∘f => v∘g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PastingSquare {
    pub top: Arrow,
    pub left: Arrow,
    pub right: Arrow,
    pub bottom: Arrow,
    pub cell: Cell,
}

impl PastingSquare {
    /// The object every edge of the square ends at.
    pub fn apex(&self, cat: &TwoCategory) -> Obj {
        cat.dst(self.right)
    }

    pub fn validate(&self, cat: &TwoCategory) -> Result<(), BoundaryMismatch> {
        if cat.src(self.top) != cat.src(self.left) {
            return Err(BoundaryMismatch(format!(
                "square: {} and {} do not form a span",
                cat.arrow_name(self.top),
                cat.arrow_name(self.left)
            )));
        }
        let uf = cat.try_comp(self.right, self.top)?;
        let vg = cat.try_comp(self.bottom, self.left)?;
        if cat.cell_src(self.cell) != uf || cat.cell_dst(self.cell) != vg {
            return Err(BoundaryMismatch(format!(
                "square: cell {} is not {} => {}",
                cat.cell_name(self.cell),
                cat.arrow_name(uf),
                cat.arrow_name(vg)
            )));
        }
        Ok(())
    }
}

/// Hexagonal pasting context: two outer squares glued on a middle square.
///
/// ```text
///        top_in      top_out
///    X --------> T1 --------> T2 ----.
///    |  \            alpha     |      \ right_up
///    |   mid_in --> M ---------'       R
///    |             |  mid_down   gamma/ right_down
///    |  bot_in     v   beta          /
///    '---------> B1 --------> B2 ---'
///                   bot_out
/// ```
///
/// `alpha: top_out∘top_in => mid_up∘mid_in`,
/// `gamma: right_up∘mid_up => right_down∘mid_down`,
/// `beta: mid_down∘mid_in => bot_out∘bot_in`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LlShape {
    pub top_in: Arrow,
    pub top_out: Arrow,
    pub mid_in: Arrow,
    pub mid_up: Arrow,
    pub mid_down: Arrow,
    pub bot_in: Arrow,
    pub bot_out: Arrow,
    pub right_up: Arrow,
    pub right_down: Arrow,
}

impl TwoCategory {
    /// Composite of 1-cells written left to right as in `w∘m∘t`.
    pub fn comp_seq(&self, written: &[Arrow]) -> Result<Arrow, BoundaryMismatch> {
        let (last, rest) = written
            .split_last()
            .ok_or_else(|| BoundaryMismatch("empty composite".into()))?;
        rest.iter()
            .rev()
            .try_fold(*last, |acc, &outer| self.try_comp(outer, acc))
    }

    /// `outer α inner`, both 1-cell lists written left to right; either may be empty.
    pub fn whisker(
        &self,
        outer: &[Arrow],
        alpha: Cell,
        inner: &[Arrow],
    ) -> Result<Cell, BoundaryMismatch> {
        let mut c = alpha;
        if !inner.is_empty() {
            c = self.try_whisker_right(c, self.comp_seq(inner)?)?;
        }
        if !outer.is_empty() {
            c = self.try_whisker_left(self.comp_seq(outer)?, c)?;
        }
        Ok(c)
    }

    /// Vertical composite of cells listed in the order they are applied.
    pub fn vcomp_seq(&self, applied: &[Cell]) -> Result<Cell, BoundaryMismatch> {
        let (first, rest) = applied
            .split_first()
            .ok_or_else(|| BoundaryMismatch("empty vertical composite".into()))?;
        rest.iter()
            .try_fold(*first, |acc, &next| self.try_vcomp(next, acc))
    }

    /// Horizontal composite `β ∗ α: g∘f => g'∘f'` for `α: f => f'`, `β: g => g'`.
    ///
    /// Both whiskering orders are computed; a disagreement can only come from an
    /// unvalidated structure and panics.
    pub fn hcompose(&self, beta: Cell, alpha: Cell) -> Result<Cell, BoundaryMismatch> {
        let (f, f2) = (self.cell_src(alpha), self.cell_dst(alpha));
        let (g, g2) = (self.cell_src(beta), self.cell_dst(beta));
        if self.dst(f) != self.src(g) {
            return Err(BoundaryMismatch(format!(
                "hcompose: {} is not composable after {}",
                self.cell_name(beta),
                self.cell_name(alpha)
            )));
        }
        let one = self.try_vcomp(
            self.try_whisker_right(beta, f2)?,
            self.try_whisker_left(g, alpha)?,
        )?;
        let two = self.try_vcomp(
            self.try_whisker_left(g2, alpha)?,
            self.try_whisker_right(beta, f)?,
        )?;
        assert_eq!(one, two, "interchange failed in a validated 2-category");
        Ok(one)
    }

    /// The LL-composite of `beta` with `alpha` over `gamma` in the given shape:
    /// `(right_down β) · (γ mid_in) · (right_up α)`.
    pub fn ll_compose(
        &self,
        beta: Cell,
        gamma: Cell,
        alpha: Cell,
        shape: &LlShape,
    ) -> Result<Cell, BoundaryMismatch> {
        let s = shape;
        let expect = |cell: Cell, src: Arrow, dst: Arrow, label: &str| {
            if self.cell_src(cell) == src && self.cell_dst(cell) == dst {
                Ok(())
            } else {
                Err(BoundaryMismatch(format!(
                    "ll_compose: {label} cell {} has boundary {} => {}, expected {} => {}",
                    self.cell_name(cell),
                    self.arrow_name(self.cell_src(cell)),
                    self.arrow_name(self.cell_dst(cell)),
                    self.arrow_name(src),
                    self.arrow_name(dst)
                )))
            }
        };
        expect(
            alpha,
            self.try_comp(s.top_out, s.top_in)?,
            self.try_comp(s.mid_up, s.mid_in)?,
            "alpha",
        )?;
        expect(
            gamma,
            self.try_comp(s.right_up, s.mid_up)?,
            self.try_comp(s.right_down, s.mid_down)?,
            "gamma",
        )?;
        expect(
            beta,
            self.try_comp(s.mid_down, s.mid_in)?,
            self.try_comp(s.bot_out, s.bot_in)?,
            "beta",
        )?;
        let a = self.try_whisker_left(s.right_up, alpha)?;
        let g = self.try_whisker_right(gamma, s.mid_in)?;
        let b = self.try_whisker_left(s.right_down, beta)?;
        self.vcomp_seq(&[a, g, b])
    }

    /// Both sides of the LL equation for squares `γ1`, `γ2` on a common span and a
    /// candidate `(w1, w2, α, β)`: returns `((α g)·(w1 γ1), (w2 γ2)·(β f))`.
    pub fn ll_sides(
        &self,
        sq1: &PastingSquare,
        sq2: &PastingSquare,
        w1: Arrow,
        w2: Arrow,
        alpha: Cell,
        beta: Cell,
    ) -> Result<(Cell, Cell), BoundaryMismatch> {
        let lhs = self.vcomp_seq(&[
            self.whisker(&[w1], sq1.cell, &[])?,
            self.whisker(&[], alpha, &[sq1.left])?,
        ])?;
        let rhs = self.vcomp_seq(&[
            self.whisker(&[], beta, &[sq1.top])?,
            self.whisker(&[w2], sq2.cell, &[])?,
        ])?;
        Ok((lhs, rhs))
    }
}
