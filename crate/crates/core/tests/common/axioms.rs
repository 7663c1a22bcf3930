//! Brute-force deciders for the filteredness axioms. They read only the raw composition
//! tables of a built 2-category and decide invertibility themselves.

use bicolim::twocat::{Arrow, Cell, Obj, TwoCategory};

/// Raw enumeration over a 2-category with a precomputed invertibility table.
pub struct Naive<'a> {
    pub b: &'a TwoCategory,
    invertible: Vec<bool>,
}

/// `(C, u, v, γ)` completing a span `(f, g)`: `γ: u∘f => v∘g`.
#[derive(Clone, Copy, Debug)]
pub struct Sq {
    pub apex: Obj,
    pub u: Arrow,
    pub v: Arrow,
    pub cell: Cell,
}

/// The truth values of all axioms, with the notions built from them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdicts {
    pub nonempty: bool,
    pub f0: bool,
    pub f1: bool,
    pub f2: bool,
    pub ff1: bool,
    pub wf1: bool,
    pub wf2: bool,
    pub wf3: bool,
    pub bf1: bool,
    pub bf2: bool,
}

impl Verdicts {
    pub fn pre(&self) -> bool {
        self.f1 && self.f2
    }
    pub fn pseudo(&self) -> bool {
        self.pre() && self.ff1
    }
    pub fn two(&self) -> bool {
        self.pseudo() && self.nonempty && self.f0
    }
    /// BF0 is the same statement as F0.
    pub fn bifiltered(&self) -> bool {
        self.nonempty && self.f0 && self.bf1 && self.bf2
    }
    pub fn weak(&self) -> bool {
        self.wf1 && self.wf2 && self.wf3
    }
}

impl<'a> Naive<'a> {
    pub fn new(b: &'a TwoCategory) -> Self {
        let cells: Vec<Cell> = b.cells().collect();
        let invertible = cells
            .iter()
            .map(|&c| {
                let (s, t) = (b.cell_src(c), b.cell_dst(c));
                cells.iter().any(|&d| {
                    b.cell_src(d) == t
                        && b.cell_dst(d) == s
                        && b.vcomp(d, c) == b.id_cell(s)
                        && b.vcomp(c, d) == b.id_cell(t)
                })
            })
            .collect();
        Naive { b, invertible }
    }

    pub fn inv(&self, c: Cell) -> bool {
        self.invertible[c.0]
    }

    pub fn arrows(&self, a: Obj, c: Obj) -> impl Iterator<Item = Arrow> + '_ {
        self.b
            .arrows()
            .filter(move |&u| self.b.src(u) == a && self.b.dst(u) == c)
    }

    pub fn cells(&self, f: Arrow, g: Arrow) -> impl Iterator<Item = Cell> + '_ {
        self.b
            .cells()
            .filter(move |&c| self.b.cell_src(c) == f && self.b.cell_dst(c) == g)
    }

    pub fn inv_cells(&self, f: Arrow, g: Arrow) -> impl Iterator<Item = Cell> + '_ {
        self.cells(f, g).filter(|&c| self.inv(c))
    }

    /// Every span `(f, g)` with a common source.
    pub fn spans(&self) -> Vec<(Arrow, Arrow)> {
        let b = self.b;
        let mut out = Vec::new();
        for f in b.arrows() {
            for g in b.arrows().filter(|&g| b.src(g) == b.src(f)) {
                out.push((f, g));
            }
        }
        out
    }

    pub fn squares(&self, f: Arrow, g: Arrow) -> Vec<Sq> {
        let b = self.b;
        let mut out = Vec::new();
        for c in b.objects() {
            for u in self.arrows(b.dst(f), c) {
                for v in self.arrows(b.dst(g), c) {
                    for cell in self.cells(b.comp(u, f), b.comp(v, g)) {
                        out.push(Sq {
                            apex: c,
                            u,
                            v,
                            cell,
                        });
                    }
                }
            }
        }
        out
    }

    /// `(α g)·(w1 γ1) = (w2 γ2)·(β f)` for some invertible `α`, `β`.
    pub fn equalized(&self, f: Arrow, g: Arrow, s1: &Sq, s2: &Sq) -> bool {
        let b = self.b;
        b.objects().any(|d| {
            self.arrows(s1.apex, d).any(|w1| {
                self.arrows(s2.apex, d).any(|w2| {
                    let left = b.whisker_left(w1, s1.cell);
                    let right = b.whisker_left(w2, s2.cell);
                    self.inv_cells(b.comp(w1, s1.v), b.comp(w2, s2.v))
                        .any(|alpha| {
                            let lhs = b.vcomp(b.whisker_right(alpha, g), left);
                            self.inv_cells(b.comp(w1, s1.u), b.comp(w2, s2.u))
                                .any(|beta| b.vcomp(right, b.whisker_right(beta, f)) == lhs)
                        })
                })
            })
        })
    }

    pub fn f0(&self) -> bool {
        let b = self.b;
        b.objects().all(|x| {
            b.objects().all(|y| {
                b.objects().any(|c| {
                    self.arrows(x, c).next().is_some() && self.arrows(y, c).next().is_some()
                })
            })
        })
    }

    pub fn f1(&self, invertible: bool) -> bool {
        self.spans().iter().all(|&(f, g)| {
            self.squares(f, g)
                .iter()
                .any(|s| !invertible || self.inv(s.cell))
        })
    }

    pub fn f2(&self, invertible_only: bool) -> bool {
        self.spans().iter().all(|&(f, g)| {
            let sqs: Vec<Sq> = self
                .squares(f, g)
                .into_iter()
                .filter(|s| !invertible_only || self.inv(s.cell))
                .collect();
            sqs.iter()
                .all(|s1| sqs.iter().all(|s2| self.equalized(f, g, s1, s2)))
        })
    }

    /// `hγ` invertible for some `h` out of the apex, on every square.
    pub fn wf3(&self) -> bool {
        let b = self.b;
        self.spans().iter().all(|&(f, g)| {
            self.squares(f, g).iter().all(|s| {
                b.arrows()
                    .filter(|&h| b.src(h) == s.apex)
                    .any(|h| self.inv(b.whisker_left(h, s.cell)))
            })
        })
    }

    pub fn ff1(&self) -> bool {
        let b = self.b;
        let sp = self.spans();
        sp.iter().all(|&(f1, g1)| {
            sp.iter()
                .filter(|&&(f2, g2)| b.dst(f2) == b.dst(f1) && b.dst(g2) == b.dst(g1))
                .all(|&(f2, g2)| {
                    b.objects().any(|c| {
                        self.arrows(b.dst(f1), c).any(|u| {
                            self.arrows(b.dst(g1), c).any(|v| {
                                self.inv_cells(b.comp(u, f1), b.comp(v, g1))
                                    .next()
                                    .is_some()
                                    && self
                                        .inv_cells(b.comp(u, f2), b.comp(v, g2))
                                        .next()
                                        .is_some()
                            })
                        })
                    })
                })
        })
    }

    pub fn bf1(&self) -> bool {
        let b = self.b;
        b.arrows().all(|f| {
            self.arrows(b.src(f), b.dst(f)).all(|g| {
                b.arrows()
                    .filter(|&u| b.src(u) == b.dst(f))
                    .any(|u| self.inv_cells(b.comp(u, f), b.comp(u, g)).next().is_some())
            })
        })
    }

    pub fn bf2(&self) -> bool {
        let b = self.b;
        b.cells().all(|a1| {
            let (f, g) = (b.cell_src(a1), b.cell_dst(a1));
            self.cells(f, g).all(|a2| {
                b.arrows()
                    .filter(|&u| b.src(u) == b.dst(f))
                    .any(|u| b.whisker_left(u, a1) == b.whisker_left(u, a2))
            })
        })
    }

    pub fn verdicts(&self) -> Verdicts {
        Verdicts {
            nonempty: self.b.num_objects() > 0,
            f0: self.f0(),
            f1: self.f1(true),
            f2: self.f2(false),
            ff1: self.ff1(),
            wf1: self.f1(false),
            wf2: self.f2(true),
            wf3: self.wf3(),
            bf1: self.bf1(),
            bf2: self.bf2(),
        }
    }
}
