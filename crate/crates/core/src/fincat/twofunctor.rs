use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{
    functor_category, CatFunctor, FiniteCategory, FiniteCategoryData, FunctorCategory, NatTransf,
};
use crate::twocat::{Arrow, Cell, Obj, TwoCategory};
use crate::{Error, Result};

/// Image of a 1-cell: object and morphism maps by id. Identity morphisms may be omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctorImage {
    pub objects: BTreeMap<String, String>,
    #[serde(default)]
    pub morphisms: BTreeMap<String, String>,
}

impl FunctorImage {
    /// Resolves names against `c -> d`. Every object needs an image; omitted morphisms
    /// must be identities.
    pub fn resolve(&self, c: &FiniteCategory, d: &FiniteCategory) -> Result<CatFunctor> {
        parse_functor(self, c, d).map_err(Error::Validation)
    }
}

/// Unvalidated 2-functor. Identity 1-cells and identity 2-cells may be omitted, in which
/// case they are sent to identities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoFunctorData {
    pub on_objects: BTreeMap<String, String>,
    #[serde(default)]
    pub on_one_cells: BTreeMap<String, FunctorImage>,
    #[serde(default)]
    pub on_two_cells: BTreeMap<String, BTreeMap<String, String>>,
}

/// Every violated 2-functor law, by equation instance.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FunctorReport {
    pub violations: Vec<String>,
}

impl FunctorReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A strict 2-functor from a finite 2-category into `Cat` with finite images.
#[derive(Clone, Debug)]
pub struct CatValued2Functor {
    base: Arc<TwoCategory>,
    category_names: Vec<String>,
    categories: Vec<Arc<FiniteCategory>>,
    cat_of: Vec<usize>,
    on_arrows: Vec<CatFunctor>,
    on_cells: Vec<NatTransf>,
}

impl CatValued2Functor {
    /// Assembles and validates a 2-functor. `cat_of[A]` indexes `categories`.
    pub fn new(
        base: Arc<TwoCategory>,
        categories: Vec<(String, FiniteCategory)>,
        cat_of: Vec<usize>,
        on_arrows: Vec<CatFunctor>,
        on_cells: Vec<NatTransf>,
    ) -> Result<Self> {
        let (category_names, categories): (Vec<_>, Vec<_>) = categories
            .into_iter()
            .map(|(n, c)| (n, Arc::new(c)))
            .unzip();
        let f = CatValued2Functor {
            base,
            category_names,
            categories,
            cat_of,
            on_arrows,
            on_cells,
        };
        f.check_shape()?;
        let report = f.report();
        if !report.is_valid() {
            return Err(Error::Validation(format!(
                "{} 2-functor law violation(s), first: {}",
                report.violations.len(),
                report.violations[0]
            )));
        }
        Ok(f)
    }

    /// The constant 2-functor at `x`.
    pub fn constant(base: Arc<TwoCategory>, name: &str, x: FiniteCategory) -> Result<Self> {
        let on_arrows = base.arrows().map(|_| CatFunctor::identity(&x)).collect();
        let on_cells = base
            .cells()
            .map(|_| NatTransf::identity(&CatFunctor::identity(&x), &x))
            .collect();
        let n = base.num_objects();
        Self::new(
            base,
            vec![(name.to_string(), x)],
            vec![0; n],
            on_arrows,
            on_cells,
        )
    }

    /// Parses against `base`, resolving category names through `categories`.
    pub fn from_data(
        base: Arc<TwoCategory>,
        categories: &BTreeMap<String, FiniteCategoryData>,
        data: &TwoFunctorData,
    ) -> Result<Self> {
        let f = Self::parse(base, categories, data)?;
        let report = f.report();
        if !report.is_valid() {
            return Err(Error::Validation(format!(
                "{} 2-functor law violation(s), first: {}",
                report.violations.len(),
                report.violations[0]
            )));
        }
        Ok(f)
    }

    fn parse(
        base: Arc<TwoCategory>,
        categories: &BTreeMap<String, FiniteCategoryData>,
        data: &TwoFunctorData,
    ) -> Result<Self> {
        let structure = |msg: String| Error::Validation(format!("2-functor structure: {msg}"));
        let mut category_names = Vec::new();
        let mut cats = Vec::new();
        let mut cat_of = Vec::new();
        for a in base.objects() {
            let name = base.object_name(a);
            let cname = data
                .on_objects
                .get(name)
                .ok_or_else(|| structure(format!("object `{name}` has no image")))?;
            let idx = match category_names.iter().position(|n| n == cname) {
                Some(i) => i,
                None => {
                    let cd = categories
                        .get(cname)
                        .ok_or_else(|| structure(format!("unknown category `{cname}`")))?;
                    cats.push(Arc::new(FiniteCategory::from_data(cd)?));
                    category_names.push(cname.clone());
                    category_names.len() - 1
                }
            };
            cat_of.push(idx);
        }
        for key in data.on_objects.keys() {
            if base.object_by_name(key).is_none() {
                return Err(structure(format!("image given for unknown object `{key}`")));
            }
        }
        for key in data.on_one_cells.keys() {
            if base.arrow_by_name(key).is_none() {
                return Err(structure(format!("image given for unknown 1-cell `{key}`")));
            }
        }
        for key in data.on_two_cells.keys() {
            if base.cell_by_name(key).is_none() {
                return Err(structure(format!("image given for unknown 2-cell `{key}`")));
            }
        }
        let cat = |a: Obj| &cats[cat_of[a.0]];
        let mut on_arrows = Vec::new();
        for u in base.arrows() {
            let (c, d) = (cat(base.src(u)), cat(base.dst(u)));
            let name = base.arrow_name(u);
            let image = match data.on_one_cells.get(name) {
                Some(img) => parse_functor(img, c, d)
                    .map_err(|e| structure(format!("1-cell `{name}`: {e}")))?,
                None if base.is_identity_arrow(u) => CatFunctor::identity(c),
                None => return Err(structure(format!("1-cell `{name}` has no image"))),
            };
            on_arrows.push(image);
        }
        let mut on_cells = Vec::new();
        for alpha in base.cells() {
            let f = base.cell_src(alpha);
            let (c, d) = (cat(base.src(f)), cat(base.dst(f)));
            let name = base.cell_name(alpha);
            let image = match data.on_two_cells.get(name) {
                Some(comps) => {
                    let mut components = Vec::new();
                    for x in 0..c.num_objects() {
                        let xn = c.object_name(x);
                        let m = comps.get(xn).ok_or_else(|| {
                            structure(format!("2-cell `{name}` has no component at `{xn}`"))
                        })?;
                        components.push(d.morphism_by_name(m).ok_or_else(|| {
                            structure(format!("2-cell `{name}`: unknown morphism `{m}`"))
                        })?);
                    }
                    if comps.len() != c.num_objects() {
                        return Err(structure(format!(
                            "2-cell `{name}` has components at unknown objects"
                        )));
                    }
                    NatTransf { components }
                }
                None if base.is_identity_cell(alpha) => NatTransf::identity(&on_arrows[f.0], d),
                None => return Err(structure(format!("2-cell `{name}` has no image"))),
            };
            on_cells.push(image);
        }
        let f = CatValued2Functor {
            base,
            category_names,
            categories: cats,
            cat_of,
            on_arrows,
            on_cells,
        };
        f.check_shape()?;
        Ok(f)
    }

    /// Serializable form: the category table and the functor data.
    pub fn to_data(&self) -> (BTreeMap<String, FiniteCategoryData>, TwoFunctorData) {
        let cats = self
            .category_names
            .iter()
            .zip(&self.categories)
            .map(|(n, c)| (n.clone(), c.to_data()))
            .collect();
        let b = &*self.base;
        let on_objects = b
            .objects()
            .map(|a| {
                (
                    b.object_name(a).to_string(),
                    self.category_names[self.cat_of[a.0]].clone(),
                )
            })
            .collect();
        let on_one_cells = b
            .arrows()
            .map(|u| {
                let (c, d) = (self.cat(b.src(u)), self.cat(b.dst(u)));
                let g = &self.on_arrows[u.0];
                let img = FunctorImage {
                    objects: (0..c.num_objects())
                        .map(|x| {
                            (
                                c.object_name(x).to_string(),
                                d.object_name(g.obj(x)).to_string(),
                            )
                        })
                        .collect(),
                    morphisms: (0..c.num_morphisms())
                        .map(|m| {
                            (
                                c.morphism_name(m).to_string(),
                                d.morphism_name(g.mor(m)).to_string(),
                            )
                        })
                        .collect(),
                };
                (b.arrow_name(u).to_string(), img)
            })
            .collect();
        let on_two_cells = b
            .cells()
            .map(|al| {
                let f = b.cell_src(al);
                let (c, d) = (self.cat(b.src(f)), self.cat(b.dst(f)));
                let comps = (0..c.num_objects())
                    .map(|x| {
                        (
                            c.object_name(x).to_string(),
                            d.morphism_name(self.on_cells[al.0].at(x)).to_string(),
                        )
                    })
                    .collect();
                (b.cell_name(al).to_string(), comps)
            })
            .collect();
        (
            cats,
            TwoFunctorData {
                on_objects,
                on_one_cells,
                on_two_cells,
            },
        )
    }

    fn check_shape(&self) -> Result<()> {
        let b = &*self.base;
        if self.cat_of.len() != b.num_objects()
            || self.cat_of.iter().any(|&i| i >= self.categories.len())
            || self.on_arrows.len() != b.num_arrows()
            || self.on_cells.len() != b.num_cells()
        {
            return Err(Error::Validation(
                "2-functor structure: image tables do not match the base".into(),
            ));
        }
        Ok(())
    }

    /// Every violated law of a strict 2-functor.
    pub fn report(&self) -> FunctorReport {
        let b = &*self.base;
        let mut v = Vec::new();
        let mut arrows_ok = vec![true; b.num_arrows()];
        for u in b.arrows() {
            let errs = self.on_arrows[u.0].violations(self.cat(b.src(u)), self.cat(b.dst(u)));
            if !errs.is_empty() {
                arrows_ok[u.0] = false;
                v.extend(
                    errs.into_iter()
                        .map(|e| format!("F({}): {e}", b.arrow_name(u))),
                );
            }
        }
        for a in b.objects() {
            if self.on_arrows[b.id(a).0] != CatFunctor::identity(self.cat(a)) {
                v.push(format!(
                    "F({}) is not the identity functor",
                    b.arrow_name(b.id(a))
                ));
            }
        }
        for f in b.arrows() {
            for &g in b.arrows_from(b.dst(f)) {
                if !(arrows_ok[f.0] && arrows_ok[g.0]) {
                    continue;
                }
                let gf = b.comp(g, f);
                if self.on_arrows[gf.0] != self.on_arrows[g.0].after(&self.on_arrows[f.0]) {
                    v.push(format!(
                        "F({}) differs from F({})F({})",
                        b.arrow_name(gf),
                        b.arrow_name(g),
                        b.arrow_name(f)
                    ));
                }
            }
        }
        if arrows_ok.iter().any(|ok| !ok) {
            return FunctorReport { violations: v };
        }
        let mut cells_ok = vec![true; b.num_cells()];
        for al in b.cells() {
            let (f, g) = (b.cell_src(al), b.cell_dst(al));
            let errs = self.on_cells[al.0].violations(
                &self.on_arrows[f.0],
                &self.on_arrows[g.0],
                self.cat(b.src(f)),
                self.cat(b.dst(f)),
            );
            if !errs.is_empty() {
                cells_ok[al.0] = false;
                v.extend(
                    errs.into_iter()
                        .map(|e| format!("F({}): {e}", b.cell_name(al))),
                );
            }
        }
        for f in b.arrows() {
            let idc = b.id_cell(f);
            if cells_ok[idc.0]
                && self.on_cells[idc.0]
                    != NatTransf::identity(&self.on_arrows[f.0], self.cat(b.dst(f)))
            {
                v.push(format!(
                    "F({}) is not an identity transformation",
                    b.cell_name(idc)
                ));
            }
        }
        for al in b.cells() {
            if !cells_ok[al.0] {
                continue;
            }
            let target = self.cat(b.dst(b.cell_src(al)));
            for be in b.cells() {
                if b.cell_src(be) != b.cell_dst(al) || !cells_ok[be.0] {
                    continue;
                }
                let ba = b.vcomp(be, al);
                if self.on_cells[ba.0] != self.on_cells[be.0].after(&self.on_cells[al.0], target) {
                    v.push(format!(
                        "F({}) differs from F({})·F({})",
                        b.cell_name(ba),
                        b.cell_name(be),
                        b.cell_name(al)
                    ));
                }
            }
            let (src_obj, dst_obj) = (b.src(b.cell_src(al)), b.dst(b.cell_src(al)));
            for &h in b.arrows_from(dst_obj) {
                let ha = b.whisker_left(h, al);
                if self.on_cells[ha.0]
                    != NatTransf::whisker_left(&self.on_arrows[h.0], &self.on_cells[al.0])
                {
                    v.push(format!(
                        "F({}) differs from F({})F({})",
                        b.cell_name(ha),
                        b.arrow_name(h),
                        b.cell_name(al)
                    ));
                }
            }
            for k in b.arrows().filter(|&k| b.dst(k) == src_obj) {
                let ak = b.whisker_right(al, k);
                if self.on_cells[ak.0]
                    != NatTransf::whisker_right(&self.on_cells[al.0], &self.on_arrows[k.0])
                {
                    v.push(format!(
                        "F({}) differs from F({})F({})",
                        b.cell_name(ak),
                        b.cell_name(al),
                        b.arrow_name(k)
                    ));
                }
            }
            if b.is_invertible(al) && self.on_cells[al.0].inverse(target).is_none() {
                v.push(format!("F({}) is not invertible", b.cell_name(al)));
            }
        }
        FunctorReport { violations: v }
    }

    pub fn base(&self) -> &TwoCategory {
        &self.base
    }

    pub fn base_arc(&self) -> &Arc<TwoCategory> {
        &self.base
    }

    /// `F(A)`.
    pub fn cat(&self, a: Obj) -> &FiniteCategory {
        &self.categories[self.cat_of[a.0]]
    }

    pub fn category_index(&self, a: Obj) -> usize {
        self.cat_of[a.0]
    }

    pub fn category_name(&self, a: Obj) -> &str {
        &self.category_names[self.cat_of[a.0]]
    }

    pub fn categories(&self) -> &[Arc<FiniteCategory>] {
        &self.categories
    }

    /// `F(u)`.
    pub fn functor(&self, u: Arrow) -> &CatFunctor {
        &self.on_arrows[u.0]
    }

    /// `F(α)`.
    pub fn transf(&self, alpha: Cell) -> &NatTransf {
        &self.on_cells[alpha.0]
    }

    /// `F(u)(x)`.
    pub fn obj(&self, u: Arrow, x: usize) -> usize {
        self.on_arrows[u.0].obj(x)
    }

    /// `F(u)(ξ)`.
    pub fn mor(&self, u: Arrow, xi: usize) -> usize {
        self.on_arrows[u.0].mor(xi)
    }

    /// `F(α)_x`.
    pub fn comp2(&self, alpha: Cell, x: usize) -> usize {
        self.on_cells[alpha.0].at(x)
    }
}

fn parse_functor(
    img: &FunctorImage,
    c: &FiniteCategory,
    d: &FiniteCategory,
) -> std::result::Result<CatFunctor, String> {
    let mut objects = Vec::new();
    for x in 0..c.num_objects() {
        let xn = c.object_name(x);
        let y = img
            .objects
            .get(xn)
            .ok_or_else(|| format!("no image for object `{xn}`"))?;
        objects.push(
            d.object_by_name(y)
                .ok_or_else(|| format!("unknown object `{y}`"))?,
        );
    }
    if img.objects.len() != c.num_objects() {
        return Err("images given for unknown objects".into());
    }
    let mut morphisms = Vec::new();
    for m in 0..c.num_morphisms() {
        let mn = c.morphism_name(m);
        let image = match img.morphisms.get(mn) {
            Some(y) => d
                .morphism_by_name(y)
                .ok_or_else(|| format!("unknown morphism `{y}`"))?,
            None if c.is_identity(m) => d.id(objects[c.src(m)]),
            None => return Err(format!("no image for morphism `{mn}`")),
        };
        morphisms.push(image);
    }
    if img
        .morphisms
        .keys()
        .any(|k| c.morphism_by_name(k).is_none())
    {
        return Err("images given for unknown morphisms".into());
    }
    Ok(CatFunctor { objects, morphisms })
}

/// Checks a 2-functor presentation against `base`. A malformed presentation (missing or
/// unknown images) is an error; law violations are listed in the report.
pub fn validate_2functor(
    base: Arc<TwoCategory>,
    categories: &BTreeMap<String, FiniteCategoryData>,
    data: &TwoFunctorData,
) -> Result<FunctorReport> {
    Ok(CatValued2Functor::parse(base, categories, data)?.report())
}

/// `F^P` together with the functor categories `(FA)^P` it is built from.
#[derive(Clone, Debug)]
pub struct Lifted {
    pub functor: CatValued2Functor,
    /// `powers[i]` is `X^P` for the `i`-th category of the original functor.
    pub powers: Vec<Arc<FunctorCategory>>,
}

/// `F^P`: `F^P(A) = (FA)^P`, acting on 1-cells by postcomposition and on 2-cells by
/// whiskering.
pub fn lift_to_power(f: &CatValued2Functor, p: &FiniteCategory, cap: usize) -> Result<Lifted> {
    let powers = f
        .categories
        .iter()
        .map(|x| functor_category(x, p, cap).map(Arc::new))
        .collect::<Result<Vec<_>>>()?;
    let b = f.base();
    let lookup_err =
        || Error::Internal("image of a functor is missing from the functor category".into());
    let mut on_arrows = Vec::new();
    for u in b.arrows() {
        let (pa, pb) = (
            &powers[f.category_index(b.src(u))],
            &powers[f.category_index(b.dst(u))],
        );
        let fu = f.functor(u);
        let objects = pa
            .functors
            .iter()
            .map(|d| pb.functor_id(&fu.after(d)).ok_or_else(lookup_err))
            .collect::<Result<Vec<_>>>()?;
        let morphisms = (0..pa.category.num_morphisms())
            .map(|m| {
                let t = NatTransf::whisker_left(fu, &pa.transformations[m]);
                let (s, d) = (objects[pa.category.src(m)], objects[pa.category.dst(m)]);
                pb.transf_id(s, d, &t).ok_or_else(lookup_err)
            })
            .collect::<Result<Vec<_>>>()?;
        on_arrows.push(CatFunctor { objects, morphisms });
    }
    let mut on_cells = Vec::new();
    for al in b.cells() {
        let (u, v) = (b.cell_src(al), b.cell_dst(al));
        let (pa, pb) = (
            &powers[f.category_index(b.src(u))],
            &powers[f.category_index(b.dst(u))],
        );
        let components = pa
            .functors
            .iter()
            .enumerate()
            .map(|(i, d)| {
                let t = NatTransf::whisker_right(f.transf(al), d);
                pb.transf_id(on_arrows[u.0].obj(i), on_arrows[v.0].obj(i), &t)
                    .ok_or_else(lookup_err)
            })
            .collect::<Result<Vec<_>>>()?;
        on_cells.push(NatTransf { components });
    }
    let categories = f
        .category_names
        .iter()
        .zip(&powers)
        .map(|(n, pw)| (format!("{n}^P"), pw.category.clone()))
        .collect();
    let functor = CatValued2Functor::new(
        f.base.clone(),
        categories,
        f.cat_of.clone(),
        on_arrows,
        on_cells,
    )
    .map_err(|e| Error::Internal(format!("lifted 2-functor failed validation: {e}")))?;
    Ok(Lifted { functor, powers })
}
