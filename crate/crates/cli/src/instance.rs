//! The instance file: a 2-category presentation with an optional 2-functor, shape
//! category and pseudocone, all cross-referenced by name.

use std::collections::BTreeMap;
use std::sync::Arc;

use bicolim::bicolim::Pseudocone;
use bicolim::fincat::{
    CatValued2Functor, FiniteCategory, FiniteCategoryData, FunctorImage, NatTransf, TwoFunctorData,
};
use bicolim::twocat::{TwoCategory, TwoCategoryData};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// A pseudocone `F => X` where `X` is one of the file's named categories. Coherence
/// components map each object of `F(src u)` to a morphism of `X`; identity 1-cells may
/// be omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PseudoconeData {
    pub vertex: String,
    pub legs: BTreeMap<String, FunctorImage>,
    #[serde(default)]
    pub coherence: BTreeMap<String, BTreeMap<String, String>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    #[serde(flatten)]
    pub category: TwoCategoryData,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub functor: Option<TwoFunctorData>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub categories: BTreeMap<String, FiniteCategoryData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pseudocone: Option<PseudoconeData>,
    /// Name of the shape category `P` among `categories`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shape: Option<String>,
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text)
            .map_err(|e| CliError::Parse(format!("line {} column {}: {e}", e.line(), e.column())))
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("instance files always serialize");
        s.push('\n');
        s
    }

    pub fn two_category(&self) -> Result<Arc<TwoCategory>, CliError> {
        Ok(Arc::new(
            TwoCategory::from_data(self.category.clone()).map_err(bicolim::Error::from)?,
        ))
    }

    pub fn functor(&self, base: Arc<TwoCategory>) -> Result<CatValued2Functor, CliError> {
        let data = self
            .functor
            .as_ref()
            .ok_or_else(|| CliError::Validation("the instance has no functor".into()))?;
        Ok(CatValued2Functor::from_data(base, &self.categories, data)?)
    }

    pub fn named_category(&self, name: &str) -> Result<FiniteCategory, CliError> {
        let data = self
            .categories
            .get(name)
            .ok_or_else(|| CliError::Validation(format!("unknown category `{name}`")))?;
        Ok(FiniteCategory::from_data(data)?)
    }

    pub fn pseudocone(&self, f: &CatValued2Functor) -> Result<Pseudocone, CliError> {
        let data = self
            .pseudocone
            .as_ref()
            .ok_or_else(|| CliError::Validation("the instance has no pseudocone".into()))?;
        let vertex = Arc::new(self.named_category(&data.vertex)?);
        let b = f.base();
        let mut legs = Vec::with_capacity(b.num_objects());
        for a in b.objects() {
            let name = b.object_name(a);
            let img = data.legs.get(name).ok_or_else(|| {
                CliError::Validation(format!("pseudocone: no leg for object `{name}`"))
            })?;
            legs.push(img.resolve(f.cat(a), &vertex)?);
        }
        if data.legs.len() != b.num_objects() {
            return Err(CliError::Validation(
                "pseudocone: legs given for unknown objects".into(),
            ));
        }
        let mut coherence = Vec::with_capacity(b.num_arrows());
        for u in b.arrows() {
            let name = b.arrow_name(u);
            let fa = f.cat(b.src(u));
            let comps = match data.coherence.get(name) {
                Some(c) => (0..fa.num_objects())
                    .map(|x| {
                        let xn = fa.object_name(x);
                        let m = c.get(xn).ok_or_else(|| {
                            CliError::Validation(format!(
                                "pseudocone: `{name}` has no component at `{xn}`"
                            ))
                        })?;
                        vertex.morphism_by_name(m).ok_or_else(|| {
                            CliError::Validation(format!("pseudocone: unknown morphism `{m}`"))
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()?,
                None if b.is_identity_arrow(u) => (0..fa.num_objects())
                    .map(|x| vertex.id(legs[b.src(u).0].obj(x)))
                    .collect(),
                None => {
                    return Err(CliError::Validation(format!(
                        "pseudocone: no coherence for `{name}`"
                    )))
                }
            };
            coherence.push(NatTransf { components: comps });
        }
        if let Some(unknown) = data.coherence.keys().find(|k| b.arrow_by_name(k).is_none()) {
            return Err(CliError::Validation(format!(
                "pseudocone: unknown 1-cell `{unknown}`"
            )));
        }
        Ok(Pseudocone {
            vertex,
            legs,
            coherence,
        })
    }
}
