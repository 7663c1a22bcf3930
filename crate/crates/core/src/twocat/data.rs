use serde::{Deserialize, Serialize};

fn is_false(b: &bool) -> bool {
    !*b
}

/// Declaration of a 1-cell `id: src -> dst`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OneCellDecl {
    pub id: String,
    pub src: String,
    pub dst: String,
    #[serde(default, skip_serializing_if = "is_false")]
    pub identity: bool,
}

/// Declaration of a 2-cell `id: src => dst` between parallel 1-cells.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoCellDecl {
    pub id: String,
    pub src: String,
    pub dst: String,
    #[serde(default, skip_serializing_if = "is_false")]
    pub identity: bool,
}

/// Unvalidated presentation of a strict 2-category by explicit tables.
///
/// Every table row is `[left, right, result]`:
/// `comp1` rows are `[g, f, g∘f]`, `vcomp` rows are `[β, α, β·α]`,
/// `whisker_left` rows are `[h, α, hα]` and `whisker_right` rows are `[α, f, αf]`.
/// Declaration order of objects and cells is the enumeration order used by every search.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoCategoryData {
    pub objects: Vec<String>,
    pub one_cells: Vec<OneCellDecl>,
    #[serde(default)]
    pub comp1: Vec<[String; 3]>,
    #[serde(default)]
    pub two_cells: Vec<TwoCellDecl>,
    #[serde(default)]
    pub vcomp: Vec<[String; 3]>,
    #[serde(default)]
    pub whisker_left: Vec<[String; 3]>,
    #[serde(default)]
    pub whisker_right: Vec<[String; 3]>,
    #[serde(default)]
    pub inverses: Vec<[String; 2]>,
}

/// Which table of a [`TwoCategoryData`] an entry belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TableName {
    Comp1,
    Vcomp,
    WhiskerLeft,
    WhiskerRight,
    Inverses,
}

impl std::fmt::Display for TableName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            TableName::Comp1 => "comp1",
            TableName::Vcomp => "vcomp",
            TableName::WhiskerLeft => "whisker_left",
            TableName::WhiskerRight => "whisker_right",
            TableName::Inverses => "inverses",
        };
        f.write_str(s)
    }
}
