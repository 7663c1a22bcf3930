use std::path::Path;

use bicolim::axioms::{classify, describe_input, Axiom};
use bicolim::bicolim::{
    build_bicolimit_with, factor_pseudocone, factorization_holds, BicolimCategory, BuildOptions,
};
use bicolim::fincat::{CatFunctor, FiniteCategory, FiniteCategoryData};
use bicolim::generate::{self, Family, Params};
use bicolim::theorems::{compare_with_classical, diamond_functor_with, DiamondOptions};
use bicolim::twocat::validate_two_category;
use serde::Serialize;

use crate::error::{CliError, EXIT_VALIDATION};
use crate::instance::InstanceFile;
use crate::report::Report;

#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub max_functors: usize,
    pub max_premorphisms: usize,
}

impl Limits {
    fn build(&self) -> BuildOptions {
        BuildOptions {
            max_premorphisms: self.max_premorphisms,
        }
    }
}

/// Filteredness notions `classify --query` can ask about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Notion {
    Pre,
    Pseudo,
    Two,
    Bifiltered,
}

pub fn load(path: &Path) -> Result<InstanceFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    InstanceFile::parse(&text)
}

pub fn validate(file: &InstanceFile) -> Result<Report, CliError> {
    let mut r = Report::new();
    let d = &file.category;
    r.field("objects", d.objects.len())
        .field("one_cells", d.one_cells.len())
        .field("two_cells", d.two_cells.len());
    let laws =
        validate_two_category(d).map_err(|e| CliError::Validation(format!("structure: {e}")))?;
    r.field("two_category", laws.to_string());
    let mut ok = laws.is_valid();
    if ok && file.functor.is_some() {
        match file.functor(file.two_category()?) {
            Ok(f) => {
                r.field("functor", "valid");
                if file.pseudocone.is_some() {
                    let h = file.pseudocone(&f)?;
                    let v = h.violations(&f);
                    ok &= v.is_empty();
                    r.field(
                        "pseudocone",
                        if v.is_empty() {
                            "valid".to_string()
                        } else {
                            v.join("; ")
                        },
                    );
                }
            }
            Err(e) => {
                ok = false;
                r.field("functor", e.to_string());
            }
        }
    }
    if let Some(s) = &file.shape {
        file.named_category(s)?;
        r.field("shape", s);
    }
    r.verdict(if ok { "valid" } else { "invalid" }, true);
    if !ok {
        r.exit_code = EXIT_VALIDATION;
    }
    Ok(r)
}

pub fn classify_cmd(file: &InstanceFile, query: Option<Notion>) -> Result<Report, CliError> {
    let b = file.two_category()?;
    let c = classify(&b);
    let mut r = Report::new();
    for a in Axiom::ALL {
        let res = c.result(a);
        let text = match &res.counterexample {
            None => "holds".to_string(),
            Some(input) => format!("fails at {}", describe_input(&b, input)),
        };
        r.field(&a.to_string(), text);
    }
    r.field("pre_2_filtered", c.pre_2_filtered)
        .field("pseudo_2_filtered", c.pseudo_2_filtered)
        .field("two_filtered", c.two_filtered)
        .field("bifiltered", c.bifiltered)
        .field("weak_axioms_agree", c.weak_axioms_agree())
        .field("bifiltered_agrees", c.kennison_agrees())
        .field("flags", c.flags());
    match query {
        None => r.verdict(c.flags(), true),
        Some(q) => {
            let (name, value) = match q {
                Notion::Pre => ("pre-2-filtered", c.pre_2_filtered),
                Notion::Pseudo => ("pseudo-2-filtered", c.pseudo_2_filtered),
                Notion::Two => ("2-filtered", c.two_filtered),
                Notion::Bifiltered => ("bifiltered", c.bifiltered),
            };
            r.verdict(format!("{name} {value}"), value)
        }
    };
    Ok(r)
}

/// Serialized `L(F)`: the category plus the premorphisms in each class.
#[derive(Serialize)]
struct BicolimOutput {
    category: FiniteCategoryData,
    classes: Vec<ClassOutput>,
}

#[derive(Serialize)]
struct ClassOutput {
    morphism: String,
    members: Vec<String>,
}

fn bicolim_output(l: &BicolimCategory) -> BicolimOutput {
    let cat = l.category();
    let classes = (0..cat.num_morphisms())
        .map(|m| ClassOutput {
            morphism: cat.morphism_name(m).to_string(),
            members: l.members(m).map(|p| l.describe(p)).collect(),
        })
        .collect();
    BicolimOutput {
        category: cat.to_data(),
        classes,
    }
}

pub fn bicolim_cmd(
    file: &InstanceFile,
    out: Option<&Path>,
    limits: Limits,
) -> Result<Report, CliError> {
    let f = file.functor(file.two_category()?)?;
    let l = build_bicolimit_with(&f, limits.build())?;
    let cat = l.category();
    let closed = l
        .relation_reports()
        .iter()
        .all(|x| x.reflexive && x.symmetric && x.transitive && x.equals_closure);
    let mut r = Report::new();
    r.field("objects", cat.num_objects())
        .field("morphisms", cat.num_morphisms())
        .field("premorphisms", l.num_premorphisms())
        .field("one_step_relation_is_equivalence", closed);
    let output = bicolim_output(&l);
    match out {
        Some(path) => {
            let mut s = serde_json::to_string_pretty(&output).expect("bicolimit serializes");
            s.push('\n');
            std::fs::write(path, s)
                .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
            r.field("written", path.display().to_string());
        }
        None => {
            for c in &output.classes {
                r.field(
                    "morphism",
                    format!("{} ({} premorphisms)", c.morphism, c.members.len()),
                );
            }
        }
    }
    r.verdict("built", closed);
    Ok(r)
}

fn describe_functor(r: &mut Report, g: &CatFunctor, c: &FiniteCategory, d: &FiniteCategory) {
    for x in 0..c.num_objects() {
        r.field(
            "object",
            format!("{} -> {}", c.object_name(x), d.object_name(g.obj(x))),
        );
    }
    for m in 0..c.num_morphisms() {
        r.field(
            "morphism",
            format!("{} -> {}", c.morphism_name(m), d.morphism_name(g.mor(m))),
        );
    }
}

pub fn factor_cmd(file: &InstanceFile, limits: Limits) -> Result<Report, CliError> {
    let f = file.functor(file.two_category()?)?;
    let h = file.pseudocone(&f)?;
    let l = build_bicolimit_with(&f, limits.build())?;
    let g = factor_pseudocone(&l, &h)?;
    let exact = factorization_holds(&l, &h)?;
    let mut r = Report::new();
    describe_functor(&mut r, &g, l.category(), &h.vertex);
    r.field("factorization_exact", exact);
    r.verdict(if exact { "factors" } else { "does not factor" }, exact);
    Ok(r)
}

/// `terminal`, `arrow`, `discrete2` and `square`, unless the file defines a category
/// of that name.
fn shape(file: &InstanceFile, name: &str) -> Result<FiniteCategory, CliError> {
    if file.categories.contains_key(name) {
        return file.named_category(name);
    }
    let c = match name {
        "terminal" => FiniteCategory::terminal(),
        "arrow" => generate::poset(&["0", "1"], &[("0", "1")]),
        "discrete2" => FiniteCategory::discrete(&["0", "1"]),
        "square" => generate::poset(
            &["00", "01", "10", "11"],
            &[
                ("00", "01"),
                ("00", "10"),
                ("01", "11"),
                ("10", "11"),
                ("00", "11"),
            ],
        ),
        _ => return Err(CliError::Validation(format!("unknown shape `{name}`"))),
    };
    Ok(c)
}

pub fn diamond_cmd(
    file: &InstanceFile,
    shape_name: Option<&str>,
    allow_violation: bool,
    limits: Limits,
) -> Result<Report, CliError> {
    let f = file.functor(file.two_category()?)?;
    let name = shape_name
        .or(file.shape.as_deref())
        .ok_or_else(|| CliError::Validation("no shape given".into()))?;
    let p = shape(file, name)?;
    let options = DiamondOptions {
        max_functors: limits.max_functors,
        max_premorphisms: limits.max_premorphisms,
        allow_hypothesis_violation: allow_violation,
    };
    let d = diamond_functor_with(&f, &p, options)?;
    let mut r = Report::new();
    r.field("shape", name)
        .field("hypotheses_hold", d.hypotheses.hold)
        .field("two_filtered", d.hypotheses.two_filtered)
        .field("pseudo_2_filtered", d.hypotheses.pseudo_2_filtered)
        .field("shape_connected", d.hypotheses.shape_connected);
    if let Some(note) = &d.hypotheses.note {
        r.field("hypothesis_note", note);
    }
    r.field("source_objects", d.source_objects)
        .field("source_morphisms", d.source_morphisms)
        .field("target_objects", d.target_objects)
        .field("target_morphisms", d.target_morphisms)
        .field("essentially_surjective", d.essentially_surjective)
        .field("full", d.full)
        .field("faithful", d.faithful);
    for failure in &d.equivalence.failures {
        r.field("failure", failure);
    }
    let eq = d.is_equivalence();
    r.verdict(
        if eq {
            "equivalence"
        } else {
            "not an equivalence"
        },
        eq,
    );
    Ok(r)
}

pub fn compare_classical_cmd(file: &InstanceFile, limits: Limits) -> Result<Report, CliError> {
    let f = file.functor(file.two_category()?)?;
    let c = compare_with_classical(&f, limits.build())?;
    let mut r = Report::new();
    r.field("bicolimit_objects", c.bicolimit_objects)
        .field("bicolimit_morphisms", c.bicolimit_morphisms)
        .field("classical_objects", c.classical_objects)
        .field("classical_morphisms", c.classical_morphisms)
        .field(
            "essentially_surjective",
            c.equivalence.essentially_surjective,
        )
        .field("full", c.equivalence.full)
        .field("faithful", c.equivalence.faithful);
    for failure in &c.equivalence.failures {
        r.field("failure", failure);
    }
    let eq = c.equivalence.is_equivalence();
    r.verdict(
        if eq {
            "equivalence"
        } else {
            "not an equivalence"
        },
        eq,
    );
    Ok(r)
}

/// An instance file for a generator family or a shipped fixture.
pub fn generate_instance(
    family: Option<&str>,
    fixture: Option<&str>,
    params: Params,
    seed: u64,
) -> Result<InstanceFile, CliError> {
    match (family, fixture) {
        (Some(name), None) => {
            let fam = Family::parse(name).ok_or_else(|| {
                let known: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
                CliError::Validation(format!(
                    "unknown family `{name}` (known: {})",
                    known.join(", ")
                ))
            })?;
            Ok(InstanceFile {
                category: generate::generate(fam, params, seed),
                ..Default::default()
            })
        }
        (None, Some(name)) => {
            let fx = generate::fixture(name)
                .ok_or_else(|| CliError::Validation(format!("unknown fixture `{name}`")))?;
            let (categories, functor) = fx.functor.to_data();
            Ok(InstanceFile {
                category: fx.category.data().clone(),
                functor: Some(functor),
                categories,
                ..Default::default()
            })
        }
        _ => Err(CliError::Parse(
            "give exactly one of --family and --fixture".into(),
        )),
    }
}
