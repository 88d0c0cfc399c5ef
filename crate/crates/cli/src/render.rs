//! Serializable views of library results, and their plain-text forms.

use std::fmt::Write as _;

use kmcover::cartan::identify_finite_type;
use kmcover::{
    CartanMatrix, CartanType, CartanViolation, CenterGenerators, CenterStructure, FiniteAbelianGroup, Int,
    ParabolicReport, Structure, TypeKind,
};
use serde::{Serialize, Serializer};

/// Integers are JSON numbers when they fit in `i64`, strings otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonInt(pub Int);

impl Serialize for JsonInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(v) => s.serialize_i64(v),
            Err(_) => s.serialize_str(&self.0.to_string()),
        }
    }
}

fn ints(values: &[Int]) -> Vec<JsonInt> {
    values.iter().cloned().map(JsonInt).collect()
}

#[derive(Serialize)]
pub struct GroupView {
    pub invariant_factors: Vec<JsonInt>,
    pub order: JsonInt,
}

impl From<&FiniteAbelianGroup> for GroupView {
    fn from(g: &FiniteAbelianGroup) -> Self {
        Self {
            invariant_factors: ints(g.invariant_factors()),
            order: JsonInt(g.order()),
        }
    }
}

#[derive(Serialize)]
pub struct GeneratorView {
    /// Coweight coordinates as `p/q` strings.
    pub coweight: Vec<String>,
    pub order: JsonInt,
}

#[derive(Serialize)]
pub struct CenterView {
    pub finite_part: GroupView,
    pub torus_rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<GeneratorView>>,
}

impl CenterView {
    pub fn new(c: &CenterStructure, generators: Option<&CenterGenerators>) -> Self {
        Self {
            finite_part: (&c.finite_part).into(),
            torus_rank: c.torus_rank,
            generators: generators.map(|g| {
                g.generators
                    .iter()
                    .map(|(v, order)| GeneratorView {
                        coweight: v.iter().map(ToString::to_string).collect(),
                        order: JsonInt(order.clone()),
                    })
                    .collect()
            }),
        }
    }
}

#[derive(Serialize)]
pub struct ComponentView {
    pub labels: Vec<String>,
    #[serde(rename = "type")]
    pub kind: String,
    pub family: Option<String>,
}

#[derive(Serialize)]
pub struct ReportView {
    pub subset: Vec<String>,
    pub structure: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<GroupView>,
    pub det_levi: JsonInt,
    pub levi_components: Vec<ComponentView>,
    pub parabolic_center: CenterView,
    pub torus_factor_rank: usize,
}

fn labels_of(a: &CartanMatrix, members: &[usize]) -> Vec<String> {
    members.iter().map(|&i| a.label(i).to_string()).collect()
}

fn structure_name(s: Structure) -> &'static str {
    match s {
        Structure::Split => "split",
        Structure::Semidirect => "semidirect",
    }
}

impl ReportView {
    pub fn new(a: &CartanMatrix, r: &ParabolicReport) -> Self {
        Self {
            subset: a.subset_labels(&r.subset),
            structure: structure_name(r.structure),
            gamma: r.gamma.as_ref().map(Into::into),
            det_levi: JsonInt(r.det_levi.clone()),
            levi_components: r
                .levi_components
                .iter()
                .map(|c| ComponentView {
                    labels: labels_of(a, &c.members),
                    kind: c.kind.to_string(),
                    family: c.family.map(|f| f.to_string()),
                })
                .collect(),
            parabolic_center: CenterView::new(&r.parabolic_center, None),
            torus_factor_rank: r.torus_factor_rank,
        }
    }
}

#[derive(Serialize)]
pub struct ClassifyView {
    #[serde(rename = "type")]
    pub kind: String,
    pub components: Vec<ComponentView>,
}

impl ClassifyView {
    pub fn new(a: &CartanMatrix, t: &CartanType) -> Self {
        Self {
            kind: t.overall.to_string(),
            components: t
                .per_component
                .iter()
                .map(|(members, kind)| ComponentView {
                    labels: labels_of(a, members),
                    kind: kind.to_string(),
                    family: finite_name(a, members, *kind),
                })
                .collect(),
        }
    }
}

fn finite_name(a: &CartanMatrix, members: &[usize], kind: TypeKind) -> Option<String> {
    if kind != TypeKind::Finite {
        return None;
    }
    let sub = CartanMatrix::new(a.matrix().submatrix(members, members)).ok()?;
    let named = identify_finite_type(&sub).ok()?;
    named.first().map(|(_, f)| f.to_string())
}

#[derive(Serialize)]
pub struct ViolationView {
    pub row: usize,
    pub col: usize,
    pub message: String,
}

#[derive(Serialize)]
pub struct ValidateView {
    pub valid: bool,
    pub n: usize,
    pub violations: Vec<ViolationView>,
}

impl ValidateView {
    pub fn new(n: usize, violations: &[CartanViolation]) -> Self {
        Self {
            valid: violations.is_empty(),
            n,
            violations: violations
                .iter()
                .map(|v| {
                    let (r, c) = v.position();
                    ViolationView {
                        row: r + 1,
                        col: c + 1,
                        message: v.to_string(),
                    }
                })
                .collect(),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct EnumerateSummary {
    pub digest: String,
    pub n: usize,
    pub subsets: u64,
    pub written: u64,
    pub skipped: u64,
    pub split: u64,
    pub semidirect: u64,
}

pub fn braces(labels: &[String]) -> String {
    format!("{{{}}}", labels.join(", "))
}

pub fn center_line(c: &CenterStructure) -> String {
    format!("finite part: {}; torus rank: {}", c.finite_part, c.torus_rank)
}

pub fn report_text(a: &CartanMatrix, r: &ParabolicReport) -> String {
    let mut out = String::new();
    let mut row = |key: &str, value: String| writeln!(out, "{key:<19}{value}").unwrap();
    row("subset", braces(&a.subset_labels(&r.subset)));
    row("det A_I", r.det_levi.to_string());
    row("structure", structure_name(r.structure).to_string());
    row(
        "gamma",
        r.gamma
            .as_ref()
            .map_or_else(|| "n/a (det A_I = 0)".to_string(), ToString::to_string),
    );
    if r.levi_components.is_empty() {
        row("levi components", "none".into());
    }
    for (k, c) in r.levi_components.iter().enumerate() {
        let name = c.family.map_or_else(|| c.kind.to_string(), |f| f.to_string());
        let key = if k == 0 { "levi components" } else { "" };
        row(key, format!("{} {name}", braces(&labels_of(a, &c.members))));
    }
    row("parabolic center", center_line(&r.parabolic_center));
    row("torus factor rank", r.torus_factor_rank.to_string());
    out
}

pub fn classify_text(a: &CartanMatrix, t: &CartanType) -> String {
    let mut out = format!("type: {}\n", t.overall);
    for (members, kind) in &t.per_component {
        let name = finite_name(a, members, *kind).map_or_else(String::new, |f| format!(" ({f})"));
        writeln!(out, "component {}: {kind}{name}", braces(&labels_of(a, members))).unwrap();
    }
    out
}

pub fn summary_text(s: &EnumerateSummary) -> String {
    format!(
        "{} subsets of a rank {} matrix ({}): {} written, {} already cataloged; {} split, {} semidirect\n",
        s.subsets, s.n, s.digest, s.written, s.skipped, s.split, s.semidirect
    )
}
