//! The JSON manifest: algebras, forms, r-matrices, cobrackets, actions,
//! fields and tensors, with every rational written as a `"p"` or `"p/q"`
//! string so that exact values survive serialization.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::bialg::{Cobracket, RMatrix};
use crate::error::{ForgeError, Result};
use crate::liealg::LieAlgebra;
use crate::polyfield::{ActionSide, Chart, LieAction, Poly, PolyField};
use crate::tensorspace::{format_scalar, parse_scalar, Space, Tensor};

pub const MANIFEST_VERSION: u64 = 1;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub version: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub algebras: Vec<AlgebraDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub rmatrices: Vec<RMatrixDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cobrackets: Vec<CobracketDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub actions: Vec<ActionDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub fields: Vec<FieldDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tensors: Vec<TensorDoc>,
    /// Suites run when `verify` is given no `--suite`; empty means all.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<String>,
}

/// `[x, y] = Σ value[k]·k`, listed once per unordered pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketDoc {
    pub x: String,
    pub y: String,
    pub value: BTreeMap<String, String>,
}

/// One coefficient of a tensor, indexed by basis labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryDoc {
    pub index: Vec<String>,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub name: String,
    pub basis: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<BracketDoc>,
    /// Invariant form, upper triangle only.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub form: Vec<EntryDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RMatrixDoc {
    pub name: String,
    pub algebra: String,
    pub entries: Vec<EntryDoc>,
}

/// `δ(basis) = Σ value·(e_i ∧ e_j)` over increasing pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WedgeValueDoc {
    pub basis: String,
    pub wedge: Vec<EntryDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CobracketDoc {
    pub name: String,
    pub algebra: String,
    pub values: Vec<WedgeValueDoc>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SideDoc {
    Left,
    Right,
}

/// `coeff · Π var^power`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub coeff: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub powers: BTreeMap<String, u32>,
}

/// The vector field of one basis vector: `Σ_v components[v] ∂_v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VectorFieldDoc {
    pub basis: String,
    pub components: BTreeMap<String, Vec<TermDoc>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionDoc {
    pub name: String,
    pub algebra: String,
    pub side: SideDoc,
    pub chart: Vec<String>,
    pub fields: Vec<VectorFieldDoc>,
    /// The r-matrix for which the action is admissible, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rmatrix: Option<String>,
}

/// `terms · ∂_{index[0]} ∧ …`, one entry per increasing variable tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentDoc {
    pub index: Vec<String>,
    pub terms: Vec<TermDoc>,
}

/// What identity a bivector field is meant to satisfy.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FieldKind {
    /// `[π, π] = 0`.
    #[default]
    Poisson,
    /// `[Q, Q] = λ(φ_s)` for the r-matrix of the acting algebra.
    QuasiPoisson,
}

impl FieldKind {
    fn is_poisson(&self) -> bool {
        *self == FieldKind::Poisson
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldDoc {
    pub name: String,
    pub chart: Vec<String>,
    pub degree: usize,
    #[serde(default, skip_serializing_if = "FieldKind::is_poisson")]
    pub kind: FieldKind,
    pub components: Vec<ComponentDoc>,
}

/// A tensor of the given order on the space of a listed algebra, all
/// entries written out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TensorDoc {
    pub name: String,
    pub algebra: String,
    pub order: usize,
    pub entries: Vec<EntryDoc>,
}

impl Manifest {
    pub fn empty() -> Manifest {
        Manifest { version: MANIFEST_VERSION, ..Manifest::default() }
    }

    /// Parses a document, rejecting unknown versions before the schema.
    pub fn from_json(text: &str) -> Result<Manifest> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(json_error)?;
        match value.get("version").and_then(serde_json::Value::as_u64) {
            Some(MANIFEST_VERSION) => {}
            Some(v) => return Err(ForgeError::UnknownVersion(v)),
            None => return Err(ForgeError::Parse { field: "version".into(), message: "missing or not an integer".into() }),
        }
        serde_json::from_str(text).map_err(json_error)
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("manifest serializes");
        s.push('\n');
        s
    }
}

fn json_error(e: serde_json::Error) -> ForgeError {
    ForgeError::Parse { field: format!("line {} column {}", e.line(), e.column()), message: e.to_string() }
}

pub fn load(path: &Path) -> Result<Manifest> {
    let text = std::fs::read_to_string(path).map_err(|e| ForgeError::Io(format!("{}: {e}", path.display())))?;
    Manifest::from_json(&text)
}

pub fn save(manifest: &Manifest, path: &Path) -> Result<()> {
    std::fs::write(path, manifest.to_json()).map_err(|e| ForgeError::Io(format!("{}: {e}", path.display())))
}

pub struct NamedAlgebra {
    pub name: String,
    pub algebra: LieAlgebra,
}

pub struct NamedRMatrix {
    pub name: String,
    pub algebra: String,
    pub r: RMatrix,
}

pub struct NamedCobracket {
    pub name: String,
    pub algebra: String,
    pub cobracket: Cobracket,
}

pub struct NamedAction {
    pub name: String,
    pub algebra: String,
    pub action: LieAction,
    pub rmatrix: Option<String>,
}

pub struct NamedField {
    pub name: String,
    pub field: PolyField,
    pub kind: FieldKind,
}

pub struct NamedTensor {
    pub name: String,
    pub algebra: String,
    pub tensor: Tensor,
}

/// A manifest with every name resolved and every rational parsed. Algebras
/// are built without the Jacobi check so that broken inputs reach the
/// verifier instead of failing to load.
#[derive(Default)]
pub struct Model {
    pub algebras: Vec<NamedAlgebra>,
    pub rmatrices: Vec<NamedRMatrix>,
    pub cobrackets: Vec<NamedCobracket>,
    pub actions: Vec<NamedAction>,
    pub fields: Vec<NamedField>,
    pub tensors: Vec<NamedTensor>,
    pub checks: Vec<String>,
}

fn parse_err(field: &str, message: impl Into<String>) -> ForgeError {
    ForgeError::Parse { field: field.to_string(), message: message.into() }
}

fn label_index(space: &Space, label: &str, field: &str) -> Result<usize> {
    space.index_of(label).ok_or_else(|| parse_err(field, format!("unknown basis label {label:?}")))
}

fn unique<'a>(names: impl Iterator<Item = &'a String>, section: &str) -> Result<()> {
    let mut seen = std::collections::BTreeSet::new();
    for (i, n) in names.enumerate() {
        if !seen.insert(n) {
            return Err(parse_err(&format!("{section}[{i}].name"), format!("duplicate name {n:?}")));
        }
    }
    Ok(())
}

fn parse_entries(space: &Space, order: usize, entries: &[EntryDoc], path: &str) -> Result<Tensor> {
    let mut t = Tensor::zero_on(space, order);
    for (i, e) in entries.iter().enumerate() {
        let field = format!("{path}[{i}]");
        if e.index.len() != order {
            return Err(parse_err(&format!("{field}.index"), format!("expected {order} labels, found {}", e.index.len())));
        }
        let idx = e.index.iter().map(|l| label_index(space, l, &format!("{field}.index"))).collect::<Result<Vec<_>>>()?;
        t.add_entry(idx, parse_scalar(&e.value, &format!("{field}.value"))?);
    }
    Ok(t)
}

fn parse_poly(chart: &Chart, terms: &[TermDoc], path: &str) -> Result<Poly> {
    let mut p = Poly::zero(chart.dim());
    for (i, t) in terms.iter().enumerate() {
        let field = format!("{path}[{i}]");
        let mut exp = vec![0; chart.dim()];
        for (var, k) in &t.powers {
            let v = chart.vars().iter().position(|x| x == var).ok_or_else(|| parse_err(&format!("{field}.powers"), format!("unknown variable {var:?}")))?;
            exp[v] += k;
        }
        p.add_term(exp, parse_scalar(&t.coeff, &format!("{field}.coeff"))?);
    }
    Ok(p)
}

fn var_index(chart: &Chart, var: &str, field: &str) -> Result<usize> {
    chart.vars().iter().position(|x| x == var).ok_or_else(|| parse_err(field, format!("unknown variable {var:?}")))
}

fn entries_doc(t: &Tensor) -> Vec<EntryDoc> {
    t.entries()
        .map(|(idx, x)| EntryDoc { index: idx.iter().map(|&i| t.space(0).label(i)).collect(), value: format_scalar(x) })
        .collect()
}

fn poly_doc(p: &Poly, chart: &Chart) -> Vec<TermDoc> {
    p.terms()
        .map(|(e, c)| TermDoc {
            coeff: format_scalar(c),
            powers: e.iter().enumerate().filter(|(_, k)| **k > 0).map(|(v, k)| (chart.vars()[v].clone(), *k)).collect(),
        })
        .collect()
}

fn field_components(f: &PolyField) -> Vec<ComponentDoc> {
    let chart = f.chart();
    f.components()
        .map(|(idx, p)| ComponentDoc { index: idx.iter().map(|&v| chart.vars()[v].clone()).collect(), terms: poly_doc(p, chart) })
        .collect()
}

fn parse_field(chart: &Chart, degree: usize, comps: &[ComponentDoc], path: &str) -> Result<PolyField> {
    let mut f = PolyField::zero(chart, degree);
    for (i, c) in comps.iter().enumerate() {
        let field = format!("{path}[{i}]");
        if c.index.len() != degree {
            return Err(parse_err(&format!("{field}.index"), format!("expected {degree} variables")));
        }
        let idx = c.index.iter().map(|v| var_index(chart, v, &format!("{field}.index"))).collect::<Result<Vec<_>>>()?;
        let mut sorted = idx.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(parse_err(&format!("{field}.index"), "repeated variable"));
        }
        f.add_term(&idx, parse_poly(chart, &c.terms, &format!("{field}.terms"))?);
    }
    Ok(f)
}

impl Model {
    pub fn algebra(&self, name: &str) -> Option<&LieAlgebra> {
        self.algebras.iter().find(|a| a.name == name).map(|a| &a.algebra)
    }

    pub fn rmatrix(&self, name: &str) -> Option<&NamedRMatrix> {
        self.rmatrices.iter().find(|r| r.name == name)
    }

    pub fn from_manifest(doc: &Manifest) -> Result<Model> {
        if doc.version != MANIFEST_VERSION {
            return Err(ForgeError::UnknownVersion(doc.version));
        }
        unique(doc.algebras.iter().map(|a| &a.name), "algebras")?;
        unique(doc.rmatrices.iter().map(|a| &a.name), "rmatrices")?;
        unique(doc.cobrackets.iter().map(|a| &a.name), "cobrackets")?;
        unique(doc.actions.iter().map(|a| &a.name), "actions")?;
        unique(doc.fields.iter().map(|a| &a.name), "fields")?;
        unique(doc.tensors.iter().map(|a| &a.name), "tensors")?;
        let mut model = Model { checks: doc.checks.clone(), ..Model::default() };
        for (ai, a) in doc.algebras.iter().enumerate() {
            let path = format!("algebras[{ai}]");
            let space = Space::new(a.name.clone(), a.basis.clone()).map_err(|e| parse_err(&format!("{path}.basis"), e.to_string()))?;
            let mut c = Tensor::zero_on(&space, 3);
            for (bi, b) in a.brackets.iter().enumerate() {
                let field = format!("{path}.brackets[{bi}]");
                let i = label_index(&space, &b.x, &format!("{field}.x"))?;
                let j = label_index(&space, &b.y, &format!("{field}.y"))?;
                if i == j {
                    return Err(parse_err(&field, "bracket of a basis vector with itself"));
                }
                for (k, v) in &b.value {
                    let kk = label_index(&space, k, &format!("{field}.value"))?;
                    let x = parse_scalar(v, &format!("{field}.value.{k}"))?;
                    c.add_entry(vec![i, j, kk], x.clone());
                    c.add_entry(vec![j, i, kk], -x);
                }
            }
            let form = if a.form.is_empty() {
                None
            } else {
                let upper = parse_entries(&space, 2, &a.form, &format!("{path}.form"))?;
                let mut full = Tensor::zero_on(&space, 2);
                for (idx, x) in upper.entries() {
                    full.add_entry(idx.clone(), x.clone());
                    if idx[0] != idx[1] {
                        full.add_entry(vec![idx[1], idx[0]], x.clone());
                    }
                }
                Some(full)
            };
            let algebra = LieAlgebra::new_unchecked(space, c, form)?;
            model.algebras.push(NamedAlgebra { name: a.name.clone(), algebra });
        }
        let resolve = |model: &Model, name: &str, field: &str| -> Result<LieAlgebra> {
            model.algebra(name).cloned().ok_or_else(|| parse_err(field, format!("unknown algebra {name:?}")))
        };
        for (i, r) in doc.rmatrices.iter().enumerate() {
            let path = format!("rmatrices[{i}]");
            let g = resolve(&model, &r.algebra, &format!("{path}.algebra"))?;
            let t = parse_entries(g.space(), 2, &r.entries, &format!("{path}.entries"))?;
            let r_mat = RMatrix::new(&g, t)?;
            model.rmatrices.push(NamedRMatrix { name: r.name.clone(), algebra: r.algebra.clone(), r: r_mat });
        }
        for (i, cb) in doc.cobrackets.iter().enumerate() {
            let path = format!("cobrackets[{i}]");
            let g = resolve(&model, &cb.algebra, &format!("{path}.algebra"))?;
            let mut values = vec![Tensor::zero_on(g.space(), 2); g.dim()];
            let mut seen = vec![false; g.dim()];
            for (vi, v) in cb.values.iter().enumerate() {
                let field = format!("{path}.values[{vi}]");
                let b = label_index(g.space(), &v.basis, &format!("{field}.basis"))?;
                if seen[b] {
                    return Err(parse_err(&format!("{field}.basis"), format!("{} listed twice", v.basis)));
                }
                seen[b] = true;
                let upper = parse_entries(g.space(), 2, &v.wedge, &format!("{field}.wedge"))?;
                for (idx, x) in upper.entries() {
                    if idx[0] >= idx[1] {
                        return Err(parse_err(&format!("{field}.wedge"), "wedge indices must increase"));
                    }
                    values[b].add_entry(idx.clone(), x.clone());
                    values[b].add_entry(vec![idx[1], idx[0]], -x.clone());
                }
            }
            let cobracket = Cobracket::new_unchecked(g, values)?;
            model.cobrackets.push(NamedCobracket { name: cb.name.clone(), algebra: cb.algebra.clone(), cobracket });
        }
        for (i, a) in doc.actions.iter().enumerate() {
            let path = format!("actions[{i}]");
            let g = resolve(&model, &a.algebra, &format!("{path}.algebra"))?;
            let chart = Chart::new(a.chart.clone()).map_err(|e| parse_err(&format!("{path}.chart"), e.to_string()))?;
            let mut fields = vec![PolyField::zero(&chart, 1); g.dim()];
            for (fi, f) in a.fields.iter().enumerate() {
                let field = format!("{path}.fields[{fi}]");
                let b = label_index(g.space(), &f.basis, &format!("{field}.basis"))?;
                let mut v = PolyField::zero(&chart, 1);
                for (var, terms) in &f.components {
                    let k = var_index(&chart, var, &format!("{field}.components"))?;
                    v.add_term(&[k], parse_poly(&chart, terms, &format!("{field}.components.{var}"))?);
                }
                fields[b] = fields[b].add(&v)?;
            }
            if let Some(r) = &a.rmatrix {
                let named = model.rmatrix(r).ok_or_else(|| parse_err(&format!("{path}.rmatrix"), format!("unknown r-matrix {r:?}")))?;
                if named.algebra != a.algebra {
                    return Err(parse_err(&format!("{path}.rmatrix"), format!("{r} lives on {}", named.algebra)));
                }
            }
            let side = match a.side {
                SideDoc::Left => ActionSide::Left,
                SideDoc::Right => ActionSide::Right,
            };
            let action = LieAction::new_unchecked(&g, &chart, fields, side)?;
            model.actions.push(NamedAction { name: a.name.clone(), algebra: a.algebra.clone(), action, rmatrix: a.rmatrix.clone() });
        }
        for (i, f) in doc.fields.iter().enumerate() {
            let path = format!("fields[{i}]");
            let chart = Chart::new(f.chart.clone()).map_err(|e| parse_err(&format!("{path}.chart"), e.to_string()))?;
            let field = parse_field(&chart, f.degree, &f.components, &format!("{path}.components"))?;
            model.fields.push(NamedField { name: f.name.clone(), field, kind: f.kind });
        }
        for (i, t) in doc.tensors.iter().enumerate() {
            let path = format!("tensors[{i}]");
            let g = resolve(&model, &t.algebra, &format!("{path}.algebra"))?;
            let tensor = parse_entries(g.space(), t.order, &t.entries, &format!("{path}.entries"))?;
            model.tensors.push(NamedTensor { name: t.name.clone(), algebra: t.algebra.clone(), tensor });
        }
        Ok(model)
    }

    pub fn to_manifest(&self) -> Manifest {
        let mut doc = Manifest::empty();
        for a in &self.algebras {
            doc.algebras.push(algebra_doc(&a.name, &a.algebra));
        }
        for r in &self.rmatrices {
            doc.rmatrices.push(RMatrixDoc { name: r.name.clone(), algebra: r.algebra.clone(), entries: entries_doc(r.r.tensor()) });
        }
        for c in &self.cobrackets {
            doc.cobrackets.push(cobracket_doc(&c.name, &c.algebra, &c.cobracket));
        }
        for a in &self.actions {
            doc.actions.push(action_doc(&a.name, &a.algebra, &a.action, a.rmatrix.clone()));
        }
        for f in &self.fields {
            doc.fields.push(field_doc(&f.name, &f.field, f.kind));
        }
        for t in &self.tensors {
            doc.tensors.push(TensorDoc { name: t.name.clone(), algebra: t.algebra.clone(), order: t.tensor.order(), entries: entries_doc(&t.tensor) });
        }
        doc.checks = self.checks.clone();
        doc
    }

    pub fn push_algebra(&mut self, name: &str, g: &LieAlgebra) {
        self.algebras.push(NamedAlgebra { name: name.into(), algebra: g.clone() });
    }

    pub fn push_rmatrix(&mut self, name: &str, algebra: &str, r: &RMatrix) {
        self.rmatrices.push(NamedRMatrix { name: name.into(), algebra: algebra.into(), r: r.clone() });
    }

    pub fn push_cobracket(&mut self, name: &str, algebra: &str, cb: &Cobracket) {
        self.cobrackets.push(NamedCobracket { name: name.into(), algebra: algebra.into(), cobracket: cb.clone() });
    }

    pub fn push_action(&mut self, name: &str, algebra: &str, act: &LieAction, rmatrix: Option<&str>) {
        self.actions.push(NamedAction { name: name.into(), algebra: algebra.into(), action: act.clone(), rmatrix: rmatrix.map(String::from) });
    }

    pub fn push_field(&mut self, name: &str, f: &PolyField, kind: FieldKind) {
        self.fields.push(NamedField { name: name.into(), field: f.clone(), kind });
    }

    pub fn push_tensor(&mut self, name: &str, algebra: &str, t: &Tensor) {
        self.tensors.push(NamedTensor { name: name.into(), algebra: algebra.into(), tensor: t.clone() });
    }
}

pub fn algebra_doc(name: &str, g: &LieAlgebra) -> AlgebraDoc {
    let n = g.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let value: BTreeMap<String, String> = g.bracket_basis(i, j).iter().map(|(k, c)| (g.label(*k), format_scalar(c))).collect();
            if !value.is_empty() {
                brackets.push(BracketDoc { x: g.label(i), y: g.label(j), value });
            }
        }
    }
    let form = g
        .form()
        .map(|f| {
            f.entries()
                .filter(|(idx, _)| idx[0] <= idx[1])
                .map(|(idx, x)| EntryDoc { index: vec![g.label(idx[0]), g.label(idx[1])], value: format_scalar(x) })
                .collect()
        })
        .unwrap_or_default();
    AlgebraDoc { name: name.into(), basis: g.space().labels(), brackets, form }
}

pub fn cobracket_doc(name: &str, algebra: &str, cb: &Cobracket) -> CobracketDoc {
    let g = cb.algebra();
    let values = (0..g.dim())
        .map(|b| WedgeValueDoc {
            basis: g.label(b),
            wedge: cb
                .value(b)
                .entries()
                .filter(|(idx, _)| idx[0] < idx[1])
                .map(|(idx, x)| EntryDoc { index: vec![g.label(idx[0]), g.label(idx[1])], value: format_scalar(x) })
                .collect(),
        })
        .collect();
    CobracketDoc { name: name.into(), algebra: algebra.into(), values }
}

pub fn action_doc(name: &str, algebra: &str, act: &LieAction, rmatrix: Option<String>) -> ActionDoc {
    let chart = act.chart();
    let g = act.algebra();
    let fields = (0..g.dim())
        .map(|b| VectorFieldDoc {
            basis: g.label(b),
            components: act.field(b).components().map(|(idx, p)| (chart.vars()[idx[0]].clone(), poly_doc(p, chart))).collect(),
        })
        .collect();
    let side = match act.side() {
        ActionSide::Left => SideDoc::Left,
        ActionSide::Right => SideDoc::Right,
    };
    ActionDoc { name: name.into(), algebra: algebra.into(), side, chart: chart.vars().to_vec(), fields, rmatrix }
}

pub fn field_doc(name: &str, f: &PolyField, kind: FieldKind) -> FieldDoc {
    FieldDoc { name: name.into(), chart: f.chart().vars().to_vec(), degree: f.degree(), kind, components: field_components(f) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_manifest_is_empty_model() {
        let m = Manifest::from_json(r#"{"version": 1}"#).unwrap();
        let model = Model::from_manifest(&m).unwrap();
        assert!(model.algebras.is_empty() && model.rmatrices.is_empty() && model.actions.is_empty());
        assert_eq!(model.to_manifest().to_json(), "{\n  \"version\": 1\n}\n");
    }

    #[test]
    fn version_is_checked_first() {
        assert_eq!(Manifest::from_json(r#"{"version": 7, "nonsense": true}"#), Err(ForgeError::UnknownVersion(7)));
    }

    #[test]
    fn zero_denominator_names_the_field() {
        let text = r#"{"version": 1, "algebras": [{"name": "a", "basis": ["x", "y"],
            "brackets": [{"x": "x", "y": "y", "value": {"y": "1/0"}}]}]}"#;
        let err = Model::from_manifest(&Manifest::from_json(text).unwrap()).err().unwrap();
        match err {
            ForgeError::Parse { field, .. } => assert_eq!(field, "algebras[0].brackets[0].value.y"),
            other => panic!("unexpected {other:?}"),
        }
    }
}
