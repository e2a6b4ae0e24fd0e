//! The fixtures shipped as manifests.

use super::manifest::{algebra_doc, Manifest, Model};
use crate::error::{ForgeError, Result};
use crate::fixtures::{self, mobius_factor, RootDatum};
use crate::polyfield::Chart;

pub const FIXTURE_NAMES: [&str; 5] = ["abelian", "axb", "sl2", "sl3", "broken-jacobi"];

/// The model behind `forge fixtures <name>`.
pub fn fixture_model(name: &str) -> Result<Model> {
    let mut model = Model::default();
    match name {
        "abelian" => {
            let (r, cb) = fixtures::abelian_bialgebra(2)?;
            model.push_algebra("abelian", r.algebra());
            model.push_rmatrix("r0", "abelian", &r);
            model.push_cobracket("delta0", "abelian", &cb);
        }
        "axb" => {
            let (r, cb) = fixtures::ax_plus_b_bialgebra()?;
            model.push_algebra("axb", r.algebra());
            model.push_rmatrix("r", "axb", &r);
            model.push_cobracket("delta_r", "axb", &cb);
        }
        "sl2" => {
            let datum = RootDatum::type_a(1)?;
            let (r, cb) = fixtures::sl2()?;
            let act = mobius_factor(&datum, 1)?.rename(&Chart::new(vec!["z".into()])?)?;
            model.push_algebra("sl2", r.algebra());
            model.push_rmatrix("r_st", "sl2", &r);
            model.push_cobracket("delta_st", "sl2", &cb);
            model.push_action("mobius", "sl2", &act, Some("r_st"));
        }
        "sl3" => {
            let (r, cb) = fixtures::sl3()?;
            model.push_algebra("sl3", r.algebra());
            model.push_rmatrix("r_st", "sl3", &r);
            model.push_cobracket("delta_st", "sl3", &cb);
        }
        "broken-jacobi" => return broken_jacobi(),
        _ => {
            return Err(ForgeError::InvalidArgument(format!(
                "unknown fixture {name:?}; expected one of {}",
                FIXTURE_NAMES.join(", ")
            )))
        }
    }
    Ok(model)
}

/// `sl₂` with `[h, e] = 3e`, which breaks the Jacobi identity at `(h, e, f)`.
fn broken_jacobi() -> Result<Model> {
    let (r, _) = fixtures::sl2()?;
    let mut doc = algebra_doc("sl2_broken", r.algebra());
    doc.form.clear();
    for b in &mut doc.brackets {
        if b.x == "h" && b.y == "e" {
            b.value.insert("e".into(), "3".into());
        }
    }
    let manifest = Manifest { algebras: vec![doc], ..Manifest::empty() };
    Model::from_manifest(&manifest)
}

pub fn fixture_json(name: &str) -> Result<String> {
    Ok(fixture_model(name)?.to_manifest().to_json())
}
