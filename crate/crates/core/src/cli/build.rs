//! `forge build`: derived structures written back out as manifests.

use super::export::fixture_model;
use super::manifest::{FieldKind, Model, NamedAction};
use crate::bialg::{cobracket_from_r, RMatrix};
use crate::double::build_double;
use crate::error::{ForgeError, Result};
use crate::polyfield::{apply_action, fusion, mixed_product_n, quasi_correspond, Chart, LieAction, PoissonSpace};
use crate::polyuble::{build_polyuble, r_angle, r_power, t_element, Side};

pub const TARGETS: [&str; 8] = ["double", "polyuble", "rn", "r-angle", "t-element", "mixed-bivector", "fusion", "quasi"];

/// Where `forge build` takes its r-matrix and action from.
pub enum Source<'a> {
    Fixture(&'a str),
    Model(Model),
}

fn source_model(src: Source<'_>) -> Result<Model> {
    match src {
        Source::Fixture(name) => fixture_model(name),
        Source::Model(m) => Ok(m),
    }
}

fn first_r(model: &Model) -> Result<(&str, &RMatrix)> {
    model
        .rmatrices
        .first()
        .map(|r| (r.name.as_str(), &r.r))
        .ok_or_else(|| ForgeError::InvalidArgument("the source manifest has no r-matrix".into()))
}

/// The first action linked to an r-matrix, together with that r-matrix.
fn first_action(model: &Model) -> Result<(&NamedAction, &RMatrix)> {
    model
        .actions
        .iter()
        .find_map(|a| a.rmatrix.as_deref().and_then(|n| model.rmatrix(n)).map(|r| (a, &r.r)))
        .ok_or_else(|| ForgeError::InvalidArgument("the source manifest has no action linked to an r-matrix".into()))
}

fn copies(act: &LieAction, r: &RMatrix, n: usize) -> Result<Vec<PoissonSpace>> {
    (1..=n)
        .map(|j| {
            let vars = act.chart().vars().iter().map(|v| format!("{v}{j}")).collect();
            let a = act.rename(&Chart::new(vars)?)?;
            PoissonSpace::new(apply_action(&a, r.tensor())?.neg(), a)
        })
        .collect()
}

/// Builds `target` with parameter `n` from the source.
pub fn build_target(target: &str, n: usize, src: Source<'_>) -> Result<Model> {
    if !TARGETS.contains(&target) {
        return Err(ForgeError::InvalidArgument(format!("unknown target {target:?}; expected one of {}", TARGETS.join(", "))));
    }
    let min = if target == "r-angle" { 3 } else { 2 };
    if n < min {
        return Err(ForgeError::InvalidArgument(format!("--n must be at least {min} for {target}")));
    }
    let model = source_model(src)?;
    let (rname, r) = first_r(&model)?;
    let g = r.algebra();
    let mut out = Model::default();
    match target {
        "double" => {
            let dbl = build_double(&cobracket_from_r(g, r.tensor())?)?;
            out.push_algebra("d", dbl.total());
            out.push_cobracket("delta_d", "d", dbl.cobracket());
            out.push_rmatrix("r_d", "d", dbl.r_d());
        }
        "polyuble" => {
            let dbl = build_double(&cobracket_from_r(g, r.tensor())?)?;
            let pu = build_polyuble(&dbl, n)?;
            let (gn, gd) = (format!("g({n})"), format!("g({n})*"));
            out.push_algebra(&format!("d^{n}"), pu.ambient());
            out.push_algebra(&gn, &pu.algebra(Side::G)?);
            out.push_algebra(&gd, &pu.algebra(Side::Dual)?);
            out.push_cobracket(&format!("delta_{gn}"), &gn, &pu.cobracket(Side::G)?);
            out.push_cobracket(&format!("delta_{gd}"), &gd, &pu.cobracket(Side::Dual)?);
            out.push_rmatrix(&format!("r_d^{n}"), &format!("d^{n}"), &RMatrix::new(pu.ambient(), pu.r_ambient()?)?);
        }
        "rn" => {
            let rn = r_power(r, n)?;
            let name = format!("g^{n}");
            out.push_algebra(&name, rn.algebra());
            out.push_rmatrix(&format!("{rname}^({n})"), &name, &rn.rmatrix()?);
        }
        "r-angle" => {
            let rn = r_power(r, n)?;
            let name = format!("g^{n}");
            out.push_algebra(&name, rn.algebra());
            out.push_rmatrix(&format!("{rname}<{n}>"), &name, &RMatrix::new(rn.algebra(), r_angle(r, n)?)?);
        }
        "t-element" => {
            let dbl = build_double(&cobracket_from_r(g, r.tensor())?)?;
            let pu = build_polyuble(&dbl, n)?;
            let name = format!("d^{n}");
            out.push_algebra(&name, pu.ambient());
            out.push_tensor(&format!("t_{n}"), &name, &t_element(&dbl, n)?);
        }
        "mixed-bivector" => {
            let (act, r) = first_action(&model)?;
            let mp = mixed_product_n(&copies(&act.action, r, n)?, r)?;
            let rn = r_power(r, n)?;
            let name = format!("g^{n}");
            out.push_algebra(&name, rn.algebra());
            out.push_rmatrix(&format!("{}^({n})", act.rmatrix.as_deref().unwrap_or("r")), &name, &rn.rmatrix()?);
            out.push_action(&format!("{}^{n}", act.name), &name, &mp.action, Some(&format!("{}^({n})", act.rmatrix.as_deref().unwrap_or("r"))));
            out.push_field("pi", &mp.pi, FieldKind::Poisson);
        }
        "fusion" | "quasi" => {
            let (act, r) = first_action(&model)?;
            let rn_name = act.rmatrix.clone().unwrap_or_default();
            let fused = fusion(&copies(&act.action, r, n)?, r)?;
            out.push_algebra(&act.algebra, r.algebra());
            out.push_rmatrix(&rn_name, &act.algebra, r);
            // The diagonal action is not admissible for r, so it is not linked.
            out.push_action(&format!("{}_fused{n}", act.name), &act.algebra, &fused.action, None);
            if target == "fusion" {
                out.push_field("pi", &fused.pi, FieldKind::Poisson);
            } else {
                out.push_field("Q", &quasi_correspond(&fused, r)?, FieldKind::QuasiPoisson);
            }
        }
        _ => unreachable!("target checked above"),
    }
    Ok(out)
}
