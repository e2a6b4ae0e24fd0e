//! Canonical fixtures: abelian algebras, `ax+b`, `sl_n` with trace forms and
//! standard r-matrices, and flag-chart actions.

mod charts;
mod rootdatum;

#[cfg(feature = "sl3-charts")]
pub use charts::flag_action;
pub use charts::{flag_bivector, mobius_action, mobius_factor, stabilizer_at, stabilizers_coisotropic};
pub use rootdatum::{standard_bialgebra, standard_r, RootDatum};

use crate::bialg::{cobracket_from_r, Cobracket, RMatrix};
use crate::error::Result;
use crate::liealg::LieAlgebra;
use crate::tensorspace::{int, wedge, Space, Tensor};

/// Abelian algebra of the given dimension, labels `a1, a2, …`.
pub fn abelian(dim: usize) -> LieAlgebra {
    LieAlgebra::abelian(Space::numbered("abelian", "a", dim))
}

/// Abelian algebra with zero r-matrix and zero cobracket.
pub fn abelian_bialgebra(dim: usize) -> Result<(RMatrix, Cobracket)> {
    let g = abelian(dim);
    let r = RMatrix::new(&g, Tensor::zero_on(g.space(), 2))?;
    Ok((r, Cobracket::zero(g)))
}

/// `ax+b`: basis `x, y` with `[x, y] = y`.
pub fn ax_plus_b() -> LieAlgebra {
    let space = Space::new("axb", vec!["x".into(), "y".into()]).expect("distinct labels");
    LieAlgebra::from_brackets(space, &[(0, 1, 1, int(1))], None).expect("valid structure constants")
}

/// `ax+b` with the triangular r-matrix `x∧y`.
pub fn ax_plus_b_bialgebra() -> Result<(RMatrix, Cobracket)> {
    let g = ax_plus_b();
    let x = Tensor::basis(g.space(), 0);
    let y = Tensor::basis(g.space(), 1);
    let r = RMatrix::new(&g, wedge(&[x, y])?)?;
    let cb = cobracket_from_r(&g, r.tensor())?;
    Ok((r, cb))
}

pub fn sl2() -> Result<(RMatrix, Cobracket)> {
    standard_bialgebra(&RootDatum::type_a(1)?)
}

pub fn sl3() -> Result<(RMatrix, Cobracket)> {
    standard_bialgebra(&RootDatum::type_a(2)?)
}
