//! Lie algebras by structure constants, adjoint actions, invariant forms and
//! the algebraic Schouten bracket on `∧g`.

mod algebra;
mod schouten;

pub use algebra::{is_coisotropic, LieAlgebra, Violation};
pub use schouten::{schouten, schouten_ext};

pub use crate::tensorspace::Subspace;
