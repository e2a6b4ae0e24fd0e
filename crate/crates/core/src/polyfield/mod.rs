//! Polynomial multivector fields on affine charts, the Schouten bracket, Lie
//! algebra actions by vector fields, and the Poisson structures built from
//! them: `−λ(r)`, mixed products, fusion products and their quasi-Poisson
//! counterparts.

mod action;
mod field;
mod mixed;
mod poly;
mod schouten;

pub use action::*;
pub use field::*;
pub use mixed::*;
pub use poly::*;
pub use schouten::*;
