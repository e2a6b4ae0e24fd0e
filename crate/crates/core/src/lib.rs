//! Exact rational computations with Lie bialgebras, Drinfeld doubles,
//! polyubles, the r-matrices `r⁽ⁿ⁾` on `gⁿ`, twists, and polynomial Poisson
//! bivector fields built from them.

pub mod bialg;
pub mod cli;
pub mod double;
pub mod error;
pub mod fixtures;
pub mod liealg;
pub mod polyfield;
pub mod polyuble;
pub mod tensorspace;

pub use error::{ForgeError, Result};
