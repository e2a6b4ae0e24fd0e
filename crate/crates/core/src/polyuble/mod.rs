//! Polyubles `g₍ₙ₎ ⊂ dⁿ`, the twisting elements `t_{n+1}`, the r-matrices
//! `r⁽ⁿ⁾ = Altⁿ(r) − Mixⁿ(r)` and the maps between them.

mod maps;
mod rpower;
mod uble;

pub use maps::*;
pub use rpower::*;
pub use uble::*;
