//! Cobrackets, r-matrices and the classical Yang–Baxter operator, twists.

mod cobracket;
mod rmatrix;
mod twist;

pub use cobracket::{cobracket_from_r, dual_bialgebra, Cobracket, ProductBialgebra};
pub use rmatrix::{
    cyb, f_pm_pairing, f_pm_pairing_alt, is_ad_invariant, is_factorizable, is_quasitriangular, r_from_f_pm, DualPair,
    RMatrix,
};
pub use twist::{
    block_projection, check_twist, diagonal_block, is_mixed_twist, project_pj, twist_cobracket, twist_cobracket_alt,
    TwistElement,
};
