//! Exact rational scalars, based spaces, sparse tensors and dense linear maps.
//!
//! Wedges carry no `1/k!`: `x∧y = x⊗y − y⊗x`. The pairing of `∧ᵏV` with
//! `∧ᵏV*` is the determinant of the pairings of the factors.

pub mod directsum;
pub mod exterior;
pub mod linalg;
pub mod linear;
pub mod scalar;
pub mod space;
pub mod subspace;
pub mod tensor;

pub use directsum::{direct_sum_embed, DirectSum};
pub use exterior::{wedge_product, Exterior};
pub use linalg::Matrix;
pub use linear::LinearMap;
pub use scalar::{format_scalar, half, int, one, parse_scalar, q, zero, Scalar};
pub use space::Space;
pub use subspace::Subspace;
pub use tensor::{extended_pairing, extended_pairing_with, permutations, wedge, Tensor};

use crate::error::{ForgeError, Result};

/// `r^#: V* → V`, `ξ ↦ Σ ⟨ξ, u_i⟩ v_i` for `r = Σ u_i ⊗ v_i`.
pub fn sharp(r: &Tensor) -> Result<LinearMap> {
    if r.order() != 2 {
        return Err(ForgeError::OrderMismatch { expected: 2, found: r.order() });
    }
    let v = r.space(0).clone();
    v.expect(r.space(1))?;
    let mut m = linalg::zeros(v.dim(), v.dim());
    for (idx, x) in r.entries() {
        m[idx[1]][idx[0]] += x;
    }
    LinearMap::new(v.dual(), v, m)
}

/// Order-2 tensor whose sharp map is `m: V* → V`.
pub fn unsharp(m: &LinearMap) -> Result<Tensor> {
    let v = m.codomain().clone();
    m.domain().check_dual_of(&v)?;
    let mut t = Tensor::zero_on(&v, 2);
    for (row, r) in m.matrix().iter().enumerate() {
        for (col, x) in r.iter().enumerate() {
            t.add_entry(vec![col, row], x.clone());
        }
    }
    Ok(t)
}
