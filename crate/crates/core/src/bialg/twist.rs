use crate::error::{ForgeError, Result};
use crate::liealg::schouten;
use crate::tensorspace::{DirectSum, LinearMap, Tensor};

use super::cobracket::{Cobracket, ProductBialgebra};

/// True iff `δ(t) + ½[t,t] = 0`.
pub fn check_twist(cb: &Cobracket, t: &Tensor) -> Result<bool> {
    Ok(cb.twist_defect(t)?.is_zero())
}

/// A verified twisting element.
#[derive(Clone, Debug)]
pub struct TwistElement {
    cobracket: Cobracket,
    tensor: Tensor,
}

impl TwistElement {
    pub fn new(cb: &Cobracket, t: Tensor) -> Result<TwistElement> {
        if !t.is_skew() {
            return Err(ForgeError::NotSkew);
        }
        if !check_twist(cb, &t)? {
            return Err(ForgeError::NotTwist);
        }
        Ok(TwistElement { cobracket: cb.clone(), tensor: t })
    }

    pub fn tensor(&self) -> &Tensor {
        &self.tensor
    }

    pub fn cobracket(&self) -> &Cobracket {
        &self.cobracket
    }
}

/// `δ_t(x) = δ(x) + [t, x]`.
pub fn twist_cobracket(t: &TwistElement) -> Result<Cobracket> {
    let cb = t.cobracket();
    let g = cb.algebra();
    let values = (0..g.dim())
        .map(|i| {
            let x = Tensor::basis(g.space(), i);
            Ok(cb.value(i) + &schouten(g, t.tensor(), &x)?)
        })
        .collect::<Result<Vec<_>>>()?;
    Cobracket::new_unchecked(g.clone(), values)
}

/// `δ(x) − [x, t]`, the other written form of the twisted cobracket.
pub fn twist_cobracket_alt(cb: &Cobracket, t: &Tensor) -> Result<Cobracket> {
    let g = cb.algebra();
    let values = (0..g.dim())
        .map(|i| {
            let x = Tensor::basis(g.space(), i);
            Ok(cb.value(i) - &schouten(g, &x, t)?)
        })
        .collect::<Result<Vec<_>>>()?;
    Cobracket::new_unchecked(g.clone(), values)
}

fn check_product(p: &ProductBialgebra, t: &Tensor) -> Result<()> {
    if t.order() != 2 || t.spaces().iter().any(|s| s != p.sum.space()) {
        return Err(ForgeError::NotDirectSum);
    }
    Ok(())
}

/// Diagonal block `p_j(t)` of a tensor on a direct sum (0-based `j`).
pub fn diagonal_block(sum: &DirectSum, t: &Tensor, j: usize) -> Result<Tensor> {
    t.pushforward(&sum.projection(j)?)
}

/// A twisting element of the direct product whose diagonal blocks vanish.
pub fn is_mixed_twist(p: &ProductBialgebra, t: &Tensor) -> Result<bool> {
    check_product(p, t)?;
    for j in 0..p.sum.len() {
        if !diagonal_block(&p.sum, t, j)?.is_zero() {
            return Ok(false);
        }
    }
    check_twist(&p.cobracket, t)
}

/// `p_J(t)` on `⊕_{j∈J} g_j` (0-based, increasing `J`), with that product.
pub fn project_pj(p: &ProductBialgebra, parts: &[&Cobracket], blocks: &[usize], t: &Tensor) -> Result<(ProductBialgebra, Tensor)> {
    check_product(p, t)?;
    let chosen: Vec<&Cobracket> = blocks.iter().map(|&j| parts[j]).collect();
    let sub = ProductBialgebra::new("pJ", &chosen)?;
    let proj = block_projection(&p.sum, &sub.sum, blocks)?;
    Ok((sub, t.pushforward(&proj)?))
}

/// `⊕_j V_j → ⊕_{j∈J} V_j`.
pub fn block_projection(from: &DirectSum, to: &DirectSum, blocks: &[usize]) -> Result<LinearMap> {
    let mut m = LinearMap::zero(from.space(), to.space());
    for (pos, &j) in blocks.iter().enumerate() {
        let piece = to.inclusion(pos)?.compose(&from.projection(j)?)?;
        m = m.add(&piece)?;
    }
    Ok(m)
}
