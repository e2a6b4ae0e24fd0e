use crate::error::{ForgeError, Result};
use crate::tensorspace::{Exterior, Tensor};

use super::LieAlgebra;

/// Schouten bracket on `∧g` from the bracket of `g`:
/// `[x₁∧…∧x_a, y₁∧…∧y_b] = Σ (−1)^{i+j} [x_i, y_j] ∧ x̂ ∧ ŷ`.
pub fn schouten_ext(g: &LieAlgebra, a: &Exterior, b: &Exterior) -> Exterior {
    if a.degree == 0 || b.degree == 0 {
        // Constants are central for the algebraic bracket.
        return Exterior::zero((a.degree + b.degree).saturating_sub(1));
    }
    let mut out = Exterior::zero(a.degree + b.degree - 1);
    for (ia, x) in &a.terms {
        for (ib, y) in &b.terms {
            let xy = x * y;
            for (p, &i) in ia.iter().enumerate() {
                for (q, &j) in ib.iter().enumerate() {
                    let br = g.bracket_basis(i, j);
                    if br.is_empty() {
                        continue;
                    }
                    let negative = (p + q) % 2 == 1;
                    for (k, c) in br {
                        let mut idx = Vec::with_capacity(ia.len() + ib.len() - 1);
                        idx.push(*k);
                        idx.extend(ia.iter().enumerate().filter(|(m, _)| *m != p).map(|(_, v)| *v));
                        idx.extend(ib.iter().enumerate().filter(|(m, _)| *m != q).map(|(_, v)| *v));
                        let coef = &xy * c;
                        out.add_monomial(&idx, if negative { -coef } else { coef });
                    }
                }
            }
        }
    }
    out
}

/// Schouten bracket of skew tensors on `g`, inputs of order 1 to 3.
pub fn schouten(g: &LieAlgebra, a: &Tensor, b: &Tensor) -> Result<Tensor> {
    for t in [a, b] {
        t.expect_on(g.space(), t.order())?;
        if !(1..=3).contains(&t.order()) {
            return Err(ForgeError::InvalidArgument(format!("Schouten inputs have order 1..=3, got {}", t.order())));
        }
    }
    let x = Exterior::from_tensor(a)?;
    let y = Exterior::from_tensor(b)?;
    Ok(schouten_ext(g, &x, &y).to_tensor(g.space()))
}
