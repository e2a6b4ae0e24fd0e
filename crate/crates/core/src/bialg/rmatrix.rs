use num_traits::Zero;

use crate::error::{ForgeError, Result};
use crate::liealg::{schouten, LieAlgebra};
use crate::tensorspace::{half, linalg, sharp, LinearMap, Matrix, Scalar, Subspace, Tensor};

use super::cobracket::{cobracket_from_r, Cobracket};

/// `CYB(r) = [r₁₂, r₁₃] + [r₁₂, r₂₃] + [r₁₃, r₂₃]`.
pub fn cyb(g: &LieAlgebra, r: &Tensor) -> Result<Tensor> {
    r.expect_on(g.space(), 2)?;
    let mut out = Tensor::zero_on(g.space(), 3);
    let terms: Vec<(&Vec<usize>, &Scalar)> = r.entries().collect();
    for (ia, x) in &terms {
        let (a, b) = (ia[0], ia[1]);
        for (ic, y) in &terms {
            let (c, d) = (ic[0], ic[1]);
            let xy = *x * *y;
            for (k, s) in g.bracket_basis(a, c) {
                out.add_entry(vec![*k, b, d], &xy * s);
            }
            for (k, s) in g.bracket_basis(b, c) {
                out.add_entry(vec![a, *k, d], &xy * s);
            }
            for (k, s) in g.bracket_basis(b, d) {
                out.add_entry(vec![a, c, *k], &xy * s);
            }
        }
    }
    Ok(out)
}

/// True iff `ad_x s = 0` for every basis `x`.
pub fn is_ad_invariant(g: &LieAlgebra, s: &Tensor) -> Result<bool> {
    let n = g.dim();
    for i in 0..n {
        if !g.ad_tensor(&linalg::unit(n, i), s)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An element `r ∈ g⊗g` with its derived data computed once.
#[derive(Clone, Debug)]
pub struct RMatrix {
    algebra: LieAlgebra,
    tensor: Tensor,
    lambda: Tensor,
    s: Tensor,
    r_plus: LinearMap,
    r_minus: LinearMap,
    f_plus: Subspace,
    f_minus: Subspace,
    quasitriangular: bool,
    factorizable: bool,
}

impl RMatrix {
    pub fn new(algebra: &LieAlgebra, tensor: Tensor) -> Result<RMatrix> {
        tensor.expect_on(algebra.space(), 2)?;
        let (lambda, s) = tensor.sym_skew_split()?;
        let r_plus = sharp(&tensor)?;
        let r_minus = sharp(&tensor.transpose21()?)?.scale(&-Scalar::from_integer(1.into()));
        let f_plus = r_plus.image();
        let f_minus = r_minus.image();
        let quasitriangular = is_ad_invariant(algebra, &s)? && cyb(algebra, &tensor)?.is_zero();
        let factorizable = quasitriangular && sharp(&s)?.is_invertible();
        Ok(RMatrix {
            algebra: algebra.clone(),
            tensor,
            lambda,
            s,
            r_plus,
            r_minus,
            f_plus,
            f_minus,
            quasitriangular,
            factorizable,
        })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn tensor(&self) -> &Tensor {
        &self.tensor
    }

    /// Skew part `Λ`.
    pub fn lambda(&self) -> &Tensor {
        &self.lambda
    }

    /// Symmetric part `s`.
    pub fn sym(&self) -> &Tensor {
        &self.s
    }

    pub fn r21(&self) -> Tensor {
        self.tensor.transpose21().expect("order 2")
    }

    /// `r₊ = r^#`.
    pub fn r_plus(&self) -> &LinearMap {
        &self.r_plus
    }

    /// `r₋ = −(r²¹)^#`.
    pub fn r_minus(&self) -> &LinearMap {
        &self.r_minus
    }

    pub fn f_plus(&self) -> &Subspace {
        &self.f_plus
    }

    pub fn f_minus(&self) -> &Subspace {
        &self.f_minus
    }

    pub fn is_quasitriangular(&self) -> bool {
        self.quasitriangular
    }

    pub fn is_factorizable(&self) -> bool {
        self.factorizable
    }

    pub fn require_quasitriangular(&self) -> Result<()> {
        if self.quasitriangular {
            Ok(())
        } else {
            Err(ForgeError::NotQuasitriangular)
        }
    }

    pub fn cyb(&self) -> Tensor {
        cyb(&self.algebra, &self.tensor).expect("shape checked at construction")
    }

    pub fn cobracket(&self) -> Result<Cobracket> {
        cobracket_from_r(&self.algebra, &self.tensor)
    }

    /// `CYB(r) − ½[Λ,Λ] − CYB(s)`; zero for every `r`.
    pub fn cyb_split_defect(&self) -> Result<Tensor> {
        let ll = schouten(&self.algebra, &self.lambda, &self.lambda)?.scale(&half());
        Ok(&(&self.cyb() - &ll) - &cyb(&self.algebra, &self.s)?)
    }
}

pub fn is_quasitriangular(g: &LieAlgebra, r: &Tensor) -> Result<bool> {
    Ok(RMatrix::new(g, r.clone())?.is_quasitriangular())
}

pub fn is_factorizable(g: &LieAlgebra, r: &Tensor) -> Result<bool> {
    Ok(RMatrix::new(g, r.clone())?.is_factorizable())
}

/// Dual pair of Lie bialgebras `(a, δ_a)`, `(b, δ_b)` with a nondegenerate
/// pairing `pairing[i][j] = ⟨a_i, b_j⟩` between their bases.
#[derive(Clone, Debug)]
pub struct DualPair {
    pub a: Cobracket,
    pub b: Cobracket,
    pub pairing: Matrix,
}

impl DualPair {
    /// The tautological pair `(g, g*)`.
    pub fn of(cb: &Cobracket) -> Result<DualPair> {
        Ok(DualPair { a: cb.clone(), b: cb.dual()?, pairing: linalg::identity(cb.algebra().dim()) })
    }

    /// Basis of `b` dual to the basis of `a`: coordinate rows.
    pub fn dual_basis(&self) -> Result<Matrix> {
        // ⟨a_i, Σ_j M_kj b_j⟩ = δ_ik, i.e. P Mᵀ = 1.
        let inv = linalg::inverse(&self.pairing)
            .ok_or_else(|| ForgeError::InvalidArgument("pairing is degenerate".into()))?;
        Ok(linalg::transpose(&inv, self.pairing.len()))
    }

    /// Checks `⟨[b₁,b₂], a⟩ = ⟨δ_a(a), b₁∧b₂⟩` and the mirrored identity on
    /// all basis vectors.
    pub fn is_dual(&self) -> Result<bool> {
        let n = self.a.algebra().dim();
        let m = self.b.algebra().dim();
        if n != m || linalg::inverse(&self.pairing).is_none() {
            return Ok(n == 0 && m == 0);
        }
        let p = &self.pairing;
        let pt = linalg::transpose(p, m);
        for i in 0..n {
            for j in 0..m {
                for k in 0..m {
                    let br = self.b.algebra().bracket_coords(&linalg::unit(m, j), &linalg::unit(m, k));
                    let lhs = linalg::dot(&p[i], &br);
                    let wedge = pair_with_wedge(self.a.value(i), p, j, k);
                    if lhs != wedge {
                        return Ok(false);
                    }
                }
            }
        }
        for j in 0..m {
            for i in 0..n {
                for k in 0..n {
                    let br = self.a.algebra().bracket_coords(&linalg::unit(n, i), &linalg::unit(n, k));
                    let lhs = linalg::dot(&pt[j], &br);
                    let wedge = pair_with_wedge(self.b.value(j), &pt, i, k);
                    if lhs != wedge {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}

/// `⟨T, e_j∧e_k⟩` where `T` lives on the other side of `form`.
fn pair_with_wedge(t: &Tensor, form: &Matrix, j: usize, k: usize) -> Scalar {
    let mut acc = Scalar::zero();
    for (idx, x) in t.entries() {
        let d = &form[idx[0]][j] * &form[idx[1]][k] - &form[idx[0]][k] * &form[idx[1]][j];
        acc += x * d;
    }
    // Full contraction against a wedge counts each term twice.
    acc / Scalar::from_integer(2.into())
}

/// `(f₋, δ|f₋)` and `(f₊, −δ|f₊)` with `⟨r₋ξ, r₊η⟩ = −⟨ξ, r₊η⟩`, on the
/// canonical bases of `f₋` and `f₊`.
pub fn f_pm_pairing(r: &RMatrix) -> Result<DualPair> {
    r.require_quasitriangular()?;
    let cb = r.cobracket()?;
    let fm = r.f_minus().basis().clone();
    let fp = r.f_plus().basis().clone();
    let lm: Vec<String> = (1..=fm.len()).map(|i| format!("m{i}")).collect();
    let lp: Vec<String> = (1..=fp.len()).map(|i| format!("p{i}")).collect();
    let a = cb.restrict("f-", lm, &fm)?;
    let b = cb.restrict("f+", lp, &fp)?.negate();
    let rm_cols: Vec<Vec<Scalar>> = (0..r.algebra().dim()).map(|c| r.r_minus().image_of(c)).collect();
    let mut pairing = linalg::zeros(fm.len(), fp.len());
    for (i, x) in fm.iter().enumerate() {
        let xi = linalg::solve_combination(&rm_cols, x)
            .ok_or_else(|| ForgeError::ConventionViolation("f- vector outside the image of r-".into()))?;
        for (j, y) in fp.iter().enumerate() {
            pairing[i][j] = -linalg::dot(&xi, y);
        }
    }
    Ok(DualPair { a, b, pairing })
}

/// The alternative form `⟨x, r₊η⟩ = ⟨η, x⟩` of the same pairing.
pub fn f_pm_pairing_alt(r: &RMatrix) -> Result<Matrix> {
    let fm = r.f_minus().basis();
    let fp = r.f_plus().basis();
    let rp_cols: Vec<Vec<Scalar>> = (0..r.algebra().dim()).map(|c| r.r_plus().image_of(c)).collect();
    let mut pairing = linalg::zeros(fm.len(), fp.len());
    for (j, y) in fp.iter().enumerate() {
        let eta = linalg::solve_combination(&rp_cols, y)
            .ok_or_else(|| ForgeError::ConventionViolation("f+ vector outside the image of r+".into()))?;
        for (i, x) in fm.iter().enumerate() {
            pairing[i][j] = linalg::dot(&eta, x);
        }
    }
    Ok(pairing)
}

/// `Σ_i a_i ⊗ b^i` over the pair's dual bases, pushed into `g` by the
/// inclusions: reconstructs `r ∈ f₋ ⊗ f₊`.
pub fn r_from_f_pm(r: &RMatrix, pair: &DualPair) -> Result<Tensor> {
    let g = r.algebra().space();
    let fm = r.f_minus().basis();
    let fp = r.f_plus().basis();
    let dual = pair.dual_basis()?;
    let mut out = Tensor::zero_on(g, 2);
    for (i, x) in fm.iter().enumerate() {
        let y = linalg::combine(fp, &dual[i], g.dim());
        out += &Tensor::vector(g, x).outer(&Tensor::vector(g, &y));
    }
    Ok(out)
}
