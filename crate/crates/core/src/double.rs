//! Drinfeld doubles, Lagrangian splittings, the projections `p±` and the
//! sub-quotient doubles of sub-bialgebras.

use num_traits::Zero;

use crate::bialg::{cobracket_from_r, Cobracket, DualPair, RMatrix};
use crate::error::{ForgeError, Result};
use crate::liealg::{LieAlgebra, Violation};
use crate::tensorspace::{half, linalg, sharp, wedge, DirectSum, LinearMap, Matrix, Scalar, Subspace, Tensor};

/// `d = g ⊕ g*` with its bracket, form `⟨x+ξ, y+η⟩ = ⟨x,η⟩ + ⟨ξ,y⟩`, the
/// r-matrix `r_d = Σ x_i ⊗ ξ_i` and the double cobracket `δ_d = δ_{r_d}`.
#[derive(Clone, Debug)]
pub struct DoubleAlgebra {
    bialgebra: Cobracket,
    dual: Cobracket,
    total: LieAlgebra,
    sum: DirectSum,
    r_d: RMatrix,
    lambda: Tensor,
    cobracket: Cobracket,
}

impl DoubleAlgebra {
    pub fn bialgebra(&self) -> &Cobracket {
        &self.bialgebra
    }

    /// `(g*, δ_{g*})`.
    pub fn dual(&self) -> &Cobracket {
        &self.dual
    }

    pub fn total(&self) -> &LieAlgebra {
        &self.total
    }

    pub fn sum(&self) -> &DirectSum {
        &self.sum
    }

    pub fn m(&self) -> usize {
        self.bialgebra.algebra().dim()
    }

    pub fn incl_g(&self) -> LinearMap {
        self.sum.inclusion(0).expect("two blocks")
    }

    pub fn incl_dual(&self) -> LinearMap {
        self.sum.inclusion(1).expect("two blocks")
    }

    pub fn r_d(&self) -> &RMatrix {
        &self.r_d
    }

    /// `Λ_{g,g*} = ½ Σ x_i ∧ ξ_i`.
    pub fn lambda(&self) -> &Tensor {
        &self.lambda
    }

    /// `(d, δ_d)`.
    pub fn cobracket(&self) -> &Cobracket {
        &self.cobracket
    }

    pub fn g_subspace(&self) -> Subspace {
        Subspace::coordinate(self.sum.space(), &(0..self.m()).collect::<Vec<_>>())
    }

    pub fn dual_subspace(&self) -> Subspace {
        let m = self.m();
        Subspace::coordinate(self.sum.space(), &(m..2 * m).collect::<Vec<_>>())
    }

    /// Basis vectors of `g` where `δ_d ≠ δ_g`, and of `g*` where
    /// `δ_d ≠ −δ_{g*}`.
    pub fn restriction_violations(&self) -> Result<Vec<Violation>> {
        let mut out = Vec::new();
        let inc_g = self.incl_g();
        let inc_d = self.incl_dual();
        for i in 0..self.m() {
            if self.cobracket.value(i) != &self.bialgebra.value(i).pushforward(&inc_g)? {
                out.push(Violation(vec![self.total.label(i)]));
            }
            let j = self.m() + i;
            if self.cobracket.value(j) != &(-self.dual.value(i)).pushforward(&inc_d)? {
                out.push(Violation(vec![self.total.label(j)]));
            }
        }
        Ok(out)
    }

    /// `Λ_{g,g*}` equals the skew part of `r_d`.
    pub fn lambda_matches(&self) -> bool {
        &self.lambda == self.r_d.lambda()
    }
}

/// Builds the double of a Lie bialgebra.
pub fn build_double(cb: &Cobracket) -> Result<DoubleAlgebra> {
    let g = cb.algebra();
    let dual = cb.dual()?;
    let m = g.dim();
    let sum = DirectSum::new(format!("d({})", g.space().name()), vec![g.space().clone(), dual.algebra().space().clone()]);
    let space = sum.space().clone();
    let mut c = Tensor::zero_on(&space, 3);
    for (idx, x) in g.structure().entries() {
        c.add_entry(idx.clone(), x.clone());
    }
    for (idx, x) in dual.algebra().structure().entries() {
        c.add_entry(idx.iter().map(|i| i + m).collect(), x.clone());
    }
    // [x_i, ξ_a] = Σ_k c(k,i,a) ξ_k − Σ_k δ(x_i)(k,a) x_k
    for (idx, x) in g.structure().entries() {
        let (k, i, a) = (idx[0], idx[1], idx[2]);
        c.add_entry(vec![i, m + a, m + k], x.clone());
        c.add_entry(vec![m + a, i, m + k], -x.clone());
    }
    for i in 0..m {
        for (idx, x) in cb.value(i).entries() {
            let (k, a) = (idx[0], idx[1]);
            c.add_entry(vec![i, m + a, k], -x.clone());
            c.add_entry(vec![m + a, i, k], x.clone());
        }
    }
    let mut form = Tensor::zero_on(&space, 2);
    for i in 0..m {
        form.add_entry(vec![i, m + i], Scalar::from_integer(1.into()));
        form.add_entry(vec![m + i, i], Scalar::from_integer(1.into()));
    }
    let total = LieAlgebra::new(space.clone(), c, Some(form))
        .map_err(|e| ForgeError::ConventionViolation(format!("double bracket: {e}")))?;
    let mut rd = Tensor::zero_on(&space, 2);
    let mut lambda = Tensor::zero_on(&space, 2);
    for i in 0..m {
        rd.add_entry(vec![i, m + i], Scalar::from_integer(1.into()));
        let w = wedge(&[Tensor::basis(&space, i), Tensor::basis(&space, m + i)])?;
        lambda += &w.scale(&half());
    }
    let r_d = RMatrix::new(&total, rd)?;
    let cobracket = cobracket_from_r(&total, r_d.tensor())?;
    let dbl = DoubleAlgebra { bialgebra: cb.clone(), dual, total, sum, r_d, lambda, cobracket };
    if let Some(v) = dbl.restriction_violations()?.first() {
        return Err(ForgeError::ConventionViolation(format!("double cobracket restricts wrongly at {v}")));
    }
    Ok(dbl)
}

/// `a` and `b` are complementary Lagrangian subalgebras of `(d, ⟨,⟩)`.
pub fn verify_manin(d: &LieAlgebra, a: &Subspace, b: &Subspace) -> bool {
    let Some(form) = d.form_matrix() else {
        return false;
    };
    let n = d.dim();
    let isotropic = |u: &Subspace| {
        u.basis().iter().all(|x| u.basis().iter().all(|y| linalg::dot(x, &linalg::mul_vec(&form, y)).is_zero()))
    };
    2 * a.dim() == n
        && 2 * b.dim() == n
        && a.sum(b).dim() == n
        && isotropic(a)
        && isotropic(b)
        && d.is_subalgebra(a)
        && d.is_subalgebra(b)
}

/// Basis of `b` dual to `a_basis` under the form of `d`.
pub fn dual_basis_in(d: &LieAlgebra, a_basis: &[Vec<Scalar>], b: &Subspace) -> Result<Matrix> {
    let form = d.form_matrix().ok_or_else(|| ForgeError::InvalidArgument("algebra has no form".into()))?;
    let bb = b.basis();
    // P[i][j] = ⟨a_i, b_j⟩; want β_k = Σ_j M[k][j] b_j with ⟨a_i, β_k⟩ = δ_ik.
    let p: Matrix = a_basis
        .iter()
        .map(|x| bb.iter().map(|y| linalg::dot(x, &linalg::mul_vec(&form, y))).collect())
        .collect();
    let inv = linalg::inverse(&p).ok_or_else(|| ForgeError::InvalidArgument("pairing between a and b is degenerate".into()))?;
    let mt = linalg::transpose(&inv, a_basis.len());
    Ok(mt.iter().map(|row| linalg::combine(bb, row, d.dim())).collect())
}

/// `Σ a_i ⊗ β_i` for a Lagrangian splitting `d = a + b`, with `β` dual to
/// the given basis of `a`.
pub fn splitting_r(d: &LieAlgebra, a_basis: &[Vec<Scalar>], b: &Subspace) -> Result<Tensor> {
    let beta = dual_basis_in(d, a_basis, b)?;
    let mut r = Tensor::zero_on(d.space(), 2);
    for (x, y) in a_basis.iter().zip(&beta) {
        r += &Tensor::vector(d.space(), x).outer(&Tensor::vector(d.space(), y));
    }
    Ok(r)
}

/// Cobracket on `a` dual to the bracket of `b`:
/// `⟨δ(x), β_p∧β_q⟩ = ⟨x, [β_p, β_q]⟩`. The algebra of `a` is given on its
/// own space with basis in the order of `a_basis`.
pub fn splitting_cobracket(d: &LieAlgebra, a_alg: &LieAlgebra, a_basis: &[Vec<Scalar>], b: &Subspace) -> Result<Cobracket> {
    let form = d.form_matrix().ok_or_else(|| ForgeError::InvalidArgument("algebra has no form".into()))?;
    let beta = dual_basis_in(d, a_basis, b)?;
    let k = a_basis.len();
    let mut values = Vec::with_capacity(k);
    for x in a_basis {
        let fx = linalg::mul_vec(&form, x);
        let mut t = Tensor::zero_on(a_alg.space(), 2);
        for p in 0..k {
            for q in 0..k {
                let v = linalg::dot(&fx, &d.bracket_coords(&beta[p], &beta[q]));
                t.add_entry(vec![p, q], v);
            }
        }
        values.push(t);
    }
    Cobracket::new_unchecked(a_alg.clone(), values)
}

/// `p₊(x+ξ) = x + r₊ξ` and `p₋(x+ξ) = x + r₋ξ`, maps `d → g`.
pub fn p_plus_minus(dbl: &DoubleAlgebra, r: &RMatrix) -> Result<(LinearMap, LinearMap)> {
    r.require_quasitriangular()?;
    if &r.cobracket()? != dbl.bialgebra() {
        return Err(ForgeError::CobracketMismatch);
    }
    let m = dbl.m();
    let g = r.algebra().space().clone();
    let build = |rpm: &LinearMap| {
        let images: Vec<Vec<Scalar>> =
            (0..m).map(|i| linalg::unit(m, i)).chain((0..m).map(|a| rpm.image_of(a))).collect();
        LinearMap::from_images(dbl.sum().space().clone(), g.clone(), &images)
    };
    Ok((build(r.r_plus())?, build(r.r_minus())?))
}

/// `𝔨_r = {−r^#(ξ) + ξ}` inside the double.
pub fn k_r_subspace(dbl: &DoubleAlgebra, r: &Tensor) -> Result<Subspace> {
    let g = dbl.bialgebra().algebra();
    r.expect_on(g.space(), 2).map_err(|_| ForgeError::DoubleNotBuilt)?;
    let sh = sharp(r)?;
    let m = dbl.m();
    let vs: Vec<Vec<Scalar>> = (0..m)
        .map(|a| {
            let mut v: Vec<Scalar> = sh.image_of(a).into_iter().map(|x| -x).collect();
            v.extend(linalg::unit(m, a));
            v
        })
        .collect();
    Ok(Subspace::span(dbl.sum().space(), &vs))
}

/// `([g, 𝔨_r] ⊆ 𝔨_r, 𝔨_r is an ideal of d)`: whether `r` is an r-matrix,
/// resp. a quasitriangular one, for the bialgebra of the double.
pub fn drinfeld_criterion(dbl: &DoubleAlgebra, r: &Tensor) -> Result<(bool, bool)> {
    let k = k_r_subspace(dbl, r)?;
    let d = dbl.total();
    let m = dbl.m();
    let g_stable = (0..m).all(|i| k.basis().iter().all(|v| k.contains(&d.bracket_coords(&linalg::unit(2 * m, i), v))));
    Ok((g_stable, d.is_ideal(&k)))
}

/// The map `q: d_{f₋} → g`, `q(x₋, x₊) = x₋ + x₊`, with `d_{f₋}` the double
/// of `(f₋, δ|f₋)` and `f₋*` identified with `f₊` through the pairing.
pub fn q_map(r: &RMatrix, pair: &DualPair) -> Result<(DoubleAlgebra, LinearMap)> {
    r.require_quasitriangular()?;
    let dbl = build_double(&pair.a)?;
    let n = r.algebra().dim();
    let fm = r.f_minus().basis();
    let fp = r.f_plus().basis();
    let dual = pair.dual_basis()?;
    let mut images: Vec<Vec<Scalar>> = fm.clone();
    for row in &dual {
        images.push(linalg::combine(fp, row, n));
    }
    let q = LinearMap::from_images(dbl.sum().space().clone(), r.algebra().space().clone(), &images)?;
    Ok((dbl, q))
}

/// `x + ξ ↦ x + ξ|_p` from `p + g* ⊆ d` onto the double of `(p, δ|_p)`.
/// Returns the source bialgebra (on its own space), the target double and the map.
pub fn sub_double_quotient(dbl: &DoubleAlgebra, p: &Subspace) -> Result<(Cobracket, DoubleAlgebra, LinearMap)> {
    let g = dbl.bialgebra().algebra();
    let m = g.dim();
    let pb = p.basis().clone();
    let labels: Vec<String> = (1..=pb.len()).map(|i| format!("p{i}")).collect();
    let restricted = dbl.bialgebra().restrict("p", labels, &pb)?;
    let target = build_double(&restricted)?;
    // Source basis: p basis inside d, then ξ_1..ξ_m.
    let src_basis: Vec<Vec<Scalar>> = pb
        .iter()
        .map(|v| v.iter().cloned().chain(std::iter::repeat_n(Scalar::zero(), m)).collect())
        .chain((0..m).map(|a| linalg::unit(2 * m, m + a)))
        .collect();
    let mut src_labels: Vec<String> = (1..=pb.len()).map(|i| format!("p{i}")).collect();
    src_labels.extend(g.space().dual().labels());
    let src_alg = dbl.total().without_form().subalgebra("p+g*", src_labels.clone(), &src_basis)?;
    let source = dbl.cobracket().restrict("p+g*", src_labels, &src_basis)?.with_algebra(src_alg)?;
    let k = pb.len();
    let mut images = Vec::with_capacity(k + m);
    for i in 0..k {
        images.push(linalg::unit(2 * k, i));
    }
    for a in 0..m {
        let mut v = vec![Scalar::zero(); k];
        v.extend(pb.iter().map(|b| b[a].clone()));
        images.push(v);
    }
    let map = LinearMap::from_images(source.algebra().space().clone(), target.sum().space().clone(), &images)?;
    Ok((source, target, map))
}
