use num_traits::Zero;

use crate::error::{ForgeError, Result};
use crate::liealg::{schouten_ext, LieAlgebra, Violation};
use crate::tensorspace::{linalg, DirectSum, Exterior, LinearMap, Scalar, Tensor};

/// A cobracket `δ: g → ∧²g`, stored as one skew tensor per basis vector.
#[derive(Clone, Debug, PartialEq)]
pub struct Cobracket {
    algebra: LieAlgebra,
    values: Vec<Tensor>,
}

impl Cobracket {
    /// Validates skewness, the cocycle condition and the Jacobi identity of
    /// the dual bracket.
    pub fn new(algebra: LieAlgebra, values: Vec<Tensor>) -> Result<Cobracket> {
        let cb = Cobracket::new_unchecked(algebra, values)?;
        if cb.values.iter().any(|v| !v.is_skew()) {
            return Err(ForgeError::NotSkew);
        }
        if let Some(v) = cb.cocycle_violations().first() {
            return Err(ForgeError::CocycleFailure(v.0[0].clone(), v.0[1].clone()));
        }
        if let Some(v) = cb.dual_jacobi_violations().first() {
            return Err(ForgeError::NotLieCobracket(format!("Jacobi fails at {v}")));
        }
        Ok(cb)
    }

    pub fn new_unchecked(algebra: LieAlgebra, values: Vec<Tensor>) -> Result<Cobracket> {
        if values.len() != algebra.dim() {
            return Err(ForgeError::InvalidArgument("one cobracket value per basis vector".into()));
        }
        for v in &values {
            v.expect_on(algebra.space(), 2)?;
        }
        Ok(Cobracket { algebra, values })
    }

    pub fn zero(algebra: LieAlgebra) -> Cobracket {
        let values = vec![Tensor::zero_on(algebra.space(), 2); algebra.dim()];
        Cobracket { algebra, values }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn values(&self) -> &[Tensor] {
        &self.values
    }

    pub fn value(&self, i: usize) -> &Tensor {
        &self.values[i]
    }

    pub fn delta_coords(&self, x: &[Scalar]) -> Tensor {
        let mut out = Tensor::zero_on(self.algebra.space(), 2);
        for (c, v) in x.iter().zip(&self.values) {
            if !c.is_zero() {
                out += &v.scale(c);
            }
        }
        out
    }

    pub fn delta(&self, x: &Tensor) -> Result<Tensor> {
        x.expect_on(self.algebra.space(), 1)?;
        Ok(self.delta_coords(&x.coords()))
    }

    /// Basis pairs where `δ[x,y] ≠ [x,δy] + [δx,y]`.
    pub fn cocycle_violations(&self) -> Vec<Violation> {
        let g = &self.algebra;
        let n = g.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.delta_coords(&g.bracket_coords(&linalg::unit(n, i), &linalg::unit(n, j)));
                let rhs = &g.ad_tensor(&linalg::unit(n, i), &self.values[j]).expect("same space")
                    - &g.ad_tensor(&linalg::unit(n, j), &self.values[i]).expect("same space");
                if lhs != rhs {
                    out.push(Violation(vec![g.label(i), g.label(j)]));
                }
            }
        }
        out
    }

    /// Jacobi violations of the bracket `δ*` on `g*`.
    pub fn dual_jacobi_violations(&self) -> Vec<Violation> {
        match self.dual_algebra_unchecked() {
            Ok(d) => d.check_jacobi(),
            Err(_) => vec![Violation(vec!["cobracket values are not skew".into()])],
        }
    }

    fn dual_algebra_unchecked(&self) -> Result<LieAlgebra> {
        let dual = self.algebra.space().dual();
        let mut c = Tensor::zero_on(&dual, 3);
        for (k, v) in self.values.iter().enumerate() {
            for (idx, x) in v.entries() {
                c.add_entry(vec![idx[0], idx[1], k], x.clone());
            }
        }
        LieAlgebra::new_unchecked(dual, c, None)
    }

    /// The dual Lie bialgebra: `g*` with bracket `δ*` and cobracket dual to
    /// the bracket of `g`.
    pub fn dual(&self) -> Result<Cobracket> {
        let violations = self.dual_jacobi_violations();
        if let Some(v) = violations.first() {
            return Err(ForgeError::NotLieCobracket(format!("Jacobi fails at {v}")));
        }
        let dual_alg = self.dual_algebra_unchecked()?;
        let dual = dual_alg.space().clone();
        let mut values = vec![Tensor::zero_on(&dual, 2); dual.dim()];
        for (idx, x) in self.algebra.structure().entries() {
            values[idx[2]].add_entry(vec![idx[0], idx[1]], x.clone());
        }
        Ok(Cobracket { algebra: dual_alg, values })
    }

    /// `δ` extended to `∧²g → ∧³g` by `δ(x∧y) = δx∧y − x∧δy`.
    pub fn extend_wedge2(&self, t: &Tensor) -> Result<Tensor> {
        t.expect_on(self.algebra.space(), 2)?;
        let e = Exterior::from_tensor(t)?;
        let vals: Vec<Exterior> = self.values.iter().map(Exterior::from_tensor).collect::<Result<_>>()?;
        let mut out = Exterior::zero(3);
        for (idx, c) in &e.terms {
            let (i, j) = (idx[0], idx[1]);
            out.add(&vals[i].wedge(&Exterior::monomial(&[j], c.clone())));
            out.add(&Exterior::monomial(&[i], -c.clone()).wedge(&vals[j]));
        }
        Ok(out.to_tensor(self.algebra.space()))
    }

    /// `δ(t) + ½[t,t]` for skew `t`; zero exactly for twisting elements.
    pub fn twist_defect(&self, t: &Tensor) -> Result<Tensor> {
        let e = Exterior::from_tensor(t)?;
        let tt = schouten_ext(&self.algebra, &e, &e).scale(&crate::tensorspace::half());
        Ok(&self.extend_wedge2(t)? + &tt.to_tensor(self.algebra.space()))
    }

    /// Basis vectors where `m(δx) ≠ δ'(m x)`, plus bracket failures; empty
    /// iff `m` is a Lie bialgebra homomorphism.
    pub fn hom_violations(&self, target: &Cobracket, m: &LinearMap) -> Result<Vec<Violation>> {
        self.algebra.space().expect(m.domain())?;
        target.algebra.space().expect(m.codomain())?;
        let mut out = self.algebra.hom_violations(&target.algebra, m);
        for i in 0..self.algebra.dim() {
            let lhs = self.values[i].pushforward(m)?;
            let rhs = target.delta_coords(&m.image_of(i));
            if lhs != rhs {
                out.push(Violation(vec![format!("cobracket at {}", self.algebra.label(i))]));
            }
        }
        Ok(out)
    }

    /// Restriction to the subalgebra spanned by `basis` (in order), as a
    /// cobracket on its own space.
    pub fn restrict(&self, name: &str, labels: Vec<String>, basis: &[Vec<Scalar>]) -> Result<Cobracket> {
        let sub = self
            .algebra
            .subalgebra(name, labels, basis)
            .map_err(|e| ForgeError::NotSubBialgebra(e.to_string()))?;
        let n = self.algebra.dim();
        let left = linalg::left_inverse(basis, n)
            .ok_or_else(|| ForgeError::NotSubBialgebra("dependent basis".into()))?;
        let proj = LinearMap::new(self.algebra.space().clone(), sub.space().clone(), left)?;
        let inc = LinearMap::from_images(sub.space().clone(), self.algebra.space().clone(), basis)?;
        let mut values = Vec::with_capacity(basis.len());
        for (a, b) in basis.iter().enumerate() {
            let v = self.delta_coords(b);
            let local = v.pushforward(&proj)?;
            if local.pushforward(&inc)? != v {
                return Err(ForgeError::NotSubBialgebra(format!("δ({}) leaves the span", sub.label(a))));
            }
            values.push(local);
        }
        Ok(Cobracket { algebra: sub, values })
    }

    pub fn negate(&self) -> Cobracket {
        Cobracket { algebra: self.algebra.clone(), values: self.values.iter().map(|v| -v).collect() }
    }

    /// Same cobracket viewed on an algebra with the form replaced.
    pub fn with_algebra(&self, algebra: LieAlgebra) -> Result<Cobracket> {
        Cobracket::new_unchecked(algebra, self.values.clone())
    }
}

/// Direct product Lie bialgebra `(g₁ × … × g_n, (δ₁, …, δ_n))`.
#[derive(Clone, Debug)]
pub struct ProductBialgebra {
    pub sum: DirectSum,
    pub cobracket: Cobracket,
}

impl ProductBialgebra {
    pub fn new(name: &str, parts: &[&Cobracket]) -> Result<ProductBialgebra> {
        let algs: Vec<&LieAlgebra> = parts.iter().map(|c| c.algebra()).collect();
        let (alg, sum) = LieAlgebra::direct_sum(name, &algs, None)?;
        let mut values = Vec::with_capacity(alg.dim());
        for (j, c) in parts.iter().enumerate() {
            for v in c.values() {
                values.push(sum.embed(v, j)?);
            }
        }
        Ok(ProductBialgebra { sum, cobracket: Cobracket::new_unchecked(alg, values)? })
    }

    pub fn algebra(&self) -> &LieAlgebra {
        self.cobracket.algebra()
    }
}

/// `δ_r(x) = ad_x r`. Rejects `r` whose symmetric part is not ad-invariant.
pub fn cobracket_from_r(g: &LieAlgebra, r: &Tensor) -> Result<Cobracket> {
    r.expect_on(g.space(), 2)?;
    let n = g.dim();
    let mut values = Vec::with_capacity(n);
    for i in 0..n {
        let v = g.ad_tensor(&linalg::unit(n, i), r)?;
        if !v.is_skew() {
            return Err(ForgeError::NotCoboundarySkew(g.label(i)));
        }
        values.push(v);
    }
    Cobracket::new_unchecked(g.clone(), values)
}

/// `(g*, δ*)` and its cobracket.
pub fn dual_bialgebra(cb: &Cobracket) -> Result<Cobracket> {
    cb.dual()
}
