use super::action::{apply_action, is_poisson, poisson_action_violations, product_action, require_poisson_space, ActionSide, LieAction};
use super::field::{Chart, PolyField};
use crate::bialg::{cobracket_from_r, cyb, f_pm_pairing, twist_cobracket, Cobracket, DualPair, RMatrix, TwistElement};
use crate::double::DoubleAlgebra;
use crate::error::{ForgeError, Result};
use crate::liealg::{LieAlgebra, Violation};
use crate::polyuble::{build_polyuble, diag_n, mix_n, phi_tau, r_power, Side};
use crate::tensorspace::{linalg, LinearMap, Scalar, Tensor};

/// A chart with a bivector and an action of some Lie algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct PoissonSpace {
    pub pi: PolyField,
    pub action: LieAction,
}

impl PoissonSpace {
    pub fn new(pi: PolyField, action: LieAction) -> Result<PoissonSpace> {
        pi.chart().expect(action.chart())?;
        if pi.degree() != 2 {
            return Err(ForgeError::OrderMismatch { expected: 2, found: pi.degree() });
        }
        Ok(PoissonSpace { pi, action })
    }

    pub fn chart(&self) -> &Chart {
        self.pi.chart()
    }

    /// Fails unless `(Y, π, σ)` is a Poisson space of `cb`.
    pub fn verify(&self, cb: &Cobracket) -> Result<()> {
        require_poisson_space(&self.pi, &self.action, cb)
    }

    /// `(Y, π, σ) ↦ (Y, −π, −σ)`, which exchanges left and right spaces of the
    /// same Lie bialgebra.
    pub fn flip(&self) -> PoissonSpace {
        PoissonSpace { pi: self.pi.neg(), action: self.action.negate() }
    }
}

/// `(π_1, …, π_n)` on the product chart.
pub fn direct_product(pis: &[&PolyField]) -> Result<PolyField> {
    let charts: Vec<&Chart> = pis.iter().map(|p| p.chart()).collect();
    let chart = Chart::product(&charts)?;
    let mut out = PolyField::zero(&chart, 2);
    for p in pis {
        out = out.add(&p.embed(&chart)?)?;
    }
    Ok(out)
}

/// `λ` restricted to the subalgebra spanned by `basis` (coordinate rows).
pub fn restrict_action(act: &LieAction, sub: &LieAlgebra, basis: &[Vec<Scalar>]) -> Result<LieAction> {
    let h = LinearMap::from_images(sub.space().clone(), act.algebra().space().clone(), basis)?;
    act.compose(sub, &h)
}

fn expect_side(act: &LieAction, side: ActionSide) -> Result<()> {
    if act.side() != side {
        return Err(ForgeError::InvalidArgument(format!("expected a {side:?} action, found {:?}", act.side())));
    }
    Ok(())
}

/// `Σ_i (ρ(b^i), 0) ∧ (0, λ(a_i))` over the dual bases of a dual pair.
pub fn mixed_term(rho: &LieAction, lam: &LieAction, pair: &DualPair, chart: &Chart) -> Result<PolyField> {
    let dual = pair.dual_basis()?;
    let mut out = PolyField::zero(chart, 2);
    for (i, b) in dual.iter().enumerate() {
        let left = rho.image(b)?.embed(chart)?;
        let right = lam.field(i).embed(chart)?;
        out = out.add(&left.wedge(&right)?)?;
    }
    Ok(out)
}

/// The same sum over an arbitrary basis `x'_i` of `g` (coordinate rows) and
/// its dual basis of `g*`.
pub fn mixed_term_in_basis(rho: &LieAction, lam: &LieAction, basis: &[Vec<Scalar>], chart: &Chart) -> Result<PolyField> {
    let m = basis.len();
    let cols = linalg::transpose(&basis.to_vec(), m);
    let inv = linalg::inverse(&cols).ok_or_else(|| ForgeError::InvalidArgument("basis is degenerate".into()))?;
    let mut out = PolyField::zero(chart, 2);
    for (x, xi) in basis.iter().zip(&inv) {
        out = out.add(&rho.image(xi)?.embed(chart)?.wedge(&lam.image(x)?.embed(chart)?)?)?;
    }
    Ok(out)
}

/// `π_X ×_{(ρ,λ)} π_Y = (π_X, π_Y) − Σ_i (ρ(ξ_i), 0) ∧ (0, λ(x_i))` for a
/// right Poisson space of `pair.b` and a left Poisson space of `pair.a`.
pub fn mixed_product_2(x: &PoissonSpace, y: &PoissonSpace, pair: &DualPair) -> Result<PolyField> {
    expect_side(&x.action, ActionSide::Right)?;
    expect_side(&y.action, ActionSide::Left)?;
    x.verify(&pair.b)?;
    y.verify(&pair.a)?;
    let direct = direct_product(&[&x.pi, &y.pi])?;
    let pi = direct.sub(&mixed_term(&x.action, &y.action, pair, direct.chart())?)?;
    if !is_poisson(&pi)? {
        return Err(ForgeError::NotPoissonAction("mixed product fails Jacobi".into()));
    }
    Ok(pi)
}

/// The characterization of the mixed product: both projections are Poisson
/// and `π(p_X^*du, p_Y^*dv) = −⟨ρ̂(du), λ̂(dv)⟩` for all coordinates `u`, `v`.
pub fn mixed_2_hat_violations(pi: &PolyField, x: &PoissonSpace, y: &PoissonSpace, pair: &DualPair) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    if pi.project(x.chart())? != x.pi {
        out.push(Violation(vec!["projection to first factor".into()]));
    }
    if pi.project(y.chart())? != y.pi {
        out.push(Violation(vec!["projection to second factor".into()]));
    }
    let chart = pi.chart();
    let dual = pair.dual_basis()?;
    let rho: Vec<PolyField> = dual.iter().map(|b| x.action.image(b)?.embed(chart)).collect::<Result<_>>()?;
    let lam: Vec<PolyField> = y.action.fields().iter().map(|f| f.embed(chart)).collect::<Result<_>>()?;
    let n = chart.dim();
    for u in chart.positions_of(x.chart())? {
        for v in chart.positions_of(y.chart())? {
            let du = super::poly::Poly::var(n, u);
            let dv = super::poly::Poly::var(n, v);
            let lhs = pi.contract(&[du.clone(), dv.clone()])?;
            let mut pairing = super::poly::Poly::zero(n);
            for (r, l) in rho.iter().zip(&lam) {
                pairing.add_assign(&r.apply_to(&du)?.mul(&l.apply_to(&dv)?));
            }
            if lhs != pairing.neg() {
                out.push(Violation(vec![chart.vars()[u].clone(), chart.vars()[v].clone()]));
            }
        }
    }
    Ok(out)
}

/// `ρ_0(ξ, x) = (ρ(ξ), 0) + (0, −λ(x))` as a right action of
/// `d' = g* ⊕ g`, with the violations of the Poisson-action identity for
/// `δ_{d'}` on the mixed product.
pub fn d_prime_violations(dbl: &DoubleAlgebra, pi: &PolyField, x: &PoissonSpace, y: &PoissonSpace) -> Result<Vec<Violation>> {
    let pu = build_polyuble(dbl, 2)?;
    let cb = pu.cobracket(Side::Dual)?;
    let chart = pi.chart();
    let mut fields = Vec::new();
    for f in x.action.fields() {
        fields.push(f.embed(chart)?);
    }
    for f in y.action.fields() {
        fields.push(f.embed(chart)?.neg());
    }
    let rho0 = LieAction::new(cb.algebra(), chart, fields, ActionSide::Right)?;
    poisson_action_violations(&rho0, pi, &cb)
}

/// `(π_1, …, π_n) + λ(Mixⁿ(r))` for left `(g, r)`-Poisson spaces, with the
/// product action of `gⁿ`; checked to be a `(gⁿ, r⁽ⁿ⁾)`-Poisson space.
pub fn mixed_product_n(factors: &[PoissonSpace], r: &RMatrix) -> Result<PoissonSpace> {
    let cb = cobracket_from_r(r.algebra(), r.tensor())?;
    for f in factors {
        expect_side(&f.action, ActionSide::Left)?;
        f.action.algebra().space().expect(r.algebra().space())?;
        f.verify(&cb)?;
    }
    let n = factors.len();
    let acts: Vec<&LieAction> = factors.iter().map(|f| &f.action).collect();
    let (lam, _) = product_action(&acts)?;
    let pis: Vec<&PolyField> = factors.iter().map(|f| &f.pi).collect();
    let pi = direct_product(&pis)?.add(&apply_action(&lam, &mix_n(r.tensor(), n)?)?)?;
    let rn = r_power(r, n)?;
    require_poisson_space(&pi, &lam, &cobracket_from_r(rn.algebra(), rn.tensor())?)?;
    PoissonSpace::new(pi, lam)
}

/// The mixed product written with a double: for left `(d, δ_d)`-Poisson
/// spaces `(Y_j, π_j, σ_j)`, with `ρ_j = −σ_j|g*` and `λ_j = σ_j|g`,
/// `(π_j) − Σ_{j<k} Σ_i ρ_j(ξ_i) ∧ λ_k(x_i)`; checked against the double
/// Lie bialgebra of `dⁿ` for the product action.
pub fn mixed_product_double(factors: &[PoissonSpace], dbl: &DoubleAlgebra) -> Result<PoissonSpace> {
    let cb = dbl.cobracket();
    for f in factors {
        expect_side(&f.action, ActionSide::Left)?;
        f.verify(cb)?;
    }
    let n = factors.len();
    let m = dbl.m();
    let pis: Vec<&PolyField> = factors.iter().map(|f| &f.pi).collect();
    let mut pi = direct_product(&pis)?;
    let chart = pi.chart().clone();
    for j in 0..n {
        for k in j + 1..n {
            for i in 0..m {
                let rho = factors[j].action.field(m + i).embed(&chart)?.neg();
                let lam = factors[k].action.field(i).embed(&chart)?;
                pi = pi.sub(&rho.wedge(&lam)?)?;
            }
        }
    }
    let acts: Vec<&LieAction> = factors.iter().map(|f| &f.action).collect();
    let (sigma, _) = product_action(&acts)?;
    let pu = build_polyuble(dbl, n)?;
    let sigma = LieAction::new(pu.ambient(), &chart, sigma.fields().to_vec(), ActionSide::Left)?;
    let delta = cobracket_from_r(pu.ambient(), &pu.r_ambient()?)?;
    require_poisson_space(&pi, &sigma, &delta)?;
    PoissonSpace::new(pi, sigma)
}

/// Fusion product: the mixed product with the diagonal action of `g`.
pub fn fusion(factors: &[PoissonSpace], r: &RMatrix) -> Result<PoissonSpace> {
    if factors.len() == 1 {
        factors[0].verify(&cobracket_from_r(r.algebra(), r.tensor())?)?;
        return Ok(factors[0].clone());
    }
    let mp = mixed_product_n(factors, r)?;
    let diag = diag_n(r.algebra().space(), factors.len())?;
    let lam = mp.action.compose(r.algebra(), &diag)?;
    require_poisson_space(&mp.pi, &lam, &cobracket_from_r(r.algebra(), r.tensor())?)?;
    PoissonSpace::new(mp.pi, lam)
}

/// The `τ`-fusion product `(π_j) + λ(φ_τ(Mixⁿ(r)))` with the diagonal action.
pub fn fusion_tau(factors: &[PoissonSpace], r: &RMatrix, tau: &[usize]) -> Result<PoissonSpace> {
    let n = factors.len();
    if tau.len() != n {
        return Err(ForgeError::InvalidArgument("τ must permute the factors".into()));
    }
    let cb = cobracket_from_r(r.algebra(), r.tensor())?;
    for f in factors {
        expect_side(&f.action, ActionSide::Left)?;
        f.verify(&cb)?;
    }
    let acts: Vec<&LieAction> = factors.iter().map(|f| &f.action).collect();
    let (lam, _) = product_action(&acts)?;
    let twist = mix_n(r.tensor(), n)?.pushforward(&phi_tau(r.algebra().space(), tau)?)?;
    let pis: Vec<&PolyField> = factors.iter().map(|f| &f.pi).collect();
    let pi = direct_product(&pis)?.add(&apply_action(&lam, &twist)?)?;
    let diag = lam.compose(r.algebra(), &diag_n(r.algebra().space(), n)?)?;
    require_poisson_space(&pi, &diag, &cb)?;
    PoissonSpace::new(pi, diag)
}

/// The two-fold mixed product of two fusion products, built with the pair
/// `(f₋, δ_r|f₋)`, `(f₊, −δ_r|f₊)`: `π_a ×_{(−λ_a|f₊, λ_b|f₋)} π_b`.
pub fn fusion_pair_via_f_pm(a: &PoissonSpace, b: &PoissonSpace, r: &RMatrix) -> Result<PolyField> {
    let pair = f_pm_pairing(r)?;
    let plus = restrict_action(&a.action, pair.b.algebra(), r.f_plus().basis())?.negate();
    let minus = restrict_action(&b.action, pair.a.algebra(), r.f_minus().basis())?;
    let x = PoissonSpace::new(a.pi.clone(), plus)?;
    let y = PoissonSpace::new(b.pi.clone(), minus)?;
    mixed_product_2(&x, &y, &pair)
}

/// `φ_s = −2·CYB(s) ∈ ∧³g`.
pub fn phi_s(r: &RMatrix) -> Result<Tensor> {
    Ok(cyb(r.algebra(), r.sym())?.scale(&Scalar::from_integer((-2).into())))
}

/// `Q = π + λ(Λ)` for a left `(g, δ_r)`-Poisson space, checked to satisfy
/// `[Q, Q] = λ(φ_s)` and `[λ(x), Q] = 0`.
pub fn quasi_correspond(space: &PoissonSpace, r: &RMatrix) -> Result<PolyField> {
    expect_side(&space.action, ActionSide::Left)?;
    space.verify(&cobracket_from_r(r.algebra(), r.tensor())?)?;
    let q = space.pi.add(&apply_action(&space.action, r.lambda())?)?;
    let violations = quasi_violations(&q, &space.action, r)?;
    if let Some(v) = violations.first() {
        return Err(ForgeError::NotPoissonAction(format!("quasi-Poisson identity fails at {v}")));
    }
    Ok(q)
}

/// Violations of `[Q, Q] = λ(φ_s)` and of `g`-invariance.
pub fn quasi_violations(q: &PolyField, act: &LieAction, r: &RMatrix) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    if super::schouten::schouten_field(q, q)? != apply_action(act, &phi_s(r)?)? {
        out.push(Violation(vec!["[Q,Q]".into()]));
    }
    let zero = Cobracket::zero(act.algebra().clone());
    out.extend(poisson_action_violations(act, q, &zero)?);
    Ok(out)
}

/// The inverse direction `π = Q − λ(Λ)`, checked to be a `(g, δ_r)`-Poisson
/// space.
pub fn quasi_inverse(q: &PolyField, act: &LieAction, r: &RMatrix) -> Result<PoissonSpace> {
    if let Some(v) = quasi_violations(q, act, r)?.first() {
        return Err(ForgeError::NotPoissonAction(format!("not quasi-Poisson at {v}")));
    }
    let pi = q.sub(&apply_action(act, r.lambda())?)?;
    let space = PoissonSpace::new(pi, act.clone())?;
    space.verify(&cobracket_from_r(r.algebra(), r.tensor())?)?;
    Ok(space)
}

/// Outcome of comparing the two routes from `n` factors to a
/// `(g, φ_s)`-quasi-Poisson space.
#[derive(Clone, Debug)]
pub struct FusionSquare {
    /// Fusion product, then `Q = π + λ_diag(Λ)`.
    pub fuse_then_twist: PolyField,
    /// `Q = π_Y + λ(Λ⁽ⁿ⁾)` on `gⁿ`, then `Q + λ(Mixⁿ(s))` with `λ∘diag`.
    pub twist_then_fuse: PolyField,
    pub actions_agree: bool,
}

impl FusionSquare {
    pub fn commutes(&self) -> bool {
        self.actions_agree && self.fuse_then_twist == self.twist_then_fuse
    }
}

pub fn fusion_square(factors: &[PoissonSpace], r: &RMatrix) -> Result<FusionSquare> {
    let n = factors.len();
    let fused = fusion(factors, r)?;
    let top = quasi_correspond(&fused, r)?;
    if n == 1 {
        return Ok(FusionSquare { fuse_then_twist: top.clone(), twist_then_fuse: top, actions_agree: true });
    }
    let mp = mixed_product_n(factors, r)?;
    let rn = r_power(r, n)?.rmatrix()?;
    let qn = mp.pi.add(&apply_action(&mp.action, rn.lambda())?)?;
    let fused_q = qn.add(&apply_action(&mp.action, &mix_n(r.sym(), n)?)?)?;
    let diag = mp.action.compose(r.algebra(), &diag_n(r.algebra().space(), n)?)?;
    Ok(FusionSquare { fuse_then_twist: top, twist_then_fuse: fused_q, actions_agree: diag == fused.action })
}

/// Twist of a Poisson space by `t`: `π + λ(t)` for left actions, `π − ρ(t)`
/// for right ones; checked against the twisted cobracket.
pub fn twist_space(space: &PoissonSpace, t: &TwistElement) -> Result<PolyField> {
    space.verify(t.cobracket())?;
    let image = apply_action(&space.action, t.tensor())?;
    let pi = match space.action.side() {
        ActionSide::Left => space.pi.add(&image)?,
        ActionSide::Right => space.pi.sub(&image)?,
    };
    require_poisson_space(&pi, &space.action, &twist_cobracket(t)?)?;
    Ok(pi)
}
