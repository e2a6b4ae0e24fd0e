use std::collections::BTreeMap;

use num_traits::Zero;

use super::field::{Chart, PolyField};
use super::poly::Poly;
use super::schouten::{schouten_field, vector_bracket};
use crate::bialg::{cobracket_from_r, Cobracket, RMatrix};
use crate::error::{ForgeError, Result};
use crate::liealg::{LieAlgebra, Violation};
use crate::polyuble::power;
use crate::tensorspace::{linalg, DirectSum, LinearMap, Scalar, Tensor};

/// Left actions are anti-homomorphisms `[λx, λy] = λ[y, x]`; right actions
/// are homomorphisms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ActionSide {
    Left,
    Right,
}

impl ActionSide {
    pub fn flip(self) -> ActionSide {
        match self {
            ActionSide::Left => ActionSide::Right,
            ActionSide::Right => ActionSide::Left,
        }
    }
}

/// A Lie algebra action by polynomial vector fields, one field per basis
/// vector.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAction {
    algebra: LieAlgebra,
    chart: Chart,
    fields: Vec<PolyField>,
    side: ActionSide,
}

impl LieAction {
    /// Checks the (anti-)homomorphism property on basis pairs.
    pub fn new(algebra: &LieAlgebra, chart: &Chart, fields: Vec<PolyField>, side: ActionSide) -> Result<LieAction> {
        let act = LieAction::new_unchecked(algebra, chart, fields, side)?;
        if let Some(v) = act.action_violations()?.first() {
            return Err(ForgeError::NotAnAction(format!("bracket fails on {v}")));
        }
        Ok(act)
    }

    /// Shape checks only.
    pub fn new_unchecked(algebra: &LieAlgebra, chart: &Chart, fields: Vec<PolyField>, side: ActionSide) -> Result<LieAction> {
        if fields.len() != algebra.dim() {
            return Err(ForgeError::InvalidArgument(format!("{} fields for a {}-dimensional algebra", fields.len(), algebra.dim())));
        }
        for f in &fields {
            f.chart().expect(chart)?;
            if f.degree() != 1 {
                return Err(ForgeError::OrderMismatch { expected: 1, found: f.degree() });
            }
        }
        Ok(LieAction { algebra: algebra.clone(), chart: chart.clone(), fields, side })
    }

    /// The zero action.
    pub fn zero(algebra: &LieAlgebra, chart: &Chart, side: ActionSide) -> LieAction {
        let fields = vec![PolyField::zero(chart, 1); algebra.dim()];
        LieAction { algebra: algebra.clone(), chart: chart.clone(), fields, side }
    }

    pub fn action_violations(&self) -> Result<Vec<Violation>> {
        let n = self.algebra.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = vector_bracket(&self.fields[i], &self.fields[j])?;
                let b = self.algebra.bracket_coords(&linalg::unit(n, i), &linalg::unit(n, j));
                let image = self.image(&b)?;
                let rhs = match self.side {
                    ActionSide::Left => image.neg(),
                    ActionSide::Right => image,
                };
                if lhs != rhs {
                    out.push(Violation(vec![self.algebra.label(i), self.algebra.label(j)]));
                }
            }
        }
        Ok(out)
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn side(&self) -> ActionSide {
        self.side
    }

    pub fn fields(&self) -> &[PolyField] {
        &self.fields
    }

    pub fn field(&self, i: usize) -> &PolyField {
        &self.fields[i]
    }

    /// `λ(Σ x_i e_i)`.
    pub fn image(&self, x: &[Scalar]) -> Result<PolyField> {
        if x.len() != self.fields.len() {
            return Err(ForgeError::IndexError { index: x.len(), bound: self.fields.len() });
        }
        let mut out = PolyField::zero(&self.chart, 1);
        for (c, f) in x.iter().zip(&self.fields) {
            if !c.is_zero() {
                out = out.add(&f.scale(c))?;
            }
        }
        Ok(out)
    }

    /// `−λ`, which swaps left and right.
    pub fn negate(&self) -> LieAction {
        LieAction {
            algebra: self.algebra.clone(),
            chart: self.chart.clone(),
            fields: self.fields.iter().map(PolyField::neg).collect(),
            side: self.side.flip(),
        }
    }

    /// `λ ∘ h` for a Lie algebra homomorphism `h: src → algebra`.
    pub fn compose(&self, src: &LieAlgebra, h: &LinearMap) -> Result<LieAction> {
        src.space().expect(h.domain())?;
        self.algebra.space().expect(h.codomain())?;
        let fields = (0..src.dim()).map(|i| self.image(&h.image_of(i))).collect::<Result<Vec<_>>>()?;
        LieAction::new(src, &self.chart, fields, self.side)
    }

    /// The same action on a chart with renamed variables.
    pub fn rename(&self, target: &Chart) -> Result<LieAction> {
        let fields = self.fields.iter().map(|f| f.rename(target)).collect::<Result<Vec<_>>>()?;
        Ok(LieAction { algebra: self.algebra.clone(), chart: target.clone(), fields, side: self.side })
    }

    /// The same action viewed on a larger chart containing this one as a window.
    pub fn embed(&self, target: &Chart) -> Result<LieAction> {
        let fields = self.fields.iter().map(|f| f.embed(target)).collect::<Result<Vec<_>>>()?;
        Ok(LieAction { algebra: self.algebra.clone(), chart: target.clone(), fields, side: self.side })
    }
}

/// Direct product action `(λ_1, …, λ_n)` of `g_1 × … × g_n` on the product
/// chart. Identical factors give the algebra `gⁿ`.
pub fn product_action(acts: &[&LieAction]) -> Result<(LieAction, DirectSum)> {
    let first = acts.first().ok_or_else(|| ForgeError::InvalidArgument("no factors".into()))?;
    if acts.iter().any(|a| a.side != first.side) {
        return Err(ForgeError::InvalidArgument("factors act from different sides".into()));
    }
    let (algebra, sum) = if acts.iter().all(|a| a.algebra == first.algebra) {
        power(&first.algebra, acts.len())?
    } else {
        let parts: Vec<&LieAlgebra> = acts.iter().map(|a| &a.algebra).collect();
        let name: Vec<String> = parts.iter().map(|g| g.space().name()).collect();
        LieAlgebra::direct_sum(&name.join("x"), &parts, None)?
    };
    let charts: Vec<&Chart> = acts.iter().map(|a| &a.chart).collect();
    let chart = Chart::product(&charts)?;
    let mut fields = Vec::with_capacity(algebra.dim());
    for a in acts {
        for f in &a.fields {
            fields.push(f.embed(&chart)?);
        }
    }
    Ok((LieAction { algebra, chart, fields, side: first.side }, sum))
}

/// Full (not necessarily skew) tensor image `Σ A(i…) λ(x_i)⊗…`, keyed by
/// chart index tuples.
pub fn image_full(act: &LieAction, a: &Tensor) -> Result<BTreeMap<Vec<usize>, Poly>> {
    a.expect_on(act.algebra.space(), a.order())?;
    let n = act.chart.dim();
    let mut out: BTreeMap<Vec<usize>, Poly> = BTreeMap::new();
    for (idx, c) in a.entries() {
        let mut partial: Vec<(Vec<usize>, Poly)> = vec![(Vec::new(), Poly::constant(n, c.clone()))];
        for &i in idx {
            let mut next = Vec::new();
            for (key, p) in &partial {
                for (v, f) in act.fields[i].components() {
                    let mut k = key.clone();
                    k.push(v[0]);
                    next.push((k, p.mul(f)));
                }
            }
            partial = next;
        }
        for (k, p) in partial {
            out.entry(k).or_insert_with(|| Poly::zero(n)).add_assign(&p);
        }
    }
    out.retain(|_, p| !p.is_zero());
    Ok(out)
}

/// `λ(A)` for a tensor of order `k ≥ 1`, stored as a `k`-vector field.
/// Skew input goes through `λ(x_1∧…∧x_k) = λ(x_1)∧…∧λ(x_k)`; other input
/// must have a skew image.
pub fn apply_action(act: &LieAction, a: &Tensor) -> Result<PolyField> {
    let k = a.order();
    a.expect_on(act.algebra.space(), k)?;
    if a.is_skew() {
        let mut out = PolyField::zero(&act.chart, k);
        for (idx, c) in a.entries() {
            if idx.windows(2).all(|w| w[0] < w[1]) {
                let mut term = PolyField::function(&act.chart, Poly::constant(act.chart.dim(), c.clone()));
                for &i in idx {
                    term = term.wedge(&act.fields[i])?;
                }
                out = out.add(&term)?;
            }
        }
        return Ok(out);
    }
    let full = image_full(act, a)?;
    let mut out = PolyField::zero(&act.chart, k);
    for (idx, p) in &full {
        if idx.windows(2).all(|w| w[0] < w[1]) {
            out.add_term(idx, p.clone());
        }
    }
    for (idx, p) in &full {
        if &out.full_entry(idx) != p {
            return Err(ForgeError::NotSkewForStorage);
        }
    }
    Ok(out)
}

/// Whether the full image of `s` vanishes identically.
pub fn symmetric_image_vanishes(act: &LieAction, s: &Tensor) -> Result<bool> {
    Ok(image_full(act, s)?.is_empty())
}

/// `[π, π] = 0`.
pub fn is_poisson(pi: &PolyField) -> Result<bool> {
    Ok(schouten_field(pi, pi)?.is_zero())
}

/// Basis vectors `x` with `[σ(x), π] ≠ σ(δ(x))`.
pub fn poisson_action_violations(act: &LieAction, pi: &PolyField, cb: &Cobracket) -> Result<Vec<Violation>> {
    act.algebra.space().expect(cb.algebra().space())?;
    let mut out = Vec::new();
    for (i, f) in act.fields.iter().enumerate() {
        let lhs = schouten_field(f, pi)?;
        let rhs = apply_action(act, cb.value(i))?;
        if lhs != rhs {
            out.push(Violation(vec![act.algebra.label(i)]));
        }
    }
    Ok(out)
}

/// Fails unless `π` is Poisson and `σ` is a Poisson action of `cb` on it.
pub fn require_poisson_space(pi: &PolyField, act: &LieAction, cb: &Cobracket) -> Result<()> {
    pi.chart().expect(act.chart())?;
    if !is_poisson(pi)? {
        return Err(ForgeError::NotPoissonAction("[π, π] ≠ 0".into()));
    }
    if let Some(v) = poisson_action_violations(act, pi, cb)?.first() {
        return Err(ForgeError::NotPoissonAction(format!("[σ(x), π] ≠ σ(δ(x)) at {v}")));
    }
    Ok(())
}

/// `π = −λ(r) = −λ(Λ)` for a left action with `λ(s) = 0`, checked to be
/// Poisson with `λ` a Poisson action of `(g, δ_r)`.
pub fn poisson_from_r(act: &LieAction, r: &RMatrix) -> Result<PolyField> {
    if act.side != ActionSide::Left {
        return Err(ForgeError::InvalidArgument("poisson_from_r needs a left action".into()));
    }
    if !symmetric_image_vanishes(act, r.sym())? {
        return Err(ForgeError::SymmetricPartActs);
    }
    let pi = apply_action(act, r.lambda())?.neg();
    require_poisson_space(&pi, act, &cobracket_from_r(r.algebra(), r.tensor())?)?;
    Ok(pi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn zero_action_gives_zero() {
        let (r, _) = fixtures::sl2().unwrap();
        let c = Chart::numbered("z", 2);
        let act = LieAction::zero(r.algebra(), &c, ActionSide::Left);
        assert!(poisson_from_r(&act, &r).unwrap().is_zero());
    }

    #[test]
    fn non_action_is_rejected() {
        let (r, _) = fixtures::sl2().unwrap();
        let c = Chart::numbered("z", 1);
        let one = PolyField::partial(&c, 0);
        let fields = vec![one.clone(), one.clone(), one];
        assert!(matches!(
            LieAction::new(r.algebra(), &c, fields, ActionSide::Left),
            Err(ForgeError::NotAnAction(_))
        ));
    }
}
