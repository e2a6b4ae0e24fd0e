use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::One;

use super::poly::Poly;
use crate::error::{ForgeError, Result};
use crate::tensorspace::exterior::sort_with_sign;
use crate::tensorspace::Scalar;

/// Affine chart: an ordered list of distinct coordinate names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Chart(Arc<Vec<String>>);

impl Chart {
    pub fn new(vars: Vec<String>) -> Result<Chart> {
        let mut seen = std::collections::HashSet::new();
        for v in &vars {
            if !seen.insert(v) {
                return Err(ForgeError::InvalidArgument(format!("chart variable {v} repeats")));
            }
        }
        Ok(Chart(Arc::new(vars)))
    }

    /// `prefix1, …, prefixN`.
    pub fn numbered(prefix: &str, n: usize) -> Chart {
        Chart(Arc::new((1..=n).map(|i| format!("{prefix}{i}")).collect()))
    }

    /// Concatenation; variable names must stay distinct.
    pub fn product(parts: &[&Chart]) -> Result<Chart> {
        Chart::new(parts.iter().flat_map(|c| c.vars().iter().cloned()).collect())
    }

    pub fn vars(&self) -> &[String] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn name(&self) -> String {
        format!("({})", self.0.join(", "))
    }

    pub fn expect(&self, other: &Chart) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(ForgeError::ChartMismatch(self.name(), other.name()))
        }
    }

    /// Positions of the variables of `part` inside `self`.
    pub fn positions_of(&self, part: &Chart) -> Result<Vec<usize>> {
        part.vars()
            .iter()
            .map(|v| self.vars().iter().position(|w| w == v).ok_or_else(|| ForgeError::ChartMismatch(self.name(), part.name())))
            .collect()
    }
}

/// Degree-`k` multivector field `Σ_I a_I ∂_{i_1}∧…∧∂_{i_k}` over strictly
/// increasing `I`, with polynomial coefficients. Degree 0 is a function,
/// stored under the empty index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyField {
    chart: Chart,
    degree: usize,
    comps: BTreeMap<Vec<usize>, Poly>,
}

impl PolyField {
    pub fn zero(chart: &Chart, degree: usize) -> PolyField {
        PolyField { chart: chart.clone(), degree, comps: BTreeMap::new() }
    }

    pub fn function(chart: &Chart, f: Poly) -> PolyField {
        let mut out = PolyField::zero(chart, 0);
        out.add_term(&[], f);
        out
    }

    /// `Σ_i c_i ∂_i`.
    pub fn vector(chart: &Chart, coeffs: Vec<Poly>) -> Result<PolyField> {
        if coeffs.len() != chart.dim() {
            return Err(ForgeError::InvalidArgument(format!("{} coefficients for a {}-variable chart", coeffs.len(), chart.dim())));
        }
        let mut out = PolyField::zero(chart, 1);
        for (i, c) in coeffs.into_iter().enumerate() {
            out.add_term(&[i], c);
        }
        Ok(out)
    }

    /// `f ∂_{i_1}∧…∧∂_{i_k}` for any index order.
    pub fn monomial(chart: &Chart, idx: &[usize], f: Poly) -> PolyField {
        let mut out = PolyField::zero(chart, idx.len());
        out.add_term(idx, f);
        out
    }

    /// The coordinate vector field `∂_i`.
    pub fn partial(chart: &Chart, i: usize) -> PolyField {
        PolyField::monomial(chart, &[i], Poly::one(chart.dim()))
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.chart.dim()
    }

    pub fn components(&self) -> impl Iterator<Item = (&Vec<usize>, &Poly)> {
        self.comps.iter()
    }

    /// Coefficient of `∂_I` for increasing `I`.
    pub fn component(&self, idx: &[usize]) -> Poly {
        self.comps.get(idx).cloned().unwrap_or_else(|| Poly::zero(self.nvars()))
    }

    /// Coefficient of the full skew tensor at any index tuple.
    pub fn full_entry(&self, idx: &[usize]) -> Poly {
        match sort_with_sign(idx) {
            Some((sorted, odd)) => {
                let c = self.component(&sorted);
                if odd {
                    c.neg()
                } else {
                    c
                }
            }
            None => Poly::zero(self.nvars()),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.is_empty()
    }

    /// Adds `f ∂_{idx}`, sorting `idx` with its sign.
    pub fn add_term(&mut self, idx: &[usize], f: Poly) {
        assert_eq!(idx.len(), self.degree, "index length differs from degree");
        if f.is_zero() {
            return;
        }
        let Some((sorted, odd)) = sort_with_sign(idx) else { return };
        let f = if odd { f.neg() } else { f };
        let slot = self.comps.entry(sorted.clone()).or_insert_with(|| Poly::zero(f.nvars()));
        slot.add_assign(&f);
        if slot.is_zero() {
            self.comps.remove(&sorted);
        }
    }

    fn check_same(&self, other: &PolyField) -> Result<()> {
        self.chart.expect(&other.chart)?;
        if self.degree != other.degree {
            return Err(ForgeError::OrderMismatch { expected: self.degree, found: other.degree });
        }
        Ok(())
    }

    pub fn add(&self, other: &PolyField) -> Result<PolyField> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (idx, f) in &other.comps {
            out.add_term(idx, f.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PolyField) -> Result<PolyField> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> PolyField {
        self.scale(&-Scalar::one())
    }

    pub fn scale(&self, c: &Scalar) -> PolyField {
        let mut out = PolyField::zero(&self.chart, self.degree);
        for (idx, f) in &self.comps {
            out.add_term(idx, f.scale(c));
        }
        out
    }

    /// `f · A` for a function `f`.
    pub fn mul_function(&self, f: &Poly) -> PolyField {
        let mut out = PolyField::zero(&self.chart, self.degree);
        for (idx, g) in &self.comps {
            out.add_term(idx, g.mul(f));
        }
        out
    }

    pub fn wedge(&self, other: &PolyField) -> Result<PolyField> {
        self.chart.expect(&other.chart)?;
        let mut out = PolyField::zero(&self.chart, self.degree + other.degree);
        for (a, f) in &self.comps {
            for (b, g) in &other.comps {
                let idx: Vec<usize> = a.iter().chain(b).copied().collect();
                out.add_term(&idx, f.mul(g));
            }
        }
        Ok(out)
    }

    /// `A(f) = Σ_i A^i ∂_i f` for a vector field `A`.
    pub fn apply_to(&self, f: &Poly) -> Result<Poly> {
        if self.degree != 1 {
            return Err(ForgeError::OrderMismatch { expected: 1, found: self.degree });
        }
        let mut out = Poly::zero(self.nvars());
        for (idx, a) in &self.comps {
            out.add_assign(&a.mul(&f.derivative(idx[0])));
        }
        Ok(out)
    }

    /// `A(df_1, …, df_k)` as the full contraction with the skew tensor.
    pub fn contract(&self, dfs: &[Poly]) -> Result<Poly> {
        if dfs.len() != self.degree {
            return Err(ForgeError::OrderMismatch { expected: self.degree, found: dfs.len() });
        }
        let mut out = Poly::zero(self.nvars());
        for (idx, a) in &self.comps {
            for (perm, odd) in crate::tensorspace::permutations(self.degree) {
                let mut term = a.clone();
                for (slot, &p) in perm.iter().enumerate() {
                    term = term.mul(&dfs[slot].derivative(idx[p]));
                }
                out.add_assign(&if odd { term.neg() } else { term });
            }
        }
        Ok(out)
    }

    /// Pushes forward along the inclusion of coordinates into `target`,
    /// which must contain every variable of this chart.
    pub fn embed(&self, target: &Chart) -> Result<PolyField> {
        let pos = target.positions_of(&self.chart)?;
        Ok(self.relabel(target, &pos))
    }

    /// Pushes forward along the projection onto the coordinates of `part`.
    /// Fails unless the retained components involve only retained variables.
    pub fn project(&self, part: &Chart) -> Result<PolyField> {
        let pos = self.chart.positions_of(part)?;
        let mut back = vec![None; self.nvars()];
        for (i, &p) in pos.iter().enumerate() {
            back[p] = Some(i);
        }
        let mut out = PolyField::zero(part, self.degree);
        for (idx, f) in &self.comps {
            let Some(new_idx) = idx.iter().map(|&i| back[i]).collect::<Option<Vec<usize>>>() else { continue };
            let mut g = Poly::zero(part.dim());
            for (e, c) in f.terms() {
                let mut moved = vec![0; part.dim()];
                for (i, &k) in e.iter().enumerate() {
                    match back[i] {
                        Some(j) => moved[j] = k,
                        None if k > 0 => {
                            return Err(ForgeError::ConventionViolation(format!(
                                "projection to {} depends on discarded variable {}",
                                part.name(),
                                self.chart.vars()[i]
                            )))
                        }
                        None => {}
                    }
                }
                g.add_term(moved, c.clone());
            }
            out.add_term(&new_idx, g);
        }
        Ok(out)
    }

    /// Re-expresses on a chart listing the same variables in another order.
    pub fn reorder(&self, target: &Chart) -> Result<PolyField> {
        if target.dim() != self.nvars() {
            return Err(ForgeError::ChartMismatch(self.chart.name(), target.name()));
        }
        self.embed(target)
    }

    /// The same field with the variables renamed position by position.
    pub fn rename(&self, target: &Chart) -> Result<PolyField> {
        if target.dim() != self.nvars() {
            return Err(ForgeError::ChartMismatch(self.chart.name(), target.name()));
        }
        let pos: Vec<usize> = (0..target.dim()).collect();
        Ok(self.relabel(target, &pos))
    }

    fn relabel(&self, target: &Chart, pos: &[usize]) -> PolyField {
        let mut out = PolyField::zero(target, self.degree);
        for (idx, f) in &self.comps {
            let mut g = Poly::zero(target.dim());
            for (e, c) in f.terms() {
                let mut moved = vec![0; target.dim()];
                for (i, &k) in e.iter().enumerate() {
                    moved[pos[i]] = k;
                }
                g.add_term(moved, c.clone());
            }
            let new_idx: Vec<usize> = idx.iter().map(|&i| pos[i]).collect();
            out.add_term(&new_idx, g);
        }
        out
    }

    /// Largest total degree among the coefficients.
    pub fn coefficient_degree(&self) -> u32 {
        self.comps.values().map(Poly::total_degree).max().unwrap_or(0)
    }
}

impl fmt::Display for PolyField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comps.is_empty() {
            return write!(f, "0");
        }
        let vars = self.chart.vars();
        let parts: Vec<String> = self
            .comps
            .iter()
            .map(|(idx, p)| {
                let coeff = p.render(vars);
                if idx.is_empty() {
                    coeff
                } else {
                    let d: Vec<String> = idx.iter().map(|&i| format!("d/d{}", vars[i])).collect();
                    format!("({coeff}) {}", d.join("^"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensorspace::int;

    #[test]
    fn wedge_is_graded_commutative() {
        let c = Chart::numbered("z", 3);
        let x = PolyField::vector(&c, vec![Poly::var(3, 0), Poly::one(3), Poly::zero(3)]).unwrap();
        let y = PolyField::vector(&c, vec![Poly::zero(3), Poly::var(3, 2), Poly::var(3, 1)]).unwrap();
        assert_eq!(x.wedge(&y).unwrap(), y.wedge(&x).unwrap().neg());
        assert!(x.wedge(&x).unwrap().is_zero());
    }

    #[test]
    fn contraction_of_bivector() {
        let c = Chart::numbered("z", 2);
        let pi = PolyField::monomial(&c, &[0, 1], Poly::var(2, 0));
        let v = pi.contract(&[Poly::var(2, 0), Poly::var(2, 1)]).unwrap();
        assert_eq!(v, Poly::var(2, 0));
        let w = pi.contract(&[Poly::var(2, 1), Poly::var(2, 0)]).unwrap();
        assert_eq!(w, Poly::var(2, 0).scale(&int(-1)));
    }

    #[test]
    fn project_rejects_dependence() {
        let c = Chart::numbered("z", 2);
        let left = Chart::new(vec!["z1".into()]).unwrap();
        let f = PolyField::monomial(&c, &[0], Poly::var(2, 1));
        assert!(f.project(&left).is_err());
        let g = PolyField::monomial(&c, &[0], Poly::var(2, 0));
        assert_eq!(g.project(&left).unwrap(), PolyField::monomial(&left, &[0], Poly::var(1, 0)));
    }
}
