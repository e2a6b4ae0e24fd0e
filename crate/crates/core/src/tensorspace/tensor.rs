use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::Zero;

use super::linalg::Matrix;
use super::scalar::{one, q, Scalar};
use super::space::Space;
use crate::error::{ForgeError, Result};

/// Order-k tensor over based spaces with sparse exact entries.
///
/// Zero entries are never stored, so structural equality is value equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    spaces: Vec<Space>,
    entries: BTreeMap<Vec<usize>, Scalar>,
}

impl Tensor {
    pub fn zero(spaces: Vec<Space>) -> Tensor {
        Tensor { spaces, entries: BTreeMap::new() }
    }

    /// Zero tensor of order `k` on a single space.
    pub fn zero_on(space: &Space, k: usize) -> Tensor {
        Tensor::zero(vec![space.clone(); k])
    }

    pub fn from_entries<I>(spaces: Vec<Space>, entries: I) -> Result<Tensor>
    where
        I: IntoIterator<Item = (Vec<usize>, Scalar)>,
    {
        let mut t = Tensor::zero(spaces);
        for (idx, x) in entries {
            if idx.len() != t.order() {
                return Err(ForgeError::OrderMismatch { expected: t.order(), found: idx.len() });
            }
            for (i, s) in idx.iter().zip(&t.spaces) {
                if *i >= s.dim() {
                    return Err(ForgeError::IndexError { index: *i, bound: s.dim() });
                }
            }
            t.add_entry(idx, x);
        }
        Ok(t)
    }

    pub fn vector(space: &Space, coords: &[Scalar]) -> Tensor {
        assert_eq!(coords.len(), space.dim(), "coordinate count must match dim");
        let mut t = Tensor::zero(vec![space.clone()]);
        for (i, x) in coords.iter().enumerate() {
            t.add_entry(vec![i], x.clone());
        }
        t
    }

    pub fn basis(space: &Space, i: usize) -> Tensor {
        let mut t = Tensor::zero(vec![space.clone()]);
        t.add_entry(vec![i], one());
        t
    }

    pub fn order(&self) -> usize {
        self.spaces.len()
    }

    pub fn spaces(&self) -> &[Space] {
        &self.spaces
    }

    pub fn space(&self, slot: usize) -> &Space {
        &self.spaces[slot]
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, idx: &[usize]) -> Scalar {
        self.entries.get(idx).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Adds `x` at `idx`, dropping the entry if it cancels.
    pub fn add_entry(&mut self, idx: Vec<usize>, x: Scalar) {
        if x.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.entries.entry(idx) {
            Entry::Vacant(v) => {
                v.insert(x);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += x;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Single-space check: all slots live on `space`.
    pub fn expect_on(&self, space: &Space, order: usize) -> Result<()> {
        if self.order() != order {
            return Err(ForgeError::OrderMismatch { expected: order, found: self.order() });
        }
        for s in &self.spaces {
            space.expect(s)?;
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Tensor) -> Result<Tensor> {
        self.same_shape(other)?;
        let mut t = self.clone();
        for (idx, x) in &other.entries {
            t.add_entry(idx.clone(), x.clone());
        }
        Ok(t)
    }

    fn same_shape(&self, other: &Tensor) -> Result<()> {
        if self.order() != other.order() {
            return Err(ForgeError::OrderMismatch { expected: self.order(), found: other.order() });
        }
        for (a, b) in self.spaces.iter().zip(&other.spaces) {
            a.expect(b)?;
        }
        Ok(())
    }

    pub fn scale(&self, c: &Scalar) -> Tensor {
        if c.is_zero() {
            return Tensor::zero(self.spaces.clone());
        }
        Tensor {
            spaces: self.spaces.clone(),
            entries: self.entries.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Dense coordinates of an order-1 tensor.
    pub fn coords(&self) -> Vec<Scalar> {
        assert_eq!(self.order(), 1, "coords needs a vector");
        let mut v = vec![Scalar::zero(); self.spaces[0].dim()];
        for (idx, x) in &self.entries {
            v[idx[0]] = x.clone();
        }
        v
    }

    pub fn outer(&self, other: &Tensor) -> Tensor {
        let mut spaces = self.spaces.clone();
        spaces.extend(other.spaces.iter().cloned());
        let mut t = Tensor::zero(spaces);
        for (a, x) in &self.entries {
            for (b, y) in &other.entries {
                let mut idx = a.clone();
                idx.extend_from_slice(b);
                t.add_entry(idx, x * y);
            }
        }
        t
    }

    /// Reorders slots: slot `m` of the result is slot `perm[m]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> Tensor {
        assert_eq!(perm.len(), self.order());
        let spaces = perm.iter().map(|&p| self.spaces[p].clone()).collect();
        let entries = self
            .entries
            .iter()
            .map(|(idx, x)| (perm.iter().map(|&p| idx[p]).collect(), x.clone()))
            .collect();
        Tensor { spaces, entries }
    }

    /// `r²¹`: swaps the two slots of an order-2 tensor.
    pub fn transpose21(&self) -> Result<Tensor> {
        if self.order() != 2 {
            return Err(ForgeError::OrderMismatch { expected: 2, found: self.order() });
        }
        Ok(self.permute(&[1, 0]))
    }

    pub fn is_skew(&self) -> bool {
        if self.order() < 2 {
            return true;
        }
        if self.spaces.windows(2).any(|w| w[0] != w[1]) {
            return false;
        }
        let k = self.order();
        self.entries.iter().all(|(idx, x)| {
            (0..k - 1).all(|a| {
                let mut j = idx.clone();
                j.swap(a, a + 1);
                self.get(&j) == -x.clone()
            })
        })
    }

    pub fn is_symmetric(&self) -> bool {
        if self.order() < 2 {
            return true;
        }
        if self.spaces.windows(2).any(|w| w[0] != w[1]) {
            return false;
        }
        let k = self.order();
        self.entries.iter().all(|(idx, x)| {
            (0..k - 1).all(|a| {
                let mut j = idx.clone();
                j.swap(a, a + 1);
                self.get(&j) == *x
            })
        })
    }

    /// `r = Λ + s` with `Λ = (r − r²¹)/2` skew and `s = (r + r²¹)/2` symmetric.
    pub fn sym_skew_split(&self) -> Result<(Tensor, Tensor)> {
        let t = self.transpose21()?;
        self.same_shape(&t)?;
        let h = q(1, 2);
        let lam = (self - &t).scale(&h);
        let s = (self + &t).scale(&h);
        Ok((lam, s))
    }

    /// Applies a linear map in one slot.
    pub fn map_slot(&self, slot: usize, m: &super::linear::LinearMap) -> Result<Tensor> {
        m.domain().expect(&self.spaces[slot])?;
        let mut spaces = self.spaces.clone();
        spaces[slot] = m.codomain().clone();
        let mut t = Tensor::zero(spaces);
        for (idx, x) in &self.entries {
            for (row, c) in m.column(idx[slot]) {
                let mut j = idx.clone();
                j[slot] = row;
                t.add_entry(j, x * c);
            }
        }
        Ok(t)
    }

    /// Applies `σ` in every slot.
    pub fn pushforward(&self, m: &super::linear::LinearMap) -> Result<Tensor> {
        let mut t = self.clone();
        for slot in 0..self.order() {
            t = t.map_slot(slot, m)?;
        }
        Ok(t)
    }

    /// `Σ_slots (1 ⊗ … ⊗ M ⊗ … ⊗ 1) A`, the action of an endomorphism as a
    /// derivation on tensors.
    pub fn derivation(&self, m: &super::linear::LinearMap) -> Result<Tensor> {
        let mut out = Tensor::zero(self.spaces.clone());
        for slot in 0..self.order() {
            out += &self.map_slot(slot, m)?;
        }
        Ok(out)
    }

    /// Evaluates the tensor on covectors, one per slot, given as coordinate
    /// vectors in the dual bases.
    pub fn evaluate(&self, covectors: &[Vec<Scalar>]) -> Scalar {
        assert_eq!(covectors.len(), self.order());
        let mut acc = Scalar::zero();
        for (idx, x) in &self.entries {
            let mut term = x.clone();
            for (i, c) in idx.iter().zip(covectors) {
                if c[*i].is_zero() {
                    term = Scalar::zero();
                    break;
                }
                term *= &c[*i];
            }
            acc += term;
        }
        acc
    }
}

impl AddAssign<&Tensor> for Tensor {
    fn add_assign(&mut self, other: &Tensor) {
        self.same_shape(other).expect("tensor addition across different shapes");
        for (idx, x) in &other.entries {
            self.add_entry(idx.clone(), x.clone());
        }
    }
}

impl Add for &Tensor {
    type Output = Tensor;
    fn add(self, other: &Tensor) -> Tensor {
        let mut t = self.clone();
        t += other;
        t
    }
}

impl Sub for &Tensor {
    type Output = Tensor;
    fn sub(self, other: &Tensor) -> Tensor {
        let mut t = self.clone();
        t += &(-other);
        t
    }
}

impl Neg for &Tensor {
    type Output = Tensor;
    fn neg(self) -> Tensor {
        Tensor {
            spaces: self.spaces.clone(),
            entries: self.entries.iter().map(|(k, v)| (k.clone(), -v.clone())).collect(),
        }
    }
}

impl Mul<&Tensor> for &Scalar {
    type Output = Tensor;
    fn mul(self, t: &Tensor) -> Tensor {
        t.scale(self)
    }
}

/// Sums of labelled basis tensors, e.g. `1/4 h⊗h + f⊗e`.
impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "0");
        }
        for (n, (idx, x)) in self.entries.iter().enumerate() {
            let basis: Vec<String> = idx.iter().zip(&self.spaces).map(|(&i, s)| s.label(i)).collect();
            let (neg, abs) = if x < &Scalar::zero() { (true, -x) } else { (false, x.clone()) };
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (_, true) => write!(f, " - ")?,
                (0, false) => {}
                (_, false) => write!(f, " + ")?,
            }
            if abs != one() || basis.is_empty() {
                write!(f, "{abs}")?;
                if !basis.is_empty() {
                    write!(f, " ")?;
                }
            }
            write!(f, "{}", basis.join("⊗"))?;
        }
        Ok(())
    }
}

/// All permutations of `0..k` with their signs (`true` = odd).
pub fn permutations(k: usize) -> Vec<(Vec<usize>, bool)> {
    if k == 0 {
        return vec![(Vec::new(), false)];
    }
    let mut out = Vec::new();
    for (p, odd) in permutations(k - 1) {
        // insert k-1 at every position; moving it left past m entries adds m transpositions
        for pos in 0..=p.len() {
            let mut np = p.clone();
            np.insert(pos, k - 1);
            let moved = p.len() - pos;
            out.push((np, odd ^ (moved % 2 == 1)));
        }
    }
    out
}

/// `v₁∧…∧v_k = Σ_σ sign(σ) v_σ(1)⊗…⊗v_σ(k)`, with no `1/k!` factor.
pub fn wedge(vs: &[Tensor]) -> Result<Tensor> {
    let Some(first) = vs.first() else {
        return Err(ForgeError::InvalidArgument("wedge of an empty list".into()));
    };
    let space = first.space(0).clone();
    for v in vs {
        v.expect_on(&space, 1)?;
    }
    let mut out = Tensor::zero_on(&space, vs.len());
    for (perm, odd) in permutations(vs.len()) {
        let mut term = Tensor::zero(Vec::new());
        term.add_entry(Vec::new(), one());
        for &p in &perm {
            term = term.outer(&vs[p]);
        }
        if odd {
            term = -&term;
        }
        out += &term;
    }
    Ok(out)
}

/// Pairing of `A` on `V^{⊗k}` with `B` on `(V*)^{⊗k}` extending the
/// determinant formula `⟨x₁∧…∧x_k, ξ₁∧…∧ξ_k⟩ = det⟨x_i, ξ_j⟩`.
pub fn extended_pairing(a: &Tensor, b: &Tensor) -> Result<Scalar> {
    if a.order() != b.order() {
        return Err(ForgeError::OrderMismatch { expected: a.order(), found: b.order() });
    }
    for (x, y) in a.spaces().iter().zip(b.spaces()) {
        x.check_dual_of(y)?;
    }
    let mut acc = Scalar::zero();
    for (idx, x) in a.entries() {
        if let Some(y) = b.entries.get(idx) {
            acc += x * y;
        }
    }
    Ok(acc / factorial(a.order()))
}

/// As [`extended_pairing`] but through an explicit pairing matrix
/// `form[i][j] = ⟨v_i, w_j⟩` between the spaces of `a` and `b`.
pub fn extended_pairing_with(a: &Tensor, b: &Tensor, form: &Matrix) -> Result<Scalar> {
    if a.order() != b.order() {
        return Err(ForgeError::OrderMismatch { expected: a.order(), found: b.order() });
    }
    let mut acc = Scalar::zero();
    for (ia, x) in a.entries() {
        for (ib, y) in b.entries() {
            let mut term = x * y;
            for (i, j) in ia.iter().zip(ib) {
                if form[*i][*j].is_zero() {
                    term = Scalar::zero();
                    break;
                }
                term *= &form[*i][*j];
            }
            acc += term;
        }
    }
    Ok(acc / factorial(a.order()))
}

pub(crate) fn factorial(k: usize) -> Scalar {
    (1..=k as i64).fold(one(), |acc, i| acc * Scalar::from_integer(i.into()))
}
