//! Exterior-basis view of skew tensors: coefficients on `e_{i₁}∧…∧e_{i_k}`
//! with `i₁ < … < i_k`, under the no-`1/k!` wedge convention.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::scalar::Scalar;
use super::space::Space;
use super::tensor::{permutations, Tensor};
use crate::error::{ForgeError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exterior {
    pub degree: usize,
    pub terms: BTreeMap<Vec<usize>, Scalar>,
}

impl Exterior {
    pub fn zero(degree: usize) -> Exterior {
        Exterior { degree, terms: BTreeMap::new() }
    }

    pub fn monomial(idx: &[usize], c: Scalar) -> Exterior {
        let mut e = Exterior::zero(idx.len());
        e.add_monomial(idx, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c · e_{idx}` for an arbitrary index list, sorting with sign.
    pub fn add_monomial(&mut self, idx: &[usize], c: Scalar) {
        if c.is_zero() {
            return;
        }
        let Some((sorted, odd)) = sort_with_sign(idx) else {
            return;
        };
        let c = if odd { -c } else { c };
        let slot = self.terms.entry(sorted.clone()).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&sorted);
        }
    }

    pub fn add(&mut self, other: &Exterior) {
        for (idx, c) in &other.terms {
            self.add_monomial(idx, c.clone());
        }
    }

    pub fn scale(&self, c: &Scalar) -> Exterior {
        let mut e = Exterior::zero(self.degree);
        for (idx, x) in &self.terms {
            e.add_monomial(idx, x * c);
        }
        e
    }

    pub fn wedge(&self, other: &Exterior) -> Exterior {
        let mut e = Exterior::zero(self.degree + other.degree);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut idx = a.clone();
                idx.extend_from_slice(b);
                e.add_monomial(&idx, x * y);
            }
        }
        e
    }

    /// Reads a skew tensor; the coefficient of `e_I` is the entry at sorted `I`.
    pub fn from_tensor(t: &Tensor) -> Result<Exterior> {
        if !t.is_skew() {
            return Err(ForgeError::NotSkew);
        }
        let mut e = Exterior::zero(t.order());
        for (idx, x) in t.entries() {
            if idx.windows(2).all(|w| w[0] < w[1]) {
                e.terms.insert(idx.clone(), x.clone());
            }
        }
        Ok(e)
    }

    pub fn to_tensor(&self, space: &Space) -> Tensor {
        let mut t = Tensor::zero_on(space, self.degree);
        let perms = permutations(self.degree);
        for (idx, x) in &self.terms {
            for (p, odd) in &perms {
                let j: Vec<usize> = p.iter().map(|&k| idx[k]).collect();
                t.add_entry(j, if *odd { -x.clone() } else { x.clone() });
            }
        }
        t
    }
}

/// Sorts `idx`, returning the parity of the sorting permutation, or `None`
/// if an index repeats.
pub fn sort_with_sign(idx: &[usize]) -> Option<(Vec<usize>, bool)> {
    let mut v = idx.to_vec();
    let mut odd = false;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, odd))
}

/// Exterior product of two skew tensors on the same space.
pub fn wedge_product(a: &Tensor, b: &Tensor) -> Result<Tensor> {
    let space = match (a.spaces().first(), b.spaces().first()) {
        (Some(s), _) | (None, Some(s)) => s.clone(),
        (None, None) => return Ok(a.outer(b)),
    };
    a.expect_on(&space, a.order())?;
    b.expect_on(&space, b.order())?;
    if a.order() == 0 || b.order() == 0 {
        return Ok(a.outer(b));
    }
    let x = Exterior::from_tensor(a)?;
    let y = Exterior::from_tensor(b)?;
    Ok(x.wedge(&y).to_tensor(&space))
}
