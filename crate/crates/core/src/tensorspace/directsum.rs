use super::linalg;
use super::linear::LinearMap;
use super::scalar::Scalar;
use super::space::Space;
use super::tensor::Tensor;
use crate::error::{ForgeError, Result};

/// `V₁ ⊕ … ⊕ V_n` with its block structure, basis ordered block by block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectSum {
    space: Space,
    parts: Vec<Space>,
    offsets: Vec<usize>,
}

impl DirectSum {
    pub fn new(name: impl Into<String>, parts: Vec<Space>) -> DirectSum {
        let space = Space::direct_sum(name, &parts);
        let mut offsets = Vec::with_capacity(parts.len());
        let mut acc = 0;
        for p in &parts {
            offsets.push(acc);
            acc += p.dim();
        }
        DirectSum { space, parts, offsets }
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn parts(&self) -> &[Space] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn offset(&self, j: usize) -> usize {
        self.offsets[j]
    }

    /// Block index and local index of a global basis index.
    pub fn locate(&self, i: usize) -> (usize, usize) {
        let j = (0..self.parts.len())
            .find(|&j| i >= self.offsets[j] && i < self.offsets[j] + self.parts[j].dim())
            .expect("index inside the direct sum");
        (j, i - self.offsets[j])
    }

    pub fn check_position(&self, j: usize) -> Result<()> {
        if j >= self.parts.len() {
            return Err(ForgeError::IndexError { index: j, bound: self.parts.len() });
        }
        Ok(())
    }

    /// Inclusion `V_j → V₁⊕…⊕V_n` (0-based `j`).
    pub fn inclusion(&self, j: usize) -> Result<LinearMap> {
        self.check_position(j)?;
        let n = self.space.dim();
        let images: Vec<Vec<Scalar>> =
            (0..self.parts[j].dim()).map(|i| linalg::unit(n, self.offsets[j] + i)).collect();
        LinearMap::from_images(self.parts[j].clone(), self.space.clone(), &images)
    }

    /// Projection `V₁⊕…⊕V_n → V_j`.
    pub fn projection(&self, j: usize) -> Result<LinearMap> {
        Ok(self.inclusion(j)?.transpose_plain())
    }

    /// Embeds a tensor on `V_j` in every slot: the `(0,…,A_j,…,0)` of block
    /// notation.
    pub fn embed(&self, a: &Tensor, j: usize) -> Result<Tensor> {
        let inc = self.inclusion(j)?;
        a.pushforward(&inc)
    }

    /// Embeds a tensor whose slot `m` lives on block `blocks[m]`.
    pub fn embed_mixed(&self, a: &Tensor, blocks: &[usize]) -> Result<Tensor> {
        let mut t = a.clone();
        for (slot, &j) in blocks.iter().enumerate() {
            t = t.map_slot(slot, &self.inclusion(j)?)?;
        }
        Ok(t)
    }

    /// Sum of block embeddings `(A₁,…,A_n)`.
    pub fn assemble(&self, blocks: &[Tensor]) -> Result<Tensor> {
        if blocks.len() != self.parts.len() {
            return Err(ForgeError::IndexError { index: blocks.len(), bound: self.parts.len() });
        }
        let k = blocks.first().map(Tensor::order).unwrap_or(0);
        let mut out = Tensor::zero_on(&self.space, k);
        for (j, b) in blocks.iter().enumerate() {
            out += &self.embed(b, j)?;
        }
        Ok(out)
    }

    /// Block of the coordinate vector `v` at position `j`.
    pub fn block_coords(&self, v: &[Scalar], j: usize) -> Vec<Scalar> {
        v[self.offsets[j]..self.offsets[j] + self.parts[j].dim()].to_vec()
    }

    pub fn concat_coords(&self, blocks: &[Vec<Scalar>]) -> Vec<Scalar> {
        blocks.iter().flatten().cloned().collect()
    }
}

impl LinearMap {
    /// Matrix transpose as a map between the original spaces reversed, used
    /// for block projections where the basis is orthonormal by construction.
    pub(crate) fn transpose_plain(&self) -> LinearMap {
        LinearMap::new(
            self.codomain().clone(),
            self.domain().clone(),
            linalg::transpose(self.matrix(), self.domain().dim()),
        )
        .expect("transposed shape is consistent")
    }
}

/// `(0,…,A,…,0)` on `V₁⊕…⊕V_n` for a tensor on `V_j` (0-based `j`).
pub fn direct_sum_embed(a: &Tensor, j: usize, ambient: &DirectSum) -> Result<Tensor> {
    ambient.check_position(j)?;
    for s in a.spaces() {
        ambient.parts()[j].expect(s)?;
    }
    ambient.embed(a, j)
}
