use num_traits::Zero;

use super::linalg::{self, Matrix};
use super::scalar::Scalar;
use super::space::Space;
use super::tensor::Tensor;
use crate::error::Result;

/// Subspace held in canonical reduced row-echelon form, so `==` decides
/// equality of subspaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    parent: Space,
    rows: Matrix,
}

impl Subspace {
    pub fn span(parent: &Space, vectors: &[Vec<Scalar>]) -> Subspace {
        let (rows, _) = linalg::rref(&vectors.to_vec(), parent.dim());
        Subspace { parent: parent.clone(), rows }
    }

    pub fn span_tensors(parent: &Space, vectors: &[Tensor]) -> Result<Subspace> {
        let mut coords = Vec::new();
        for v in vectors {
            v.expect_on(parent, 1)?;
            coords.push(v.coords());
        }
        Ok(Subspace::span(parent, &coords))
    }

    pub fn zero(parent: &Space) -> Subspace {
        Subspace { parent: parent.clone(), rows: Vec::new() }
    }

    pub fn full(parent: &Space) -> Subspace {
        Subspace { parent: parent.clone(), rows: linalg::identity(parent.dim()) }
    }

    /// Span of the basis vectors with the given indices.
    pub fn coordinate(parent: &Space, indices: &[usize]) -> Subspace {
        let vs: Vec<Vec<Scalar>> = indices.iter().map(|&i| linalg::unit(parent.dim(), i)).collect();
        Subspace::span(parent, &vs)
    }

    pub fn parent(&self) -> &Space {
        &self.parent
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// The canonical (RREF) basis.
    pub fn basis(&self) -> &Matrix {
        &self.rows
    }

    pub fn basis_tensors(&self) -> Vec<Tensor> {
        self.rows.iter().map(|r| Tensor::vector(&self.parent, r)).collect()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        if linalg::is_zero_vec(v) {
            return true;
        }
        let mut m = self.rows.clone();
        m.push(v.to_vec());
        linalg::rank(&m, self.parent.dim()) == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut m = self.rows.clone();
        m.extend(other.rows.iter().cloned());
        Subspace::span(&self.parent, &m)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // Solve Σ a_i u_i = Σ b_j w_j.
        let n = self.parent.dim();
        let k = self.dim();
        let cols: Vec<Vec<Scalar>> = self
            .rows
            .iter()
            .cloned()
            .chain(other.rows.iter().map(|w| w.iter().map(|x| -x.clone()).collect()))
            .collect();
        let m = linalg::transpose(&cols, n);
        let ker = linalg::kernel(&m, cols.len());
        let vs: Vec<Vec<Scalar>> = ker
            .iter()
            .map(|c| {
                let mut v = vec![Scalar::zero(); n];
                for (a, u) in c[..k].iter().zip(&self.rows) {
                    for (x, y) in v.iter_mut().zip(u) {
                        *x += a * y;
                    }
                }
                v
            })
            .collect();
        Subspace::span(&self.parent, &vs)
    }

    /// `U⁰ ⊆ V*`, the covectors vanishing on `U`.
    pub fn annihilator(&self) -> Subspace {
        let ker = linalg::kernel(&self.rows, self.parent.dim());
        Subspace::span(&self.parent.dual(), &ker)
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        linalg::solve_combination(&self.rows, v)
    }
}
