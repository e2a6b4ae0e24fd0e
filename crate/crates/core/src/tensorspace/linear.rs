use num_traits::Zero;

use super::linalg::{self, Matrix};
use super::scalar::Scalar;
use super::space::Space;
use super::subspace::Subspace;
use super::tensor::Tensor;
use crate::error::{ForgeError, Result};

/// Linear map with a dense matrix; `matrix[row][col]` is the coefficient of
/// the codomain basis vector `row` in the image of domain basis vector `col`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    domain: Space,
    codomain: Space,
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(domain: Space, codomain: Space, matrix: Matrix) -> Result<LinearMap> {
        if matrix.len() != codomain.dim() || matrix.iter().any(|r| r.len() != domain.dim()) {
            return Err(ForgeError::InvalidArgument(format!(
                "matrix shape does not match {} -> {}",
                domain.name(),
                codomain.name()
            )));
        }
        Ok(LinearMap { domain, codomain, matrix })
    }

    /// Map sending domain basis vector `i` to `images[i]`.
    pub fn from_images(domain: Space, codomain: Space, images: &[Vec<Scalar>]) -> Result<LinearMap> {
        if images.len() != domain.dim() {
            return Err(ForgeError::InvalidArgument("one image per basis vector required".into()));
        }
        let matrix = linalg::transpose(&images.to_vec(), codomain.dim());
        let matrix = if domain.dim() == 0 { vec![Vec::new(); codomain.dim()] } else { matrix };
        LinearMap::new(domain, codomain, matrix)
    }

    pub fn identity(space: &Space) -> LinearMap {
        LinearMap { domain: space.clone(), codomain: space.clone(), matrix: linalg::identity(space.dim()) }
    }

    pub fn zero(domain: &Space, codomain: &Space) -> LinearMap {
        LinearMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            matrix: linalg::zeros(codomain.dim(), domain.dim()),
        }
    }

    pub fn domain(&self) -> &Space {
        &self.domain
    }

    pub fn codomain(&self) -> &Space {
        &self.codomain
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Nonzero entries of column `col` as `(row, value)`.
    pub fn column(&self, col: usize) -> impl Iterator<Item = (usize, &Scalar)> {
        self.matrix.iter().enumerate().filter_map(move |(r, row)| {
            let x = &row[col];
            (!x.is_zero()).then_some((r, x))
        })
    }

    pub fn image_of(&self, col: usize) -> Vec<Scalar> {
        self.matrix.iter().map(|row| row[col].clone()).collect()
    }

    pub fn apply_coords(&self, v: &[Scalar]) -> Vec<Scalar> {
        linalg::mul_vec(&self.matrix, v)
    }

    pub fn apply(&self, v: &Tensor) -> Result<Tensor> {
        v.expect_on(&self.domain, 1)?;
        Ok(Tensor::vector(&self.codomain, &self.apply_coords(&v.coords())))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap> {
        self.domain.expect(&other.codomain)?;
        Ok(LinearMap {
            domain: other.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: linalg::mul(&self.matrix, &other.matrix, other.domain.dim()),
        })
    }

    pub fn add(&self, other: &LinearMap) -> Result<LinearMap> {
        self.domain.expect(&other.domain)?;
        self.codomain.expect(&other.codomain)?;
        let matrix = self
            .matrix
            .iter()
            .zip(&other.matrix)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Ok(LinearMap { domain: self.domain.clone(), codomain: self.codomain.clone(), matrix })
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        LinearMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.matrix.iter().map(|r| r.iter().map(|x| x * c).collect()).collect(),
        }
    }

    /// Dual map `W* → V*`.
    pub fn transpose(&self) -> LinearMap {
        LinearMap {
            domain: self.codomain.dual(),
            codomain: self.domain.dual(),
            matrix: linalg::transpose(&self.matrix, self.domain.dim()),
        }
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.matrix, self.domain.dim())
    }

    pub fn is_invertible(&self) -> bool {
        self.domain.dim() == self.codomain.dim() && self.rank() == self.domain.dim()
    }

    pub fn inverse(&self) -> Option<LinearMap> {
        if self.domain.dim() != self.codomain.dim() {
            return None;
        }
        linalg::inverse(&self.matrix).map(|m| LinearMap {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            matrix: m,
        })
    }

    pub fn image(&self) -> Subspace {
        let cols: Vec<Vec<Scalar>> = (0..self.domain.dim()).map(|c| self.image_of(c)).collect();
        Subspace::span(&self.codomain, &cols)
    }

    pub fn kernel(&self) -> Subspace {
        Subspace::span(&self.domain, &linalg::kernel(&self.matrix, self.domain.dim()))
    }

    /// Image of a subspace.
    pub fn map_subspace(&self, u: &Subspace) -> Result<Subspace> {
        self.domain.expect(u.parent())?;
        let imgs: Vec<Vec<Scalar>> = u.basis().iter().map(|v| self.apply_coords(v)).collect();
        Ok(Subspace::span(&self.codomain, &imgs))
    }
}
