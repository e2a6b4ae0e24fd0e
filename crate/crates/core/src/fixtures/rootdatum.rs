use crate::bialg::{cobracket_from_r, Cobracket, RMatrix};
use crate::error::{ForgeError, Result};
use crate::liealg::LieAlgebra;
use crate::tensorspace::{half, int, linalg, Matrix, Scalar, Space, Subspace, Tensor};

/// Root datum of `sl_{rank+1}` realized by matrix units.
///
/// Basis order: Cartan elements `h_i = E_ii − E_{i+1,i+1}`, then positive
/// root vectors `E_ab` (`a < b`), then negative root vectors `E_ba`, so that
/// `tr(E_ab E_ba) = 1`.
#[derive(Clone, Debug)]
pub struct RootDatum {
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    /// Positive roots in simple-root coordinates, ordered as the basis.
    pub positive_roots: Vec<Vec<i64>>,
    pub labels: Vec<String>,
    /// Trace form on the Cartan elements.
    pub cartan_form: Matrix,
    matrices: Vec<Matrix>,
    root_pairs: Vec<(usize, usize)>,
}

impl RootDatum {
    /// `sl_{rank+1}` with the trace form.
    pub fn type_a(rank: usize) -> Result<RootDatum> {
        if rank == 0 {
            return Err(ForgeError::InvalidArgument("rank must be positive".into()));
        }
        let n = rank + 1;
        let unit = |a: usize, b: usize| {
            let mut m = linalg::zeros(n, n);
            m[a][b] = int(1);
            m
        };
        let mut matrices = Vec::new();
        let mut labels = Vec::new();
        for i in 0..rank {
            let mut h = unit(i, i);
            h[i + 1][i + 1] = int(-1);
            matrices.push(h);
            labels.push(if rank == 1 { "h".to_string() } else { format!("h{}", i + 1) });
        }
        let mut root_pairs = Vec::new();
        for len in 1..n {
            for a in 0..n - len {
                root_pairs.push((a, a + len));
            }
        }
        let mut positive_roots = Vec::new();
        for &(a, b) in &root_pairs {
            matrices.push(unit(a, b));
            labels.push(if rank == 1 { "e".to_string() } else { format!("e{}{}", a + 1, b + 1) });
            positive_roots.push((0..rank).map(|i| i64::from(i >= a && i < b)).collect());
        }
        for &(a, b) in &root_pairs {
            matrices.push(unit(b, a));
            labels.push(if rank == 1 { "f".to_string() } else { format!("f{}{}", b + 1, a + 1) });
        }
        let cartan = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| match (i as i64 - j as i64).abs() {
                        0 => 2,
                        1 => -1,
                        _ => 0,
                    })
                    .collect()
            })
            .collect();
        let cartan_form = (0..rank)
            .map(|i| (0..rank).map(|j| trace_product(&matrices[i], &matrices[j])).collect())
            .collect();
        Ok(RootDatum { rank, cartan, positive_roots, labels, cartan_form, matrices, root_pairs })
    }

    pub fn matrix_size(&self) -> usize {
        self.rank + 1
    }

    pub fn dim(&self) -> usize {
        self.matrices.len()
    }

    pub fn name(&self) -> String {
        format!("sl{}", self.rank + 1)
    }

    pub fn basis_matrix(&self, i: usize) -> &Matrix {
        &self.matrices[i]
    }

    pub fn num_positive(&self) -> usize {
        self.root_pairs.len()
    }

    /// Basis index of `E_α` for the `k`-th positive root.
    pub fn positive_index(&self, k: usize) -> usize {
        self.rank + k
    }

    pub fn negative_index(&self, k: usize) -> usize {
        self.rank + self.root_pairs.len() + k
    }

    /// Coordinates of a traceless matrix in the basis.
    pub fn coords_of(&self, m: &Matrix) -> Vec<Scalar> {
        let n = self.matrix_size();
        let mut c = vec![int(0); self.dim()];
        // Diagonal: m_ii = c_i − c_{i−1} for the h part.
        let mut acc = int(0);
        for i in 0..self.rank {
            acc += &m[i][i];
            c[i] = acc.clone();
        }
        for (k, &(a, b)) in self.root_pairs.iter().enumerate() {
            c[self.positive_index(k)] = m[a][b].clone();
            c[self.negative_index(k)] = m[b][a].clone();
        }
        debug_assert!((0..n).map(|i| m[i][i].clone()).fold(int(0), |x, y| x + y) == int(0));
        c
    }

    /// The matrix with the given basis coordinates.
    pub fn matrix_of(&self, coords: &[Scalar]) -> Matrix {
        let n = self.matrix_size();
        let mut m = linalg::zeros(n, n);
        for (c, b) in coords.iter().zip(&self.matrices) {
            for i in 0..n {
                for j in 0..n {
                    m[i][j] += c * &b[i][j];
                }
            }
        }
        m
    }

    pub fn space(&self) -> Space {
        Space::new(self.name(), self.labels.clone()).expect("labels are distinct")
    }

    /// The Lie algebra with structure constants from matrix commutators and
    /// the trace form.
    pub fn algebra(&self) -> Result<LieAlgebra> {
        let space = self.space();
        let n = self.matrix_size();
        let dim = self.dim();
        let mut c = Tensor::zero_on(&space, 3);
        let mut form = Tensor::zero_on(&space, 2);
        for i in 0..dim {
            for j in 0..dim {
                let a = &self.matrices[i];
                let b = &self.matrices[j];
                let ab = linalg::mul(a, b, n);
                let ba = linalg::mul(b, a, n);
                let comm: Matrix = ab.iter().zip(&ba).map(|(x, y)| x.iter().zip(y).map(|(p, q)| p - q).collect()).collect();
                for (k, x) in self.coords_of(&comm).into_iter().enumerate() {
                    c.add_entry(vec![i, j, k], x);
                }
                form.add_entry(vec![i, j], trace_product(a, b));
            }
        }
        LieAlgebra::new(space, c, Some(form))
    }

    /// `r_st = ½·(inverse form on 𝔥) + Σ_{α>0} E_{−α} ⊗ E_α`.
    pub fn standard_r_tensor(&self) -> Result<Tensor> {
        let space = self.space();
        let inv = linalg::inverse(&self.cartan_form).ok_or(ForgeError::DegenerateCartanForm)?;
        let mut r = Tensor::zero_on(&space, 2);
        for (i, row) in inv.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                r.add_entry(vec![i, j], x * half());
            }
        }
        for k in 0..self.num_positive() {
            r.add_entry(vec![self.negative_index(k), self.positive_index(k)], int(1));
        }
        Ok(r)
    }

    /// `𝔟 = 𝔥 ⊕ 𝔫₊`.
    pub fn borel(&self) -> Subspace {
        let idx: Vec<usize> = (0..self.rank).chain((0..self.num_positive()).map(|k| self.positive_index(k))).collect();
        Subspace::coordinate(&self.space(), &idx)
    }

    /// `𝔟₋ = 𝔥 ⊕ 𝔫₋`.
    pub fn borel_minus(&self) -> Subspace {
        let idx: Vec<usize> = (0..self.rank).chain((0..self.num_positive()).map(|k| self.negative_index(k))).collect();
        Subspace::coordinate(&self.space(), &idx)
    }
}

pub(crate) fn trace_product(a: &Matrix, b: &Matrix) -> Scalar {
    let n = a.len();
    let mut t = int(0);
    for i in 0..n {
        for k in 0..n {
            t += &a[i][k] * &b[k][i];
        }
    }
    t
}

/// The standard r-matrix of the datum.
pub fn standard_r(datum: &RootDatum) -> Result<RMatrix> {
    let g = datum.algebra()?;
    let r = RMatrix::new(&g, datum.standard_r_tensor()?)?;
    if !r.is_quasitriangular() {
        return Err(ForgeError::ConventionViolation("standard r-matrix is not quasitriangular".into()));
    }
    Ok(r)
}

/// `(sl_{rank+1}, δ_{r_st})`.
pub fn standard_bialgebra(datum: &RootDatum) -> Result<(RMatrix, Cobracket)> {
    let r = standard_r(datum)?;
    let cb = cobracket_from_r(r.algebra(), r.tensor())?;
    Ok((r, cb))
}
