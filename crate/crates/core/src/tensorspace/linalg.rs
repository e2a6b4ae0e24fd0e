//! Dense exact linear algebra on row-major rational matrices.

use num_traits::{One, Zero};

use super::scalar::Scalar;

pub type Matrix = Vec<Vec<Scalar>>;

pub fn zeros(rows: usize, cols: usize) -> Matrix {
    vec![vec![Scalar::zero(); cols]; rows]
}

pub fn identity(n: usize) -> Matrix {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Scalar::one();
    }
    m
}

pub fn transpose(m: &Matrix, cols: usize) -> Matrix {
    let mut t = zeros(cols, m.len());
    for (i, row) in m.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            t[j][i] = x.clone();
        }
    }
    t
}

pub fn mul(a: &Matrix, b: &Matrix, b_cols: usize) -> Matrix {
    let mut c = zeros(a.len(), b_cols);
    for (i, row) in a.iter().enumerate() {
        for (k, x) in row.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b[k].iter().enumerate() {
                if !y.is_zero() {
                    c[i][j] += x * y;
                }
            }
        }
    }
    c
}

pub fn mul_vec(a: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(x, y)| !x.is_zero() && !y.is_zero())
                .fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
        })
        .collect()
}

/// Reduced row-echelon form with zero rows removed. Returns the rows and the
/// pivot column of each.
pub fn rref(m: &Matrix, cols: usize) -> (Matrix, Vec<usize>) {
    let mut a: Matrix = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = Scalar::one() / &a[r][c];
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    a.truncate(r);
    (a, pivots)
}

pub fn rank(m: &Matrix, cols: usize) -> usize {
    rref(m, cols).1.len()
}

/// Basis of `{v : m v = 0}`.
pub fn kernel(m: &Matrix, cols: usize) -> Matrix {
    let (r, pivots) = rref(m, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); cols];
            v[f] = Scalar::one();
            for (row, &p) in r.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let aug: Matrix = m
        .iter()
        .zip(identity(n))
        .map(|(row, id)| row.iter().cloned().chain(id).collect())
        .collect();
    let (r, pivots) = rref(&aug, 2 * n);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(r.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Coefficients `c` with `Σ c_i vectors[i] = target`, if any.
pub fn solve_combination(vectors: &[Vec<Scalar>], target: &[Scalar]) -> Option<Vec<Scalar>> {
    let k = vectors.len();
    let n = target.len();
    let aug: Matrix = (0..n)
        .map(|row| {
            let mut r: Vec<Scalar> = vectors.iter().map(|v| v[row].clone()).collect();
            r.push(target[row].clone());
            r
        })
        .collect();
    let (r, pivots) = rref(&aug, k + 1);
    if pivots.last() == Some(&k) {
        return None;
    }
    let mut c = vec![Scalar::zero(); k];
    for (row, &p) in r.iter().zip(&pivots) {
        c[p] = row[k].clone();
    }
    Some(c)
}

/// Matrix `L` (k × n) with `L v_i = e_i` for independent columns `v_i`.
pub fn left_inverse(vectors: &[Vec<Scalar>], n: usize) -> Option<Matrix> {
    let k = vectors.len();
    let gram: Matrix = (0..k)
        .map(|i| (0..k).map(|j| dot(&vectors[i], &vectors[j])).collect())
        .collect();
    let g_inv = inverse(&gram)?;
    // L = G⁻¹ Vᵀ
    let vt: Matrix = vectors.to_vec();
    Some(mul(&g_inv, &vt, n))
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Scalar::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

/// `Σ coords[i] · basis[i]` in an `n`-dimensional space.
pub fn combine(basis: &[Vec<Scalar>], coords: &[Scalar], n: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    for (b, c) in basis.iter().zip(coords) {
        if c.is_zero() {
            continue;
        }
        for (x, y) in v.iter_mut().zip(b) {
            *x += c * y;
        }
    }
    v
}
