use crate::bialg::{cyb, RMatrix};
use crate::error::{ForgeError, Result};
use crate::liealg::{LieAlgebra, Violation};
use crate::tensorspace::{linalg, one, sharp, wedge, zero, DirectSum, LinearMap, Scalar, Space, Tensor};

/// Name of the space `Vⁿ`; every construction on `Vⁿ` goes through it so
/// that tensors built independently live on equal spaces.
pub fn power_name(space: &Space, n: usize) -> String {
    format!("{}^{}", space.name(), n)
}

pub fn power_sum(space: &Space, n: usize) -> DirectSum {
    DirectSum::new(power_name(space, n), vec![space.clone(); n])
}

/// The direct product Lie algebra `gⁿ`.
pub fn power(g: &LieAlgebra, n: usize) -> Result<(LieAlgebra, DirectSum)> {
    if n == 0 {
        return Err(ForgeError::InvalidArgument("n must be at least 1".into()));
    }
    let parts = vec![g; n];
    LieAlgebra::direct_sum(&power_name(g.space(), n), &parts, None)
}

fn base_space(r: &Tensor) -> Result<Space> {
    if r.order() != 2 {
        return Err(ForgeError::OrderMismatch { expected: 2, found: r.order() });
    }
    r.space(0).expect(r.space(1))?;
    Ok(r.space(0).clone())
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(ForgeError::InvalidArgument("n must be at least 1".into()));
    }
    Ok(())
}

/// `Altⁿ(r) = (r, −r²¹, r, −r²¹, …)`.
pub fn alt_n(r: &Tensor, n: usize) -> Result<Tensor> {
    check_n(n)?;
    let sum = power_sum(&base_space(r)?, n);
    let r21 = -&r.transpose21()?;
    let blocks: Vec<Tensor> = (0..n).map(|j| if j % 2 == 0 { r.clone() } else { r21.clone() }).collect();
    sum.assemble(&blocks)
}

/// `(Mixⁿ(r))_{j,k} = Σ_i (y_i)_j ∧ (x_i)_k` for `r = Σ x_i ⊗ y_i`
/// (0-based `j < k`).
pub fn mix_block(r: &Tensor, n: usize, j: usize, k: usize) -> Result<Tensor> {
    let space = base_space(r)?;
    if j >= k || k >= n {
        return Err(ForgeError::IndexError { index: k.max(j), bound: n });
    }
    let sum = power_sum(&space, n);
    let total = sum.space();
    let mut out = Tensor::zero_on(total, 2);
    for (idx, c) in r.entries() {
        let y = Tensor::basis(total, sum.offset(j) + idx[1]);
        let x = Tensor::basis(total, sum.offset(k) + idx[0]);
        out += &wedge(&[y, x])?.scale(c);
    }
    Ok(out)
}

/// `Mixⁿ(r) = Σ_{j<k} (Mixⁿ(r))_{j,k}`.
pub fn mix_n(r: &Tensor, n: usize) -> Result<Tensor> {
    check_n(n)?;
    let mut out = Tensor::zero_on(power_sum(&base_space(r)?, n).space(), 2);
    for j in 0..n {
        for k in j + 1..n {
            out += &mix_block(r, n, j, k)?;
        }
    }
    Ok(out)
}

/// `(A, A, …, A)` on `Vⁿ`.
pub fn repeat_blocks(a: &Tensor, n: usize) -> Result<Tensor> {
    check_n(n)?;
    let sum = power_sum(&base_space(a)?, n);
    sum.assemble(&vec![a.clone(); n])
}

/// `r⁽ⁿ⁾ = Altⁿ(r) − Mixⁿ(r)` with its pieces.
#[derive(Clone, Debug)]
pub struct RPower {
    n: usize,
    base: RMatrix,
    algebra: LieAlgebra,
    sum: DirectSum,
    tensor: Tensor,
    alt: Tensor,
    mix: Tensor,
    blocks: Vec<((usize, usize), Tensor)>,
}

pub fn r_power(r: &RMatrix, n: usize) -> Result<RPower> {
    r.require_quasitriangular()?;
    let (algebra, sum) = power(r.algebra(), n)?;
    let alt = alt_n(r.tensor(), n)?;
    let mut blocks = Vec::new();
    let mut mix = Tensor::zero_on(sum.space(), 2);
    for j in 0..n {
        for k in j + 1..n {
            let b = mix_block(r.tensor(), n, j, k)?;
            mix += &b;
            blocks.push(((j, k), b));
        }
    }
    let tensor = &alt - &mix;
    Ok(RPower { n, base: r.clone(), algebra, sum, tensor, alt, mix, blocks })
}

impl RPower {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn base(&self) -> &RMatrix {
        &self.base
    }

    /// `gⁿ`.
    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn sum(&self) -> &DirectSum {
        &self.sum
    }

    /// `r⁽ⁿ⁾`.
    pub fn tensor(&self) -> &Tensor {
        &self.tensor
    }

    pub fn alt(&self) -> &Tensor {
        &self.alt
    }

    pub fn mix(&self) -> &Tensor {
        &self.mix
    }

    /// `((j, k), (Mixⁿ(r))_{j,k})` for `j < k`, 0-based.
    pub fn blocks(&self) -> &[((usize, usize), Tensor)] {
        &self.blocks
    }

    pub fn cyb(&self) -> Result<Tensor> {
        cyb(&self.algebra, &self.tensor)
    }

    /// `r⁽ⁿ⁾` as an r-matrix on `gⁿ` (computes `r±`, `f±` and the flags).
    pub fn rmatrix(&self) -> Result<RMatrix> {
        RMatrix::new(&self.algebra, self.tensor.clone())
    }

    /// `(s, −s, s, …)`.
    pub fn expected_sym(&self) -> Result<Tensor> {
        let s = self.base.sym();
        let blocks: Vec<Tensor> = (0..self.n).map(|j| if j % 2 == 0 { s.clone() } else { -s }).collect();
        self.sum.assemble(&blocks)
    }

    /// Blocks whose sharp map differs from
    /// `(ξ_1, …, ξ_n) ↦ (−r₊ξ_k)_j + (−r₋ξ_j)_k`.
    pub fn mix_sharp_violations(&self) -> Result<Vec<Violation>> {
        let total = self.sum.space().dim();
        let mut out = Vec::new();
        for ((j, k), b) in &self.blocks {
            if !b.is_skew() {
                out.push(Violation(vec![format!("Mix({},{}) not skew", j + 1, k + 1)]));
                continue;
            }
            let images: Vec<Vec<Scalar>> = (0..total)
                .map(|col| {
                    let (blk, a) = self.sum.locate(col);
                    let mut v = vec![zero(); total];
                    if blk == *k {
                        for (row, x) in self.base.r_plus().column(a) {
                            v[self.sum.offset(*j) + row] -= x;
                        }
                    }
                    if blk == *j {
                        for (row, x) in self.base.r_minus().column(a) {
                            v[self.sum.offset(*k) + row] -= x;
                        }
                    }
                    v
                })
                .collect();
            let expected = LinearMap::from_images(self.sum.space().dual(), self.sum.space().clone(), &images)?;
            if sharp(b)? != expected {
                out.push(Violation(vec![format!("Mix({},{})", j + 1, k + 1)]));
            }
        }
        Ok(out)
    }
}

/// `r^⟨n+1⟩` on `g^{n+1}`: `(r⁽ⁿ⁾, 0) + (0, −r)` for odd `n`,
/// `(r⁽ⁿ⁾, 0) + (0, r²¹)` for even `n`.
pub fn r_angle(r: &RMatrix, n_plus_1: usize) -> Result<Tensor> {
    if n_plus_1 < 2 {
        return Err(ForgeError::InvalidArgument("r^<n+1> needs n+1 ≥ 2".into()));
    }
    let n = n_plus_1 - 1;
    let rn = r_power(r, n)?;
    let big = power_sum(r.algebra().space(), n_plus_1);
    let head = LinearMap::from_images(
        rn.sum().space().clone(),
        big.space().clone(),
        &(0..rn.sum().space().dim()).map(|i| linalg::unit(big.space().dim(), i)).collect::<Vec<_>>(),
    )?;
    let last = if n % 2 == 1 { -r.tensor() } else { r.r21() };
    Ok(&rn.tensor().pushforward(&head)? + &big.embed(&last, n)?)
}

/// The bracket on `(g*)ⁿ` given block by block:
/// `ζ_j = [ξ_j, η_j] + ad*_{A_j} η_j − ad*_{B_j} ξ_j` with
/// `A_j = r₋(ξ_1+…+ξ_{j−1}) + r₊(ξ_{j+1}+…+ξ_n)` and `B_j` likewise from `η`,
/// and `[ξ, η] = ad*_{r₋ξ} η − ad*_{r₊η} ξ`.
pub fn dual_bracket_rn(r: &RMatrix, xi: &[Vec<Scalar>], eta: &[Vec<Scalar>]) -> Result<Vec<Vec<Scalar>>> {
    let g = r.algebra();
    let m = g.dim();
    let n = xi.len();
    if eta.len() != n {
        return Err(ForgeError::IndexError { index: eta.len(), bound: n });
    }
    for v in xi.iter().chain(eta) {
        if v.len() != m {
            return Err(ForgeError::IndexError { index: v.len(), bound: m });
        }
    }
    let zero = vec![zero(); m];
    let add = |a: &[Scalar], b: &[Scalar]| a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<Scalar>>();
    let partial = |v: &[Vec<Scalar>], range: std::ops::Range<usize>| v[range].iter().fold(zero.clone(), |acc, x| add(&acc, x));
    let coad = |x: &[Scalar], f: &[Scalar]| g.coad(x).apply_coords(f);
    let bracket = |a: &[Scalar], b: &[Scalar]| {
        let p = coad(&r.r_minus().apply_coords(a), b);
        let q = coad(&r.r_plus().apply_coords(b), a);
        p.iter().zip(&q).map(|(x, y)| x - y).collect::<Vec<Scalar>>()
    };
    let mut out = Vec::with_capacity(n);
    for j in 0..n {
        let a = add(&r.r_minus().apply_coords(&partial(xi, 0..j)), &r.r_plus().apply_coords(&partial(xi, j + 1..n)));
        let b = add(&r.r_minus().apply_coords(&partial(eta, 0..j)), &r.r_plus().apply_coords(&partial(eta, j + 1..n)));
        let base = bracket(&xi[j], &eta[j]);
        let p = coad(&a, &eta[j]);
        let q = coad(&b, &xi[j]);
        out.push(base.iter().zip(&p).zip(&q).map(|((x, y), z)| x + y - z).collect());
    }
    Ok(out)
}

/// `Mixⁿ(r) − (Mixʲ(r), 0) − (0, Mix^{n−j}(r)) − Σ_i (r₊ξ_i, …, r₊ξ_i, 0, …) ∧ (0, …, x_i, …, x_i)`,
/// which vanishes (`1 ≤ j < n`).
pub fn step_by_step_defect(r: &RMatrix, n: usize, j: usize) -> Result<Tensor> {
    if j == 0 || j >= n {
        return Err(ForgeError::IndexError { index: j, bound: n });
    }
    let space = r.algebra().space();
    let m = space.dim();
    let big = power_sum(space, n);
    let total = big.space().clone();
    let shift = |k: usize, off: usize| -> Result<LinearMap> {
        let src = power_sum(space, k);
        let images: Vec<Vec<Scalar>> = (0..src.space().dim()).map(|i| linalg::unit(total.dim(), big.offset(off) + i)).collect();
        LinearMap::from_images(src.space().clone(), total.clone(), &images)
    };
    let mut d = mix_n(r.tensor(), n)?;
    if j >= 2 {
        d = &d - &mix_n(r.tensor(), j)?.pushforward(&shift(j, 0)?)?;
    }
    if n - j >= 2 {
        d = &d - &mix_n(r.tensor(), n - j)?.pushforward(&shift(n - j, j)?)?;
    }
    for i in 0..m {
        let rp = r.r_plus().image_of(i);
        let mut left = vec![zero(); total.dim()];
        let mut right = left.clone();
        for b in 0..j {
            for (a, x) in rp.iter().enumerate() {
                left[big.offset(b) + a] += x;
            }
        }
        for b in j..n {
            right[big.offset(b) + i] += one();
        }
        d = &d - &wedge(&[Tensor::vector(&total, &left), Tensor::vector(&total, &right)])?;
    }
    Ok(d)
}
