use num_traits::Zero;

use crate::error::{ForgeError, Result};
use crate::tensorspace::{linalg, sharp, DirectSum, LinearMap, Matrix, Scalar, Space, Subspace, Tensor};

/// Basis triple or pair at which an identity fails, by label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation(pub Vec<String>);

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})", self.0.join(", "))
    }
}

type Table = Vec<Vec<Vec<(usize, Scalar)>>>;

/// Finite-dimensional Lie algebra `[e_i, e_j] = Σ_k c(i,j,k) e_k`, with an
/// optional invariant symmetric form.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    space: Space,
    structure: Tensor,
    table: Table,
    form: Option<Tensor>,
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.structure == other.structure && self.form == other.form
    }
}

impl LieAlgebra {
    /// Validates antisymmetry, Jacobi and (if given) form invariance.
    pub fn new(space: Space, structure: Tensor, form: Option<Tensor>) -> Result<LieAlgebra> {
        let g = LieAlgebra::new_unchecked(space, structure, form)?;
        if let Some(v) = g.check_antisymmetry().first() {
            return Err(ForgeError::NotLieAlgebra(format!("antisymmetry fails at {v}")));
        }
        if let Some(v) = g.check_jacobi().first() {
            return Err(ForgeError::NotLieAlgebra(format!("Jacobi fails at {v}")));
        }
        if let Some(v) = g.check_form().first() {
            return Err(ForgeError::FormNotInvariant(v.to_string()));
        }
        Ok(g)
    }

    /// Shape checks only; for deliberately broken fixtures.
    pub fn new_unchecked(space: Space, structure: Tensor, form: Option<Tensor>) -> Result<LieAlgebra> {
        structure.expect_on(&space, 3)?;
        if let Some(f) = &form {
            f.expect_on(&space, 2)?;
        }
        let n = space.dim();
        let mut table: Table = vec![vec![Vec::new(); n]; n];
        for (idx, c) in structure.entries() {
            table[idx[0]][idx[1]].push((idx[2], c.clone()));
        }
        Ok(LieAlgebra { space, structure, table, form })
    }

    /// Builds from `(i, j, k, c)` meaning `[e_i, e_j] ∋ c e_k`; the `(j, i)`
    /// entry is filled in by antisymmetry.
    pub fn from_brackets(space: Space, brackets: &[(usize, usize, usize, Scalar)], form: Option<Tensor>) -> Result<LieAlgebra> {
        let mut c = Tensor::zero_on(&space, 3);
        for (i, j, k, x) in brackets {
            c.add_entry(vec![*i, *j, *k], x.clone());
            c.add_entry(vec![*j, *i, *k], -x.clone());
        }
        LieAlgebra::new(space, c, form)
    }

    pub fn abelian(space: Space) -> LieAlgebra {
        LieAlgebra::new_unchecked(space.clone(), Tensor::zero_on(&space, 3), None).expect("shape is valid")
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn structure(&self) -> &Tensor {
        &self.structure
    }

    pub fn form(&self) -> Option<&Tensor> {
        self.form.as_ref()
    }

    pub fn with_form(&self, form: Option<Tensor>) -> Result<LieAlgebra> {
        LieAlgebra::new(self.space.clone(), self.structure.clone(), form)
    }

    /// Dense Gram matrix of the form.
    pub fn form_matrix(&self) -> Option<Matrix> {
        self.form.as_ref().map(|f| {
            let mut m = linalg::zeros(self.dim(), self.dim());
            for (idx, x) in f.entries() {
                m[idx[0]][idx[1]] = x.clone();
            }
            m
        })
    }

    pub fn label(&self, i: usize) -> String {
        self.space.label(i)
    }

    /// `[e_i, e_j]` as sparse `(k, c)` pairs.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i][j]
    }

    pub fn bracket_coords(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, c) in &self.table[i][j] {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    pub fn bracket(&self, x: &Tensor, y: &Tensor) -> Result<Tensor> {
        x.expect_on(&self.space, 1)?;
        y.expect_on(&self.space, 1)?;
        Ok(Tensor::vector(&self.space, &self.bracket_coords(&x.coords(), &y.coords())))
    }

    pub fn check_antisymmetry(&self) -> Vec<Violation> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                let s: Vec<Scalar> = (0..n)
                    .map(|k| self.structure.get(&[i, j, k]) + self.structure.get(&[j, i, k]))
                    .collect();
                if !linalg::is_zero_vec(&s) {
                    out.push(Violation(vec![self.label(i), self.label(j)]));
                }
            }
        }
        out
    }

    /// Basis triples `i < j < k` where the Jacobi identity fails.
    pub fn check_jacobi(&self) -> Vec<Violation> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let e = |a: usize| linalg::unit(n, a);
                    let t1 = self.bracket_coords(&e(i), &self.bracket_coords(&e(j), &e(k)));
                    let t2 = self.bracket_coords(&e(j), &self.bracket_coords(&e(k), &e(i)));
                    let t3 = self.bracket_coords(&e(k), &self.bracket_coords(&e(i), &e(j)));
                    let s: Vec<Scalar> = (0..n).map(|a| &t1[a] + &t2[a] + &t3[a]).collect();
                    if !linalg::is_zero_vec(&s) {
                        out.push(Violation(vec![self.label(i), self.label(j), self.label(k)]));
                    }
                }
            }
        }
        out
    }

    /// Basis triples where `⟨[x,y],z⟩ + ⟨y,[x,z]⟩ ≠ 0`, plus asymmetric pairs.
    pub fn check_form(&self) -> Vec<Violation> {
        let Some(f) = &self.form else {
            return Vec::new();
        };
        let mut out = Vec::new();
        if !f.is_symmetric() {
            out.push(Violation(vec!["form is not symmetric".into()]));
        }
        let m = self.form_matrix().expect("form present");
        let n = self.dim();
        let pair = |u: &[Scalar], v: &[Scalar]| linalg::dot(u, &linalg::mul_vec(&m, v));
        for x in 0..n {
            for y in 0..n {
                for z in y..n {
                    let e = |a: usize| linalg::unit(n, a);
                    let xy = self.bracket_coords(&e(x), &e(y));
                    let xz = self.bracket_coords(&e(x), &e(z));
                    let v = pair(&xy, &e(z)) + pair(&e(y), &xz);
                    if !v.is_zero() {
                        out.push(Violation(vec![self.label(x), self.label(y), self.label(z)]));
                    }
                }
            }
        }
        out
    }

    /// `ad_x` as a map `g → g`.
    pub fn ad(&self, x: &[Scalar]) -> LinearMap {
        let n = self.dim();
        let images: Vec<Vec<Scalar>> = (0..n).map(|j| self.bracket_coords(x, &linalg::unit(n, j))).collect();
        LinearMap::from_images(self.space.clone(), self.space.clone(), &images).expect("square map")
    }

    pub fn ad_basis(&self, i: usize) -> LinearMap {
        self.ad(&linalg::unit(self.dim(), i))
    }

    /// `ad*_x` on `g*`, with `⟨ad*_x ξ, y⟩ = ⟨ξ, [y, x]⟩`.
    pub fn coad(&self, x: &[Scalar]) -> LinearMap {
        self.ad(x).transpose().scale(&-Scalar::from_integer(1.into()))
    }

    /// Adjoint action of `x` on a tensor, acting as a derivation.
    pub fn ad_tensor(&self, x: &[Scalar], a: &Tensor) -> Result<Tensor> {
        a.derivation(&self.ad(x))
    }

    /// True iff `[U, U] ⊆ U`.
    pub fn is_subalgebra(&self, u: &Subspace) -> bool {
        u.basis().iter().all(|a| u.basis().iter().all(|b| u.contains(&self.bracket_coords(a, b))))
    }

    /// True iff `[g, U] ⊆ U`.
    pub fn is_ideal(&self, u: &Subspace) -> bool {
        let n = self.dim();
        (0..n).all(|i| u.basis().iter().all(|b| u.contains(&self.bracket_coords(&linalg::unit(n, i), b))))
    }

    /// The subalgebra spanned by `basis` (taken in the given order) as an
    /// algebra on its own space. The form, if any, is restricted.
    pub fn subalgebra(&self, name: &str, labels: Vec<String>, basis: &[Vec<Scalar>]) -> Result<LieAlgebra> {
        let space = Space::new(name, labels)?;
        if space.dim() != basis.len() {
            return Err(ForgeError::InvalidArgument("one label per basis vector".into()));
        }
        let left = linalg::left_inverse(basis, self.dim())
            .ok_or_else(|| ForgeError::InvalidArgument("subalgebra basis is dependent".into()))?;
        let k = basis.len();
        let mut c = Tensor::zero_on(&space, 3);
        for a in 0..k {
            for b in 0..k {
                let v = self.bracket_coords(&basis[a], &basis[b]);
                let coords = linalg::mul_vec(&left, &v);
                let back = linalg::combine(basis, &coords, self.dim());
                if back != v {
                    return Err(ForgeError::NotLieAlgebra(format!(
                        "span is not closed: [{}, {}]",
                        space.label(a),
                        space.label(b)
                    )));
                }
                for (m, x) in coords.into_iter().enumerate() {
                    c.add_entry(vec![a, b, m], x);
                }
            }
        }
        let form = self.form_matrix().map(|m| {
            let mut f = Tensor::zero_on(&space, 2);
            for a in 0..k {
                for b in 0..k {
                    f.add_entry(vec![a, b], linalg::dot(&basis[a], &linalg::mul_vec(&m, &basis[b])));
                }
            }
            f
        });
        LieAlgebra::new_unchecked(space, c, form)
    }

    /// Direct product `g₁ × … × g_n`. With `form_signs`, the form is
    /// `Σ_j sign_j ⟨a_j, a'_j⟩` (every factor must carry a form).
    pub fn direct_sum(name: &str, parts: &[&LieAlgebra], form_signs: Option<&[Scalar]>) -> Result<(LieAlgebra, DirectSum)> {
        let ds = DirectSum::new(name, parts.iter().map(|g| g.space.clone()).collect());
        let mut c = Tensor::zero_on(ds.space(), 3);
        for (j, g) in parts.iter().enumerate() {
            let o = ds.offset(j);
            for (idx, x) in g.structure.entries() {
                c.add_entry(idx.iter().map(|i| i + o).collect(), x.clone());
            }
        }
        let form = match form_signs {
            None => None,
            Some(signs) => {
                let mut f = Tensor::zero_on(ds.space(), 2);
                for (j, g) in parts.iter().enumerate() {
                    let o = ds.offset(j);
                    let gf = g
                        .form
                        .as_ref()
                        .ok_or_else(|| ForgeError::InvalidArgument("factor without a form".into()))?;
                    for (idx, x) in gf.entries() {
                        f.add_entry(vec![idx[0] + o, idx[1] + o], x * &signs[j]);
                    }
                }
                Some(f)
            }
        };
        Ok((LieAlgebra::new_unchecked(ds.space().clone(), c, form)?, ds))
    }

    /// The same algebra with the form dropped.
    pub fn without_form(&self) -> LieAlgebra {
        LieAlgebra { form: None, ..self.clone() }
    }

    /// Checks that `m: self → h` preserves brackets on basis pairs.
    pub fn hom_violations(&self, h: &LieAlgebra, m: &LinearMap) -> Vec<Violation> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = m.apply_coords(&self.bracket_coords(&linalg::unit(n, i), &linalg::unit(n, j)));
                let rhs = h.bracket_coords(&m.image_of(i), &m.image_of(j));
                if lhs != rhs {
                    out.push(Violation(vec![self.label(i), self.label(j)]));
                }
            }
        }
        out
    }
}

/// `s^#(c⁰) ⊆ c` for a symmetric `s`.
pub fn is_coisotropic(c: &Subspace, s: &Tensor) -> Result<bool> {
    if !s.is_symmetric() {
        return Err(ForgeError::InvalidArgument("s must be symmetric".into()));
    }
    let sh = sharp(s)?;
    c.parent().expect(sh.codomain())?;
    let ann = c.annihilator();
    Ok(ann.basis().iter().all(|xi| c.contains(&sh.apply_coords(xi))))
}
