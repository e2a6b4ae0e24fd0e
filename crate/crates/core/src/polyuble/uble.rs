use crate::bialg::{is_mixed_twist, twist_cobracket, Cobracket, ProductBialgebra, TwistElement};
use crate::double::{splitting_cobracket, splitting_r, verify_manin, DoubleAlgebra};
use crate::error::{ForgeError, Result};
use crate::liealg::{LieAlgebra, Violation};
use crate::tensorspace::{linalg, one, wedge, DirectSum, LinearMap, Scalar, Subspace, Tensor};

use super::rpower::power_name;

/// A block of `g₍ₙ₎` or `g₍ₙ₎*` inside `dⁿ` (0-based copy indices).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Piece {
    /// `{(a, a) : a ∈ d}` in copies `j, j+1`.
    Diag(usize),
    /// `g` in copy `j`.
    G(usize),
    /// `g*` in copy `j`.
    Dual(usize),
}

impl Piece {
    pub fn dim(self, m: usize) -> usize {
        match self {
            Piece::Diag(_) => 2 * m,
            _ => m,
        }
    }

    /// The direct-product factor this block is identified with.
    pub fn factor(self) -> Factor {
        match self {
            Piece::Diag(_) => Factor::D,
            Piece::G(_) => Factor::G,
            Piece::Dual(_) => Factor::GStar,
        }
    }

    fn vectors(self, m: usize, n: usize) -> Vec<Vec<Scalar>> {
        let total = 2 * m * n;
        match self {
            Piece::Diag(j) => (0..2 * m)
                .map(|a| {
                    let mut v = linalg::unit(total, 2 * m * j + a);
                    v[2 * m * (j + 1) + a] = one();
                    v
                })
                .collect(),
            Piece::G(j) => (0..m).map(|i| linalg::unit(total, 2 * m * j + i)).collect(),
            Piece::Dual(j) => (0..m).map(|i| linalg::unit(total, 2 * m * j + m + i)).collect(),
        }
    }

    fn labels(self, dbl: &DoubleAlgebra) -> Vec<String> {
        let d = dbl.total();
        let m = dbl.m();
        match self {
            Piece::Diag(j) => (0..2 * m).map(|a| format!("{}_({},{})", d.label(a), j + 1, j + 2)).collect(),
            Piece::G(j) => (0..m).map(|i| format!("{}_{}", d.label(i), j + 1)).collect(),
            Piece::Dual(j) => (0..m).map(|i| format!("{}_{}", d.label(m + i), j + 1)).collect(),
        }
    }
}

/// Factors of the direct products `dᵏ ⊕ g`, `g* ⊕ dᵏ ⊕ g`, … .
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    D,
    G,
    GStar,
}

impl Factor {
    fn dim(self, m: usize) -> usize {
        match self {
            Factor::D => 2 * m,
            _ => m,
        }
    }

    fn xi(self, m: usize, i: usize) -> Option<usize> {
        match self {
            Factor::D => Some(m + i),
            Factor::GStar => Some(i),
            Factor::G => None,
        }
    }

    fn x(self, i: usize) -> Option<usize> {
        match self {
            Factor::D | Factor::G => Some(i),
            Factor::GStar => None,
        }
    }
}

/// Blocks of `g₍ₙ₎`: diagonals `(1,2), (3,4), …`, closed by `g` in the last
/// copy when `n` is odd.
pub fn g_pieces(n: usize) -> Vec<Piece> {
    let mut out = Vec::new();
    let mut j = 0;
    while j + 1 < n {
        out.push(Piece::Diag(j));
        j += 2;
    }
    if j + 1 == n {
        out.push(Piece::G(j));
    }
    out
}

/// Blocks of `g₍ₙ₎*`: `g*` in the first copy, diagonals `(2,3), (4,5), …`,
/// closed by `g` in the last copy when `n` is even.
pub fn dual_pieces(n: usize) -> Vec<Piece> {
    let mut out = vec![Piece::Dual(0)];
    let mut j = 1;
    while j + 1 < n {
        out.push(Piece::Diag(j));
        j += 2;
    }
    if j + 1 == n {
        out.push(Piece::G(j));
    }
    out
}

/// `dⁿ` with `⟨(a_j), (a'_j)⟩ = Σ_j (−1)^{j+1} ⟨a_j, a'_j⟩_d`.
pub fn d_power(dbl: &DoubleAlgebra, n: usize) -> Result<(LieAlgebra, DirectSum)> {
    if n == 0 {
        return Err(ForgeError::InvalidArgument("n must be at least 1".into()));
    }
    let d = dbl.total();
    let parts = vec![d; n];
    let signs: Vec<Scalar> = (0..n).map(|j| if j % 2 == 0 { one() } else { -one() }).collect();
    LieAlgebra::direct_sum(&power_name(d.space(), n), &parts, Some(&signs))
}

/// The Lagrangian splitting `dⁿ = g₍ₙ₎ + g₍ₙ₎*`.
#[derive(Clone, Debug)]
pub struct PolyubleSplitting {
    n: usize,
    dbl: DoubleAlgebra,
    ambient: LieAlgebra,
    sum: DirectSum,
    g_pieces: Vec<Piece>,
    dual_pieces: Vec<Piece>,
    g_basis: Vec<Vec<Scalar>>,
    dual_basis: Vec<Vec<Scalar>>,
    g_n: Subspace,
    g_n_star: Subspace,
}

pub fn build_polyuble(dbl: &DoubleAlgebra, n: usize) -> Result<PolyubleSplitting> {
    let (ambient, sum) = d_power(dbl, n)?;
    let m = dbl.m();
    let gp = g_pieces(n);
    let dp = dual_pieces(n);
    let g_basis: Vec<Vec<Scalar>> = gp.iter().flat_map(|p| p.vectors(m, n)).collect();
    let dual_basis: Vec<Vec<Scalar>> = dp.iter().flat_map(|p| p.vectors(m, n)).collect();
    let g_n = Subspace::span(ambient.space(), &g_basis);
    let g_n_star = Subspace::span(ambient.space(), &dual_basis);
    if !verify_manin(&ambient, &g_n, &g_n_star) {
        return Err(ForgeError::ConventionViolation(format!("polyuble splitting of size {n} is not Lagrangian")));
    }
    Ok(PolyubleSplitting { n, dbl: dbl.clone(), ambient, sum, g_pieces: gp, dual_pieces: dp, g_basis, dual_basis, g_n, g_n_star })
}

impl PolyubleSplitting {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dbl(&self) -> &DoubleAlgebra {
        &self.dbl
    }

    /// `dⁿ` with the alternating form.
    pub fn ambient(&self) -> &LieAlgebra {
        &self.ambient
    }

    pub fn sum(&self) -> &DirectSum {
        &self.sum
    }

    pub fn g_n(&self) -> &Subspace {
        &self.g_n
    }

    pub fn g_n_star(&self) -> &Subspace {
        &self.g_n_star
    }

    pub fn pieces(&self, side: Side) -> &[Piece] {
        match side {
            Side::G => &self.g_pieces,
            Side::Dual => &self.dual_pieces,
        }
    }

    /// Basis of one side, ordered block by block.
    pub fn basis(&self, side: Side) -> &[Vec<Scalar>] {
        match side {
            Side::G => &self.g_basis,
            Side::Dual => &self.dual_basis,
        }
    }

    fn other(&self, side: Side) -> &Subspace {
        match side {
            Side::G => &self.g_n_star,
            Side::Dual => &self.g_n,
        }
    }

    /// `g₍ₙ₎` or `g₍ₙ₎*` as a Lie algebra on its own space.
    pub fn algebra(&self, side: Side) -> Result<LieAlgebra> {
        let labels: Vec<String> = self.pieces(side).iter().flat_map(|p| p.labels(&self.dbl)).collect();
        let name = match side {
            Side::G => format!("g({})", self.n),
            Side::Dual => format!("g({})*", self.n),
        };
        self.ambient.without_form().subalgebra(&name, labels, self.basis(side))
    }

    /// Cobracket on one side dual to the bracket of the other.
    pub fn cobracket(&self, side: Side) -> Result<Cobracket> {
        let alg = self.algebra(side)?;
        splitting_cobracket(&self.ambient, &alg, self.basis(side), self.other(side))
    }

    /// `r_{dⁿ} = Σ a_i ⊗ β_i` for a basis of `g₍ₙ₎` and the dual basis of `g₍ₙ₎*`.
    pub fn r_ambient(&self) -> Result<Tensor> {
        splitting_r(&self.ambient, &self.g_basis, &self.g_n_star)
    }

    /// Inclusion of one side into `dⁿ`.
    pub fn inclusion(&self, side: Side) -> Result<LinearMap> {
        let alg = self.algebra(side)?;
        LinearMap::from_images(alg.space().clone(), self.ambient.space().clone(), self.basis(side))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    G,
    Dual,
}

/// `Σ_{j<k} Σ_i (ξ_i)_j ∧ (x_i)_k` on a direct sum of factors.
pub fn t_on_factors(sum: &DirectSum, factors: &[Factor], m: usize) -> Result<Tensor> {
    let space = sum.space();
    let mut t = Tensor::zero_on(space, 2);
    for j in 0..factors.len() {
        for k in j + 1..factors.len() {
            for i in 0..m {
                if let (Some(a), Some(b)) = (factors[j].xi(m, i), factors[k].x(i)) {
                    let u = Tensor::basis(space, sum.offset(j) + a);
                    let v = Tensor::basis(space, sum.offset(k) + b);
                    t += &wedge(&[u, v])?;
                }
            }
        }
    }
    Ok(t)
}

/// `t_{n+1} ∈ ∧²(d^{n+1})`.
pub fn t_element(dbl: &DoubleAlgebra, n_plus_1: usize) -> Result<Tensor> {
    let (_, sum) = d_power(dbl, n_plus_1)?;
    t_on_factors(&sum, &vec![Factor::D; n_plus_1], dbl.m())
}

/// A polyuble side identified with a direct product of copies of `d`, `g`
/// and `g*`, together with the signed twisting element `±t`.
#[derive(Clone, Debug)]
pub struct MixedModel {
    pub side: Side,
    pub size: usize,
    pub factors: Vec<Factor>,
    pub product: ProductBialgebra,
    pub t: Tensor,
}

/// The direct-product model of `g₍size₎` (`Side::G`) or `g₍size₎*`
/// (`Side::Dual`): factors `d` carry `δ_d`, `g` carries `δ_g`, `g*` carries
/// `δ_{g*}`; on the dual side `d` and `g` carry the negatives and the
/// twisting element is `−t`.
pub fn mixed_model(dbl: &DoubleAlgebra, side: Side, size: usize) -> Result<MixedModel> {
    if size == 0 {
        return Err(ForgeError::InvalidArgument("size must be at least 1".into()));
    }
    let pieces = match side {
        Side::G => g_pieces(size),
        Side::Dual => dual_pieces(size),
    };
    let factors: Vec<Factor> = pieces.iter().map(|p| p.factor()).collect();
    let neg_d = dbl.cobracket().negate();
    let neg_g = dbl.bialgebra().negate();
    let parts: Vec<&Cobracket> = factors
        .iter()
        .map(|f| match (side, f) {
            (Side::G, Factor::D) => dbl.cobracket(),
            (Side::G, Factor::G) => dbl.bialgebra(),
            (Side::Dual, Factor::D) => &neg_d,
            (Side::Dual, Factor::G) => &neg_g,
            (_, Factor::GStar) => dbl.dual(),
        })
        .collect();
    let name = match side {
        Side::G => format!("g'({size})"),
        Side::Dual => format!("g'({size})*"),
    };
    let product = ProductBialgebra::new(&name, &parts)?;
    let mut t = t_on_factors(&product.sum, &factors, dbl.m())?;
    if side == Side::Dual {
        t = -&t;
    }
    Ok(MixedModel { side, size, factors, product, t })
}

impl MixedModel {
    pub fn is_mixed_twist(&self) -> Result<bool> {
        is_mixed_twist(&self.product, &self.t)
    }

    /// The direct-product cobracket twisted by `±t`.
    pub fn twisted(&self) -> Result<Cobracket> {
        twist_cobracket(&TwistElement::new(&self.product.cobracket, self.t.clone())?)
    }

    /// The block identification with the polyuble side, as an explicit map.
    pub fn identification(&self, pu: &PolyubleSplitting) -> Result<LinearMap> {
        let src = pu.algebra(self.side)?;
        let dst = self.product.algebra();
        if src.dim() != dst.dim() {
            return Err(ForgeError::SpaceMismatch { expected: dst.space().name(), found: src.space().name() });
        }
        LinearMap::new(src.space().clone(), dst.space().clone(), linalg::identity(dst.dim()))
    }

    /// Violations of "the polyuble side is the twisted direct product",
    /// transported along [`MixedModel::identification`].
    pub fn compare(&self, pu: &PolyubleSplitting) -> Result<Vec<Violation>> {
        let map = self.identification(pu)?;
        let src = pu.cobracket(self.side)?;
        let twisted = self.twisted()?;
        let mut out = src.algebra().hom_violations(twisted.algebra(), &map);
        out.extend(src.hom_violations(&twisted, &map)?);
        Ok(out)
    }
}

/// Embedding of `g₍₂ₙ₊₁₎`, `g₍₂ₙ₎*` or `g₍₂ₙ₊₁₎*` into `g₍₂ₙ₊₂₎ ≅ d^{n+1}`
/// duplicating the first `g*` and last `g` entries, in direct-product
/// coordinates.
pub fn embedding_into_even(dbl: &DoubleAlgebra, model: &MixedModel, even: &MixedModel) -> Result<LinearMap> {
    let m = dbl.m();
    if even.side != Side::G || even.factors.iter().any(|f| *f != Factor::D) || even.factors.len() != model.factors.len() {
        return Err(ForgeError::InvalidArgument("target must be the even polyuble with matching block count".into()));
    }
    let src = &model.product.sum;
    let dst = &even.product.sum;
    let mut images = Vec::with_capacity(src.space().dim());
    for (j, f) in model.factors.iter().enumerate() {
        for i in 0..f.dim(m) {
            let local = match f {
                Factor::D | Factor::G => i,
                Factor::GStar => m + i,
            };
            images.push(linalg::unit(dst.space().dim(), dst.offset(j) + local));
        }
    }
    LinearMap::from_images(src.space().clone(), dst.space().clone(), &images)
}

/// Checks one of the three embeddings into `g₍₂ₙ₊₂₎`: a Lie bialgebra map
/// from `(V, ±δ_V)` carrying the model's `±t` onto `±t_{n+1}`.
pub fn embedding_violations(dbl: &DoubleAlgebra, model: &MixedModel) -> Result<Vec<Violation>> {
    let blocks = model.factors.len();
    let even_size = 2 * blocks;
    let even = mixed_model(dbl, Side::G, even_size)?;
    let even_pu = build_polyuble(dbl, even_size)?;
    let pu = build_polyuble(dbl, model.size)?;
    let emb = embedding_into_even(dbl, model, &even)?;
    let even_cb = relabel(&even_pu.cobracket(Side::G)?, &even.identification(&even_pu)?, even.product.algebra())?;
    let src_cb = relabel(&pu.cobracket(model.side)?, &model.identification(&pu)?, model.product.algebra())?;
    let src_cb = if model.side == Side::Dual { src_cb.negate() } else { src_cb };
    let mut out = src_cb.algebra().hom_violations(even_cb.algebra(), &emb);
    out.extend(src_cb.hom_violations(&even_cb, &emb)?);
    let sign = if model.side == Side::Dual { -one() } else { one() };
    if model.t.pushforward(&emb)? != even.t.scale(&sign) {
        out.push(Violation(vec!["t".into()]));
    }
    Ok(out)
}

/// Moves a cobracket along a basis-to-basis identification.
fn relabel(cb: &Cobracket, iso: &LinearMap, target: &LieAlgebra) -> Result<Cobracket> {
    if iso.matrix() != &linalg::identity(target.dim()) {
        return Err(ForgeError::InvalidArgument("identification is not basis-to-basis".into()));
    }
    let values = cb.values().iter().map(|v| v.pushforward(iso)).collect::<Result<Vec<_>>>()?;
    Cobracket::new_unchecked(target.clone(), values)
}
