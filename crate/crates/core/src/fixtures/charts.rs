//! Actions of `sl_n` on big cells of flag varieties.
//!
//! The big cell of `G/B₋` is `{u B₋ : u upper unitriangular}`. Differentiating
//! `t ↦ exp(tX) u B₋` at `t = 0` gives `u̇ = u · [u⁻¹ X u]_{𝔫₊}`, whose
//! strictly upper entries are the coefficients of the left action field
//! `λ(X)`. For `sl₂` with `u = [[1, z], [0, 1]]` this is the Möbius action
//! `λ(e) = ∂_z`, `λ(h) = 2z∂_z`, `λ(f) = −z²∂_z`.

use super::rootdatum::{standard_r, RootDatum};
use crate::error::{ForgeError, Result};
use crate::liealg::is_coisotropic;
use crate::polyfield::{poisson_from_r, product_action, ActionSide, Chart, LieAction, Poly, PolyField};
use crate::polyuble::r_power;
use crate::tensorspace::{linalg, Scalar, Subspace};

type PolyMatrix = Vec<Vec<Poly>>;

fn mat_mul(a: &PolyMatrix, b: &PolyMatrix, nvars: usize) -> PolyMatrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(Poly::zero(nvars), |acc, k| acc.add(&a[i][k].mul(&b[k][j]))))
                .collect()
        })
        .collect()
}

fn constant_matrix(m: &linalg::Matrix, nvars: usize) -> PolyMatrix {
    m.iter().map(|row| row.iter().map(|x| Poly::constant(nvars, x.clone())).collect()).collect()
}

/// Strictly upper positions `(a, b)` of an `n×n` matrix, row by row.
fn upper_positions(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

/// Chart variable names for one factor: `z{j}` for `sl₂`, `u{j}_{ab}` otherwise.
fn factor_chart(datum: &RootDatum, j: usize) -> Result<Chart> {
    let n = datum.matrix_size();
    if n == 2 {
        return Chart::new(vec![format!("z{j}")]);
    }
    Chart::new(upper_positions(n).iter().map(|(a, b)| format!("u{j}_{}{}", a + 1, b + 1)).collect())
}

/// The left action of `sl_n` on the big cell of `G/B₋`, on the chart of
/// factor `j`.
fn flag_factor(datum: &RootDatum, j: usize) -> Result<LieAction> {
    let n = datum.matrix_size();
    let chart = factor_chart(datum, j)?;
    let pos = upper_positions(n);
    let nv = pos.len();
    let identity = constant_matrix(&linalg::identity(n), nv);
    let mut nil: PolyMatrix = vec![vec![Poly::zero(nv); n]; n];
    for (v, &(a, b)) in pos.iter().enumerate() {
        nil[a][b] = Poly::var(nv, v);
    }
    let u: PolyMatrix = identity.iter().zip(&nil).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x.add(y)).collect()).collect();
    // u⁻¹ = Σ_k (−N)^k for the nilpotent N = u − 1.
    let neg: PolyMatrix = nil.iter().map(|r| r.iter().map(Poly::neg).collect()).collect();
    let mut u_inv = identity.clone();
    let mut power = identity;
    for _ in 1..n {
        power = mat_mul(&power, &neg, nv);
        u_inv = u_inv.iter().zip(&power).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x.add(y)).collect()).collect();
    }
    let algebra = datum.algebra()?;
    let mut fields = Vec::with_capacity(datum.dim());
    for i in 0..datum.dim() {
        let x = constant_matrix(datum.basis_matrix(i), nv);
        let conj = mat_mul(&mat_mul(&u_inv, &x, nv), &u, nv);
        let mut upper: PolyMatrix = vec![vec![Poly::zero(nv); n]; n];
        for &(a, b) in &pos {
            upper[a][b] = conj[a][b].clone();
        }
        let velocity = mat_mul(&u, &upper, nv);
        fields.push(PolyField::vector(&chart, pos.iter().map(|&(a, b)| velocity[a][b].clone()).collect())?);
    }
    LieAction::new(&algebra, &chart, fields, ActionSide::Left)
}

fn require_sl2(datum: &RootDatum) -> Result<()> {
    if datum.matrix_size() != 2 {
        return Err(ForgeError::InvalidArgument(format!("{} has no Möbius chart; use the sl3-charts feature", datum.name())));
    }
    Ok(())
}

/// The Möbius action of `sl₂` on the `j`-th copy of the affine chart of `P¹`.
pub fn mobius_factor(datum: &RootDatum, j: usize) -> Result<LieAction> {
    require_sl2(datum)?;
    flag_factor(datum, j)
}

/// The product action of `sl₂ⁿ` on `(P¹-chart)ⁿ` with variables `z1, …, zn`.
pub fn mobius_action(datum: &RootDatum, n: usize) -> Result<LieAction> {
    require_sl2(datum)?;
    product_flag_action(datum, n)
}

/// The product action of `sl_kⁿ` on `n` copies of the full-flag big cell.
#[cfg(feature = "sl3-charts")]
pub fn flag_action(datum: &RootDatum, n: usize) -> Result<LieAction> {
    product_flag_action(datum, n)
}

fn product_flag_action(datum: &RootDatum, n: usize) -> Result<LieAction> {
    if n == 0 {
        return Err(ForgeError::InvalidArgument("need at least one factor".into()));
    }
    let factors = (1..=n).map(|j| flag_factor(datum, j)).collect::<Result<Vec<_>>>()?;
    let refs: Vec<&LieAction> = factors.iter().collect();
    Ok(product_action(&refs)?.0)
}

/// `−λ(r_st⁽ⁿ⁾)` on `n` copies of the flag chart, checked Poisson with `λ`
/// a Poisson action of `(gⁿ, r⁽ⁿ⁾)`.
pub fn flag_bivector(datum: &RootDatum, n: usize) -> Result<PolyField> {
    if datum.matrix_size() > 2 && !cfg!(feature = "sl3-charts") {
        require_sl2(datum)?;
    }
    let act = product_flag_action(datum, n)?;
    let r = standard_r(datum)?;
    let rn = r_power(&r, n)?.rmatrix()?;
    poisson_from_r(&act, &rn)
}

/// `{x : λ(x)(p) = 0}`.
pub fn stabilizer_at(act: &LieAction, point: &[Scalar]) -> Subspace {
    let rows: Vec<Vec<Scalar>> = act
        .fields()
        .iter()
        .map(|f| (0..act.chart().dim()).map(|v| f.component(&[v]).eval(point)).collect())
        .collect();
    // Columns of the evaluation matrix are indexed by chart variables; the
    // stabilizer is the kernel of its transpose.
    let cols = act.chart().dim();
    let t = linalg::transpose(&rows, cols);
    let kernel = linalg::kernel(&t, act.algebra().dim());
    Subspace::span(act.algebra().space(), &kernel)
}

/// Whether every stabilizer at the sample points is coisotropic for the
/// symmetric part of the standard r-matrix.
pub fn stabilizers_coisotropic(datum: &RootDatum, act: &LieAction, points: &[Vec<Scalar>]) -> Result<bool> {
    let r = standard_r(datum)?;
    for p in points {
        if !is_coisotropic(&stabilizer_at(act, p), r.sym())? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensorspace::{int, q};

    #[test]
    fn mobius_fields() {
        let datum = RootDatum::type_a(1).unwrap();
        let act = mobius_factor(&datum, 1).unwrap();
        let z = Poly::var(1, 0);
        let c = act.chart().clone();
        assert_eq!(act.field(0), &PolyField::vector(&c, vec![z.scale(&int(2))]).unwrap());
        assert_eq!(act.field(1), &PolyField::partial(&c, 0));
        assert_eq!(act.field(2), &PolyField::vector(&c, vec![z.mul(&z).neg()]).unwrap());
    }

    #[test]
    fn two_factor_bivector() {
        let datum = RootDatum::type_a(1).unwrap();
        let pi = flag_bivector(&datum, 2).unwrap();
        let z1 = Poly::var(2, 0);
        let z2 = Poly::var(2, 1);
        assert_eq!(pi.component(&[0, 1]), z1.mul(&z2).sub(&z2.mul(&z2)));
        assert_eq!(pi.to_string(), "(z1*z2 - z2^2) d/dz1^d/dz2");
    }

    #[test]
    fn stabilizers_are_coisotropic() {
        let datum = RootDatum::type_a(1).unwrap();
        let act = mobius_factor(&datum, 1).unwrap();
        let points = vec![vec![int(0)], vec![int(1)], vec![q(-3, 2)]];
        assert!(stabilizers_coisotropic(&datum, &act, &points).unwrap());
        assert_eq!(stabilizer_at(&act, &[int(0)]).dim(), 2);
    }
}
