mod common;

use common::{mobius_spaces, rational};
use forge::bialg::{check_twist, cobracket_from_r, TwistElement};
use forge::fixtures::{self, mobius_factor, stabilizer_at, RootDatum};
use forge::liealg::is_coisotropic;
use forge::polyfield::{
    apply_action, fusion, fusion_pair_via_f_pm, fusion_square, fusion_tau, is_poisson, mixed_product_n, poisson_action_violations,
    quasi_correspond, quasi_inverse, quasi_violations, symmetric_image_vanishes, twist_space, Chart, Poly, PolyField,
};
use forge::polyuble::{diag_n, diagonal_lambda_defect, r_power};
use forge::tensorspace::{int, q, Scalar, Tensor};
use proptest::prelude::*;

/// The Möbius fields of h, e, f on the variable `z`: `2z`, `1`, `−z²`.
fn mobius_coefficient(basis: usize, z: &Poly) -> Poly {
    let nvars = z.nvars();
    match basis {
        0 => z.scale(&int(2)),
        1 => Poly::one(nvars),
        _ => z.mul(z).neg(),
    }
}

/// `Σ r_ab X_b(z_j) X_a(z_k)`, the `∂_j ∧ ∂_k` coefficient of the mixed
/// product of Möbius charts with zero factor brackets.
fn pair_coefficient(r: &Tensor, n: usize, j: usize, k: usize) -> Poly {
    let (zj, zk) = (Poly::var(n, j), Poly::var(n, k));
    let mut out = Poly::zero(n);
    for (idx, c) in r.entries() {
        out.add_assign(&mobius_coefficient(idx[1], &zj).mul(&mobius_coefficient(idx[0], &zk)).scale(c));
    }
    out
}

#[test]
fn two_factor_bivector_is_z1_z2_minus_z2_squared() {
    let (r, _) = fixtures::sl2().unwrap();
    let mp = mixed_product_n(&mobius_spaces(&r, 2), &r).unwrap();
    let (z1, z2) = (Poly::var(2, 0), Poly::var(2, 1));
    let expected = z1.mul(&z2).sub(&z2.mul(&z2));
    assert_eq!(pair_coefficient(r.tensor(), 2, 0, 1), expected);
    assert_eq!(mp.pi.component(&[0, 1]), expected);
    assert_eq!(mp.pi.components().count(), 1);
}

#[test]
fn mixed_products_are_minus_lambda_of_r_power() {
    let (r, cb) = fixtures::sl2().unwrap();
    for n in 2..=3 {
        let mp = mixed_product_n(&mobius_spaces(&r, n), &r).unwrap();
        let rn = r_power(&r, n).unwrap();
        assert_eq!(mp.pi, apply_action(&mp.action, rn.tensor()).unwrap().neg(), "n={n}");
        assert!(is_poisson(&mp.pi).unwrap(), "n={n}");
        let cbn = cobracket_from_r(rn.algebra(), rn.tensor()).unwrap();
        assert!(poisson_action_violations(&mp.action, &mp.pi, &cbn).unwrap().is_empty(), "n={n}");
        let diag = mp.action.compose(r.algebra(), &diag_n(r.algebra().space(), n).unwrap()).unwrap();
        assert!(poisson_action_violations(&diag, &mp.pi, &cb).unwrap().is_empty(), "n={n}");
        for j in 0..n {
            for k in j + 1..n {
                assert_eq!(mp.pi.component(&[j, k]), pair_coefficient(r.tensor(), n, j, k), "n={n} ({j}, {k})");
            }
        }
    }
}

#[test]
fn pair_projections_are_two_factor_products() {
    let (r, _) = fixtures::sl2().unwrap();
    let spaces = mobius_spaces(&r, 3);
    let mp = mixed_product_n(&spaces, &r).unwrap();
    for (j, k) in [(0, 1), (0, 2), (1, 2)] {
        let chart = Chart::product(&[spaces[j].chart(), spaces[k].chart()]).unwrap();
        assert_eq!(mp.pi.project(&chart).unwrap(), fusion_pair_via_f_pm(&spaces[j], &spaces[k], &r).unwrap());
    }
}

#[test]
fn fusion_is_associative_and_quasi_poisson() {
    let (r, _) = fixtures::sl2().unwrap();
    let spaces = mobius_spaces(&r, 3);
    let all = fusion(&spaces, &r).unwrap();
    let left = fusion(&[fusion(&spaces[0..2], &r).unwrap(), spaces[2].clone()], &r).unwrap();
    let right = fusion(&[spaces[0].clone(), fusion(&spaces[1..3], &r).unwrap()], &r).unwrap();
    assert_eq!(left, all);
    assert_eq!(right, all);
    let qf = quasi_correspond(&all, &r).unwrap();
    assert!(quasi_violations(&qf, &all.action, &r).unwrap().is_empty());
    assert_eq!(quasi_inverse(&qf, &all.action, &r).unwrap().pi, all.pi);
    assert!(fusion_square(&spaces[0..2], &r).unwrap().commutes());
}

#[test]
fn diagonal_of_lambda() {
    let (r, _) = fixtures::sl2().unwrap();
    for n in 2..=4 {
        assert!(diagonal_lambda_defect(&r, n).unwrap().is_zero(), "n={n}");
    }
}

#[test]
fn mobius_action_is_admissible() {
    let (r, _) = fixtures::sl2().unwrap();
    let act = mobius_factor(&RootDatum::type_a(1).unwrap(), 1).unwrap();
    assert!(symmetric_image_vanishes(&act, r.sym()).unwrap());
    assert!(act.action_violations().unwrap().is_empty());
}

fn perm3() -> impl Strategy<Value = Vec<usize>> {
    Just(vec![0usize, 1, 2]).prop_shuffle()
}

/// Twisting candidates on sl₂, entries in `{−2, …, 2}/{1, 2}`.
fn sl2_skew() -> impl Strategy<Value = Tensor> {
    let g = fixtures::sl2().unwrap().0.algebra().clone();
    let entry = (-2i64..=2, 1i64..=2).prop_map(|(n, d)| q(n, d));
    prop::collection::vec(entry, 3).prop_map(move |c| {
        let mut t = Tensor::zero_on(g.space(), 2);
        for ((i, j), x) in [(0, 1), (0, 2), (1, 2)].into_iter().zip(c) {
            t.add_entry(vec![i, j], x.clone());
            t.add_entry(vec![j, i], -x);
        }
        t
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn fusion_in_any_order_is_poisson(tau in perm3()) {
        let (r, cb) = fixtures::sl2().unwrap();
        let ft = fusion_tau(&mobius_spaces(&r, 3), &r, &tau).unwrap();
        prop_assert!(is_poisson(&ft.pi).unwrap());
        prop_assert!(poisson_action_violations(&ft.action, &ft.pi, &cb).unwrap().is_empty());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn stabilizers_are_coisotropic(z in rational()) {
        let (r, _) = fixtures::sl2().unwrap();
        let act = mobius_factor(&RootDatum::type_a(1).unwrap(), 1).unwrap();
        let point: Vec<Scalar> = vec![z];
        prop_assert!(is_coisotropic(&stabilizer_at(&act, &point), r.sym()).unwrap());
    }

    /// Twisting the two-factor mixed product by `t` gives a Poisson space of `(g, δ_{r−t})`.
    #[test]
    fn twisted_spaces_stay_poisson(t in sl2_skew()) {
        let (r, cb) = fixtures::sl2().unwrap();
        prop_assume!(check_twist(&cb, &t).unwrap());
        let base = mixed_product_n(&mobius_spaces(&r, 2), &r).unwrap();
        let diag = base.action.compose(r.algebra(), &diag_n(r.algebra().space(), 2).unwrap()).unwrap();
        let base = forge::polyfield::PoissonSpace::new(base.pi, diag.clone()).unwrap();
        let te = TwistElement::new(&cb, t.clone()).unwrap();
        let pi = twist_space(&base, &te).unwrap();
        prop_assert!(is_poisson(&pi).unwrap());
        let shifted = cobracket_from_r(r.algebra(), &(r.tensor() - &t)).unwrap();
        prop_assert!(poisson_action_violations(&diag, &pi, &shifted).unwrap().is_empty());
    }
}

#[test]
fn polynomial_fields_render() {
    let chart = Chart::numbered("z", 2);
    let (z1, z2) = (Poly::var(2, 0), Poly::var(2, 1));
    let pi = PolyField::monomial(&chart, &[0, 1], z1.mul(&z2).sub(&z2.mul(&z2)));
    assert_eq!(pi.to_string(), "(z1*z2 - z2^2) d/dz1^d/dz2");
}
