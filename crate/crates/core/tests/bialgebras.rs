mod common;

use common::{coords, skew2, tensor2};
use forge::bialg::{check_twist, cobracket_from_r, cyb, twist_cobracket, twist_cobracket_alt, RMatrix, TwistElement};
use forge::cli::export::fixture_model;
use forge::fixtures;
use forge::liealg::{schouten, LieAlgebra};
use forge::tensorspace::{half, int, q, Scalar, Tensor};
use proptest::prelude::*;

fn sl2() -> (RMatrix, forge::bialg::Cobracket) {
    fixtures::sl2().unwrap()
}

/// `[r12, r13] + [r12, r23] + [r13, r23]` straight from the structure constants.
fn cyb_oracle(g: &LieAlgebra, r: &Tensor) -> Tensor {
    let mut out = Tensor::zero_on(g.space(), 3);
    let entries: Vec<(Vec<usize>, Scalar)> = r.entries().map(|(i, x)| (i.clone(), x.clone())).collect();
    for (ab, x) in &entries {
        for (cd, y) in &entries {
            let (a, b, c, d) = (ab[0], ab[1], cd[0], cd[1]);
            let xy = x * y;
            for (k, z) in g.bracket_basis(a, c) {
                out.add_entry(vec![*k, b, d], &xy * z);
            }
            for (k, z) in g.bracket_basis(b, c) {
                out.add_entry(vec![a, *k, d], &xy * z);
            }
            for (k, z) in g.bracket_basis(b, d) {
                out.add_entry(vec![a, c, *k], &xy * z);
            }
        }
    }
    out
}

fn coeffs() -> impl Strategy<Value = Scalar> {
    (prop_oneof![Just(-2i64), Just(-1), Just(0), Just(1), Just(2)], 1i64..=2).prop_map(|(n, d)| q(n, d))
}

/// Skew `t` on sl₂ with entries in `{−2, …, 2}/{1, 2}`.
fn sl2_skew() -> impl Strategy<Value = Tensor> {
    let g = sl2().0.algebra().clone();
    prop::collection::vec(coeffs(), 3).prop_map(move |c| {
        let mut t = Tensor::zero_on(g.space(), 2);
        for ((i, j), x) in [(0, 1), (0, 2), (1, 2)].into_iter().zip(c) {
            t.add_entry(vec![i, j], x.clone());
            t.add_entry(vec![j, i], -x);
        }
        t
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn brackets_are_antisymmetric_and_satisfy_jacobi(x in coords(8), y in coords(8), z in coords(8)) {
        let g = fixtures::sl3().unwrap().0.algebra().clone();
        let b = |u: &[Scalar], v: &[Scalar]| g.bracket_coords(u, v);
        let neg: Vec<Scalar> = b(&y, &x).iter().map(|c| -c).collect();
        prop_assert_eq!(b(&x, &y), neg);
        let sum: Vec<Scalar> = (0..8)
            .map(|k| &(&b(&x, &b(&y, &z))[k] + &b(&y, &b(&z, &x))[k]) + &b(&z, &b(&x, &y))[k])
            .collect();
        prop_assert!(sum.iter().all(|c| c == &int(0)));
    }

    #[test]
    fn killing_type_form_is_invariant(x in coords(3), y in coords(3), z in coords(3)) {
        let g = sl2().0.algebra().clone();
        let form = g.form().unwrap().clone();
        let xy = g.bracket_coords(&x, &y);
        let yz = g.bracket_coords(&y, &z);
        prop_assert_eq!(form.evaluate(&[xy, z]), form.evaluate(&[x, yz]));
    }

    #[test]
    fn cyb_matches_the_structure_constant_oracle(r in tensor2(&sl2().0.algebra().space().clone())) {
        let g = sl2().0.algebra().clone();
        prop_assert_eq!(cyb(&g, &r).unwrap(), cyb_oracle(&g, &r));
    }

    #[test]
    fn cyb_of_a_skew_tensor_is_half_its_schouten_square(t in skew2(&fixtures::ax_plus_b().space().clone())) {
        let g = fixtures::ax_plus_b();
        prop_assert_eq!(cyb(&g, &t).unwrap(), schouten(&g, &t, &t).unwrap().scale(&half()));
    }

    #[test]
    fn delta_r_is_ad_applied_to_r(x in coords(3)) {
        let (r, cb) = sl2();
        let g = r.algebra();
        let lhs = cb.delta_coords(&x);
        let rhs = r.tensor().derivation(&g.ad(&x)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn cobracket_is_a_cocycle_on_random_vectors(x in coords(8), y in coords(8)) {
        let (r, cb) = fixtures::sl3().unwrap();
        let g = r.algebra();
        let lhs = cb.delta_coords(&g.bracket_coords(&x, &y));
        let rhs = &cb.delta_coords(&y).derivation(&g.ad(&x)).unwrap() - &cb.delta_coords(&x).derivation(&g.ad(&y)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(160))]

    /// Twisting elements of `(g, δ_r)` are exactly the `t` with `r − t` quasitriangular.
    #[test]
    fn twist_iff_shifted_r_solves_cybe(t in sl2_skew()) {
        let (r, cb) = sl2();
        let g = r.algebra();
        let shifted = r.tensor() - &t;
        let twisting = check_twist(&cb, &t).unwrap();
        prop_assert_eq!(twisting, cyb_oracle(g, &shifted).is_zero());
        if twisting {
            let tw = twist_cobracket(&TwistElement::new(&cb, t.clone()).unwrap()).unwrap();
            prop_assert_eq!(&tw, &twist_cobracket_alt(&cb, &t).unwrap());
            prop_assert_eq!(&tw, &cobracket_from_r(g, &shifted).unwrap());
        } else {
            prop_assert!(TwistElement::new(&cb, t).is_err());
        }
    }
}

#[test]
fn standard_r_matrices_solve_cybe() {
    for (r, _) in [fixtures::sl2().unwrap(), fixtures::sl3().unwrap(), fixtures::ax_plus_b_bialgebra().unwrap()] {
        assert!(cyb_oracle(r.algebra(), r.tensor()).is_zero());
        assert!(r.is_quasitriangular());
    }
}

#[test]
fn sl2_standard_r_in_the_h_e_f_basis() {
    let (r, _) = sl2();
    let quarter = q(1, 4);
    assert_eq!(r.tensor().get(&[0, 0]), quarter);
    assert_eq!(r.tensor().get(&[2, 1]), int(1));
    assert_eq!(r.tensor().nnz(), 2);
    assert_eq!(r.lambda().get(&[2, 1]), q(1, 2));
    assert_eq!(r.lambda().get(&[1, 2]), q(-1, 2));
    assert!(r.is_factorizable());
}

#[test]
fn trivial_twists() {
    let (r, cb) = sl2();
    assert!(check_twist(&cb, &Tensor::zero_on(r.algebra().space(), 2)).unwrap());
    // r − 2Λ = r²¹, so 2Λ is always a twist.
    let two_lam = r.lambda().scale(&int(2));
    assert!(check_twist(&cb, &two_lam).unwrap());
    assert_eq!(&(r.tensor() - &two_lam), &r.r21());
}

#[test]
fn dual_of_the_dual_cobracket_is_the_bracket() {
    let (_, cb) = sl2();
    let dual = cb.dual().unwrap();
    assert!(dual.cocycle_violations().is_empty());
    let back = dual.dual().unwrap();
    let entries = |g: &LieAlgebra| g.structure().entries().map(|(i, x)| (i.clone(), x.clone())).collect::<Vec<_>>();
    assert_eq!(entries(back.algebra()), entries(cb.algebra()));
    let values = |c: &forge::bialg::Cobracket| c.values().iter().map(|t| t.entries().map(|(i, x)| (i.clone(), x.clone())).collect::<Vec<_>>()).collect::<Vec<_>>();
    assert_eq!(values(&back), values(&cb));
}

#[test]
fn broken_jacobi_fixture_is_caught() {
    let model = fixture_model("broken-jacobi").unwrap();
    let g = &model.algebras[0].algebra;
    let bad = g.check_jacobi();
    assert!(!bad.is_empty());
    assert!(g.check_antisymmetry().is_empty());
}
