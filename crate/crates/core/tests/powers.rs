mod common;

use common::coords;
use forge::bialg::{cobracket_from_r, f_pm_pairing, RMatrix};
use forge::double::{build_double, p_plus_minus, q_map, verify_manin};
use forge::fixtures;
use forge::polyuble::{
    alt_n, build_polyuble, dual_bracket_rn, mixed_model, p_2n_defect, p_j, phi_mk, phi_tau, power, projection_signs, r_eps_tau,
    r_power, t_element, verify_j_map, Side,
};
use forge::tensorspace::{linalg, permutations, Scalar};
use proptest::prelude::*;

fn fixtures_with_r() -> Vec<(&'static str, RMatrix)> {
    vec![
        ("abelian", fixtures::abelian_bialgebra(2).unwrap().0),
        ("axb", fixtures::ax_plus_b_bialgebra().unwrap().0),
        ("sl2", fixtures::sl2().unwrap().0),
    ]
}

/// `[ξ, η]` on `(gⁿ)*` read off `δ_{r⁽ⁿ⁾}` by evaluation: the `c`-th
/// coordinate is `⟨ξ ⊗ η, δ(x_c)⟩`.
fn dual_bracket_oracle(r: &RMatrix, n: usize, xi: &[Scalar], eta: &[Scalar]) -> Vec<Scalar> {
    let rn = r_power(r, n).unwrap();
    let cb = cobracket_from_r(rn.algebra(), rn.tensor()).unwrap();
    (0..xi.len()).map(|c| cb.value(c).evaluate(&[xi.to_vec(), eta.to_vec()])).collect()
}

#[test]
fn doubles_of_every_fixture() {
    for (name, r) in fixtures_with_r() {
        let cb = cobracket_from_r(r.algebra(), r.tensor()).unwrap();
        let dbl = build_double(&cb).unwrap();
        let d = dbl.total();
        assert!(d.check_jacobi().is_empty(), "{name}");
        assert!(d.check_form().is_empty(), "{name}");
        assert!(verify_manin(d, &dbl.g_subspace(), &dbl.dual_subspace()), "{name}");
        assert!(dbl.restriction_violations().unwrap().is_empty(), "{name}");
        assert!(dbl.r_d().cyb().is_zero(), "{name}");
        let (pp, pm) = p_plus_minus(&dbl, &r).unwrap();
        assert_eq!(&dbl.r_d().tensor().pushforward(&pp).unwrap(), r.tensor(), "{name}");
        assert_eq!(dbl.r_d().tensor().pushforward(&pm).unwrap(), -&r.r21(), "{name}");
        let pair = f_pm_pairing(&r).unwrap();
        let (dq, qm) = q_map(&r, &pair).unwrap();
        assert_eq!(&dq.r_d().tensor().pushforward(&qm).unwrap(), r.tensor(), "{name}");
    }
}

#[test]
fn r_powers_solve_cybe() {
    for (name, r) in fixtures_with_r() {
        for n in 2..=4 {
            assert!(r_power(&r, n).unwrap().cyb().unwrap().is_zero(), "{name} n={n}");
        }
    }
}

#[test]
fn zeta_formula_matches_the_evaluated_dual_bracket() {
    for (name, r) in fixtures_with_r() {
        let m = r.algebra().dim();
        for n in 2..=3 {
            for a in 0..m * n {
                for b in 0..m * n {
                    let (xi, eta) = (linalg::unit(m * n, a), linalg::unit(m * n, b));
                    let blocks = |v: &[Scalar]| v.chunks(m).map(<[Scalar]>::to_vec).collect::<Vec<_>>();
                    let got = dual_bracket_rn(&r, &blocks(&xi), &blocks(&eta)).unwrap().concat();
                    assert_eq!(got, dual_bracket_oracle(&r, n, &xi, &eta), "{name} n={n} ({a}, {b})");
                }
            }
        }
    }
}

#[test]
fn phi_maps_are_bialgebra_maps() {
    let (r, _) = fixtures::sl2().unwrap();
    let g = r.algebra();
    for n in 1..=4 {
        let target = r_power_cobracket(&r, n);
        for m in 1..=n {
            let source = r_power_cobracket(&r, m);
            for k in 1..=m {
                let phi = phi_mk(g.space(), m, k, n).unwrap();
                assert!(source.hom_violations(&target, &phi).unwrap().is_empty(), "m={m} k={k} n={n}");
            }
        }
    }
}

fn r_power_cobracket(r: &RMatrix, n: usize) -> forge::bialg::Cobracket {
    let rn = r_power(r, n).unwrap();
    cobracket_from_r(rn.algebra(), rn.tensor()).unwrap()
}

#[test]
fn j2_is_invertible_exactly_for_factorizable_r() {
    for (name, r) in fixtures_with_r() {
        let cb = cobracket_from_r(r.algebra(), r.tensor()).unwrap();
        let dbl = build_double(&cb).unwrap();
        let rep = verify_j_map(&build_polyuble(&dbl, 2).unwrap(), &r).unwrap();
        assert!(rep.lie.is_empty() && rep.bialgebra.is_empty(), "{name}");
        assert_eq!(rep.invertible, name == "sl2", "{name}");
    }
}

#[test]
fn projections_of_double_powers() {
    let (r, cb) = fixtures::sl2().unwrap();
    let dbl = build_double(&cb).unwrap();
    for n in 1..=2 {
        assert!(p_2n_defect(&dbl, &r, n).unwrap().is_zero(), "n={n}");
    }
}

#[test]
fn polyuble_r_is_alt_minus_t() {
    for (name, r) in fixtures_with_r() {
        let dbl = build_double(&cobracket_from_r(r.algebra(), r.tensor()).unwrap()).unwrap();
        for n in 2..=3 {
            let pu = build_polyuble(&dbl, n).unwrap();
            let want = &alt_n(dbl.r_d().tensor(), n).unwrap() - &t_element(&dbl, n).unwrap();
            assert_eq!(pu.r_ambient().unwrap(), want, "{name} n={n}");
        }
    }
}

#[test]
fn mixed_twists_under_all_identifications() {
    let (_, cb) = fixtures::sl2().unwrap();
    let dbl = build_double(&cb).unwrap();
    for size in 1..=4 {
        let pu = build_polyuble(&dbl, size).unwrap();
        for side in [Side::G, Side::Dual] {
            let model = mixed_model(&dbl, side, size).unwrap();
            assert!(model.is_mixed_twist().unwrap(), "{side:?} {size}");
            assert!(model.compare(&pu).unwrap().is_empty(), "{side:?} {size}");
        }
    }
}

#[test]
fn projections_to_subsets_of_factors() {
    let (r, _) = fixtures::sl2().unwrap();
    let n = 4;
    let rn = r_power(&r, n).unwrap();
    for mask in 1u32..(1 << n) {
        let j: Vec<usize> = (0..n).filter(|b| mask & (1 << b) != 0).collect();
        let id: Vec<usize> = (0..j.len()).collect();
        let got = rn.tensor().pushforward(&p_j(r.algebra().space(), n, &j).unwrap()).unwrap();
        assert_eq!(got, r_eps_tau(&r, &projection_signs(&j), &id).unwrap(), "J={j:?}");
    }
}

#[test]
fn all_sign_and_order_variants_are_quasitriangular() {
    let (r, _) = fixtures::ax_plus_b_bialgebra().unwrap();
    let n = 3;
    let (gn, _) = power(r.algebra(), n).unwrap();
    for mask in 0u32..(1 << n) {
        let eps: Vec<i8> = (0..n).map(|b| if mask & (1 << b) != 0 { -1 } else { 1 }).collect();
        for (tau, _) in permutations(n) {
            let t = r_eps_tau(&r, &eps, &tau).unwrap();
            assert!(RMatrix::new(&gn, t).unwrap().is_quasitriangular(), "eps={eps:?} tau={tau:?}");
        }
    }
}

fn perm4() -> impl Strategy<Value = Vec<usize>> {
    Just((0..4).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Reordering the factors of `r⁽⁴⁾` gives `r^(ε,τ,4)` with `ε(τ(a)) = (−1)^a`.
    #[test]
    fn reordering_factors(tau in perm4()) {
        let (r, _) = fixtures::sl2().unwrap();
        let mut eps = vec![1i8; 4];
        for (a, &t) in tau.iter().enumerate() {
            eps[t] = if a % 2 == 0 { 1 } else { -1 };
        }
        let moved = r_power(&r, 4).unwrap().tensor().pushforward(&phi_tau(r.algebra().space(), &tau).unwrap()).unwrap();
        prop_assert_eq!(moved, r_eps_tau(&r, &eps, &tau).unwrap());
    }

    /// `(r⁽²⁾)₊(ξ₁, ξ₂) = (r₊(ξ₁ + ξ₂), r₋(ξ₁ + ξ₂))`.
    #[test]
    fn sharp_of_the_square(x1 in coords(3), x2 in coords(3)) {
        let (r, _) = fixtures::sl2().unwrap();
        let r2 = r_power(&r, 2).unwrap().rmatrix().unwrap();
        let sum: Vec<Scalar> = x1.iter().zip(&x2).map(|(a, b)| a + b).collect();
        let got = r2.r_plus().apply_coords(&[x1.clone(), x2.clone()].concat());
        prop_assert_eq!(got, [r.r_plus().apply_coords(&sum), r.r_minus().apply_coords(&sum)].concat());
    }

    /// `⟨[x, y]_d, z⟩_d = ⟨x, [y, z]_d⟩_d` on the double of sl₂.
    #[test]
    fn double_form_is_invariant(x in coords(6), y in coords(6), z in coords(6)) {
        let (_, cb) = fixtures::sl2().unwrap();
        let dbl = build_double(&cb).unwrap();
        let d = dbl.total();
        let form = d.form().unwrap();
        prop_assert_eq!(form.evaluate(&[d.bracket_coords(&x, &y), z.clone()]), form.evaluate(&[x.clone(), d.bracket_coords(&y, &z)]));
    }
}
