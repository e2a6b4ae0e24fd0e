mod common;

use common::{coords, rational, skew2, tensor2};
use forge::tensorspace::{format_scalar, parse_scalar, sharp, unsharp, wedge, LinearMap, Space, Tensor};
use proptest::prelude::*;

fn space() -> Space {
    Space::numbered("V", "v", 3)
}

proptest! {
    #[test]
    fn scalars_round_trip_through_text(x in rational()) {
        prop_assert_eq!(parse_scalar(&format_scalar(&x), "x").unwrap(), x);
    }

    #[test]
    fn split_recovers_the_tensor(t in tensor2(&space())) {
        let (lam, s) = t.sym_skew_split().unwrap();
        prop_assert!(lam.is_skew());
        prop_assert!(s.is_symmetric());
        prop_assert_eq!(&lam + &s, t);
    }

    #[test]
    fn sharp_and_unsharp_are_inverse(t in tensor2(&space())) {
        prop_assert_eq!(unsharp(&sharp(&t).unwrap()).unwrap(), t);
    }

    #[test]
    fn sharp_of_transpose_is_the_transpose(t in tensor2(&space())) {
        let lhs = sharp(&t.transpose21().unwrap()).unwrap();
        let rhs = sharp(&t).unwrap().transpose();
        prop_assert_eq!(lhs.matrix(), rhs.matrix());
    }

    #[test]
    fn wedge_has_no_factorial(a in coords(3), b in coords(3)) {
        let v = space();
        let (u, w) = (Tensor::vector(&v, &a), Tensor::vector(&v, &b));
        let uw = wedge(&[u.clone(), w.clone()]).unwrap();
        prop_assert_eq!(&uw, &(&u.outer(&w) - &w.outer(&u)));
        prop_assert_eq!(wedge(&[w, u]).unwrap(), -&uw);
    }

    #[test]
    fn wedge_of_three_is_alternating(a in coords(3), b in coords(3), c in coords(3)) {
        let v = space();
        let vs = [Tensor::vector(&v, &a), Tensor::vector(&v, &b), Tensor::vector(&v, &c)];
        let w = wedge(&vs).unwrap();
        prop_assert!(w.is_skew());
        // For three vectors in a 3-space the single component is the determinant.
        let minor = |i: usize, j: usize| &b[i] * &c[j] - &b[j] * &c[i];
        let det = &a[0] * &minor(1, 2) - &a[1] * &minor(0, 2) + &a[2] * &minor(0, 1);
        prop_assert_eq!(w.get(&[0, 1, 2]), det);
    }

    #[test]
    fn pushforward_is_functorial(t in tensor2(&space()), a in coords(9), b in coords(9)) {
        let v = space();
        let rows = |c: &[_]| -> Vec<Vec<_>> { c.chunks(3).map(<[_]>::to_vec).collect() };
        let f = LinearMap::new(v.clone(), v.clone(), rows(&a)).unwrap();
        let g = LinearMap::new(v.clone(), v.clone(), rows(&b)).unwrap();
        let lhs = t.pushforward(&f.compose(&g).unwrap()).unwrap();
        let rhs = t.pushforward(&g).unwrap().pushforward(&f).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn skew_tensors_stay_skew_under_pushforward(t in skew2(&space()), a in coords(9)) {
        let v = space();
        let f = LinearMap::new(v.clone(), v.clone(), a.chunks(3).map(<[_]>::to_vec).collect()).unwrap();
        prop_assert!(t.pushforward(&f).unwrap().is_skew());
    }
}

#[test]
fn malformed_scalars_are_rejected() {
    assert!(parse_scalar("1/0", "x").is_err());
    assert!(parse_scalar("one", "x").is_err());
    assert_eq!(format_scalar(&parse_scalar("-6/4", "x").unwrap()), "-3/2");
}

#[test]
fn tensors_render_with_basis_labels() {
    let (r, _) = forge::fixtures::sl2().unwrap();
    assert_eq!(r.tensor().to_string(), "1/4 h⊗h + f⊗e");
    assert_eq!(r.lambda().to_string(), "-1/2 e⊗f + 1/2 f⊗e");
    assert_eq!(Tensor::zero_on(r.algebra().space(), 2).to_string(), "0");
}
