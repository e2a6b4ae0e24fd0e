#![allow(dead_code)]

use forge::bialg::RMatrix;
use forge::fixtures::{mobius_factor, RootDatum};
use forge::polyfield::{apply_action, PoissonSpace};
use forge::tensorspace::{q, Scalar, Space, Tensor};
use proptest::prelude::*;

/// Rationals `p/q` with `|p| ≤ 4`, `1 ≤ q ≤ 3`.
pub fn rational() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| q(n, d))
}

pub fn coords(dim: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(rational(), dim)
}

/// A dense order-2 tensor on `space` with small rational entries.
pub fn tensor2(space: &Space) -> impl Strategy<Value = Tensor> {
    let space = space.clone();
    let m = space.dim();
    coords(m * m).prop_map(move |c| {
        let mut t = Tensor::zero_on(&space, 2);
        for (k, x) in c.into_iter().enumerate() {
            t.add_entry(vec![k / m, k % m], x);
        }
        t
    })
}

/// A skew order-2 tensor built from its strict upper triangle.
pub fn skew2(space: &Space) -> impl Strategy<Value = Tensor> {
    let space = space.clone();
    let m = space.dim();
    coords(m * (m - 1) / 2).prop_map(move |c| {
        let mut t = Tensor::zero_on(&space, 2);
        let mut it = c.into_iter();
        for i in 0..m {
            for j in i + 1..m {
                let x = it.next().unwrap();
                t.add_entry(vec![i, j], x.clone());
                t.add_entry(vec![j, i], -x);
            }
        }
        t
    })
}

pub fn vector(space: &Space, c: &[Scalar]) -> Tensor {
    Tensor::vector(space, c)
}

/// `n` copies of the sl₂ Möbius chart with `π_j = −λ_j(r)`.
pub fn mobius_spaces(r: &RMatrix, n: usize) -> Vec<PoissonSpace> {
    let datum = RootDatum::type_a(1).unwrap();
    (1..=n)
        .map(|j| {
            let act = mobius_factor(&datum, j).unwrap();
            PoissonSpace::new(apply_action(&act, r.tensor()).unwrap().neg(), act).unwrap()
        })
        .collect()
}
