//! The quasi-Poisson bivector `Q = π + λ(Λ)` of a fused space, with
//! `[Q, Q] = λ(φ_s)` and g-invariance.

use forge::fixtures::{self, mobius_factor, RootDatum};
use forge::polyfield::{fusion, phi_s, poisson_from_r, quasi_correspond, quasi_inverse, quasi_violations, PoissonSpace};

fn main() -> forge::Result<()> {
    let (r, _) = fixtures::sl2()?;
    let datum = RootDatum::type_a(1)?;
    let spaces = (1..=2)
        .map(|j| {
            let act = mobius_factor(&datum, j)?;
            PoissonSpace::new(poisson_from_r(&act, &r)?, act)
        })
        .collect::<forge::Result<Vec<_>>>()?;
    let fused = fusion(&spaces, &r)?;
    let q = quasi_correspond(&fused, &r)?;
    println!("phi_s = {}", phi_s(&r)?);
    println!("Q = {q}");
    println!("quasi-Poisson violations: {}", quasi_violations(&q, &fused.action, &r)?.len());
    println!("Q - lambda(Lambda) recovers pi: {}", quasi_inverse(&q, &fused.action, &r)?.pi == fused.pi);
    Ok(())
}
