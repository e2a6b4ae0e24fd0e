//! Mixed product Poisson structures on products of P¹ charts. For two
//! factors the bivector is `(z1 z2 − z2²) ∂_{z1} ∧ ∂_{z2}`.

use forge::fixtures::{self, mobius_factor, RootDatum};
use forge::polyfield::{is_poisson, mixed_product_n, poisson_from_r, PoissonSpace};

fn main() -> forge::Result<()> {
    let (r, _) = fixtures::sl2()?;
    let datum = RootDatum::type_a(1)?;
    let spaces = (1..=3)
        .map(|j| {
            let act = mobius_factor(&datum, j)?;
            PoissonSpace::new(poisson_from_r(&act, &r)?, act)
        })
        .collect::<forge::Result<Vec<_>>>()?;
    for n in 2..=3 {
        let mp = mixed_product_n(&spaces[..n], &r)?;
        println!("n = {n}: pi = {}", mp.pi);
        println!("       [pi, pi] = 0: {}", is_poisson(&mp.pi)?);
    }
    Ok(())
}
