//! Fusion of three (sl₂, r)-Poisson charts: associativity, and the square
//! relating fusion with quasi-Poisson fusion.

use forge::fixtures::{self, mobius_factor, RootDatum};
use forge::polyfield::{fusion, fusion_square, is_poisson, poisson_action_violations, poisson_from_r, PoissonSpace};

fn main() -> forge::Result<()> {
    let (r, cb) = fixtures::sl2()?;
    let datum = RootDatum::type_a(1)?;
    let spaces = (1..=3)
        .map(|j| {
            let act = mobius_factor(&datum, j)?;
            PoissonSpace::new(poisson_from_r(&act, &r)?, act)
        })
        .collect::<forge::Result<Vec<_>>>()?;
    let all = fusion(&spaces, &r)?;
    println!("fused pi = {}", all.pi);
    println!("[pi, pi] = 0: {}", is_poisson(&all.pi)?);
    println!("diagonal action equivariance violations: {}", poisson_action_violations(&all.action, &all.pi, &cb)?.len());
    let left = fusion(&[fusion(&spaces[0..2], &r)?, spaces[2].clone()], &r)?;
    let right = fusion(&[spaces[0].clone(), fusion(&spaces[1..3], &r)?], &r)?;
    println!("(12)3 = 123: {}, 1(23) = 123: {}", left == all, right == all);
    println!("fusion square commutes: {}", fusion_square(&spaces[0..2], &r)?.commutes());
    Ok(())
}
