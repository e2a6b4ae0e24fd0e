//! The maps φ_{m,k}: gᵐ → gⁿ are Lie bialgebra maps between the r⁽ⁿ⁾
//! structures.

use forge::bialg::{cobracket_from_r, Cobracket, RMatrix};
use forge::fixtures;
use forge::polyuble::{phi_mk, r_power};

fn power_cobracket(r: &RMatrix, n: usize) -> forge::Result<Cobracket> {
    let rn = r_power(r, n)?;
    cobracket_from_r(rn.algebra(), rn.tensor())
}

fn main() -> forge::Result<()> {
    let (r, _) = fixtures::sl2()?;
    let n = 3;
    let target = power_cobracket(&r, n)?;
    for m in 1..=n {
        let source = power_cobracket(&r, m)?;
        for k in 1..=m {
            let phi = phi_mk(r.algebra().space(), m, k, n)?;
            println!("phi_({m},{k}): g^{m} -> g^{n}, violations {}", source.hom_violations(&target, &phi)?.len());
        }
    }
    Ok(())
}
