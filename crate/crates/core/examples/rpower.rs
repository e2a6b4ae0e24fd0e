//! `r⁽ⁿ⁾ = Altⁿ(r) − Mixⁿ(r)` on gⁿ for the standard sl₂ r-matrix.

use forge::fixtures;
use forge::polyuble::r_power;

fn main() -> forge::Result<()> {
    let (r, _) = fixtures::sl2()?;
    let r2 = r_power(&r, 2)?;
    println!("Alt^2(r) = {}", r2.alt());
    println!("Mix^2(r) = {}", r2.mix());
    println!("r^(2)    = {}", r2.tensor());
    for n in 2..=4 {
        let rn = r_power(&r, n)?;
        println!("n = {n}: {} nonzero entries, CYB = {}", rn.tensor().nnz(), rn.cyb()?);
    }
    Ok(())
}
