//! The coboundary cobracket `δ_r(x) = ad_x r` of the standard sl₂ r-matrix
//! and its dual Lie bialgebra.

use forge::fixtures;

fn main() -> forge::Result<()> {
    let (r, cb) = fixtures::sl2()?;
    let labels = r.algebra().space().labels();
    println!("r = {}", r.tensor());
    for (i, l) in labels.iter().enumerate() {
        println!("delta({l}) = {}", cb.value(i));
    }
    println!("cocycle violations: {}", cb.cocycle_violations().len());
    let dual = cb.dual()?;
    println!("dual algebra {} has dim {}, cocycle violations {}", dual.algebra().space(), dual.algebra().dim(), dual.cocycle_violations().len());
    Ok(())
}
