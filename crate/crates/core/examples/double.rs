//! The Drinfeld double of (sl₂, δ_r) and the Manin triple it carries.

use forge::double::{build_double, p_plus_minus, verify_manin};
use forge::fixtures;

fn main() -> forge::Result<()> {
    let (r, cb) = fixtures::sl2()?;
    let dbl = build_double(&cb)?;
    let d = dbl.total();
    println!("d = {} with basis {:?}", d.space(), d.space().labels());
    println!("Jacobi violations {}, form violations {}", d.check_jacobi().len(), d.check_form().len());
    println!("(d, g, g*) is a Manin triple: {}", verify_manin(d, &dbl.g_subspace(), &dbl.dual_subspace()));
    println!("r_d = {}", dbl.r_d().tensor());
    println!("CYB(r_d) = {}", dbl.r_d().cyb());
    let (pp, pm) = p_plus_minus(&dbl, &r)?;
    println!("p+(r_d) = {}", dbl.r_d().tensor().pushforward(&pp)?);
    println!("p-(r_d) = {}", dbl.r_d().tensor().pushforward(&pm)?);
    Ok(())
}
