//! The Möbius action of sl₂ on the affine chart of P¹ and the Poisson
//! bivector −λ(r) it induces. On a single chart that bivector is zero for
//! dimension reasons; the `mixed` example takes products.

use forge::fixtures::{self, mobius_factor, RootDatum};
use forge::polyfield::{is_poisson, poisson_action_violations, poisson_from_r, symmetric_image_vanishes};

fn main() -> forge::Result<()> {
    let (r, cb) = fixtures::sl2()?;
    let act = mobius_factor(&RootDatum::type_a(1)?, 1)?;
    for (i, l) in r.algebra().space().labels().iter().enumerate() {
        println!("lambda({l}) = {}", act.field(i));
    }
    println!("lambda(s) = 0: {}", symmetric_image_vanishes(&act, r.sym())?);
    let pi = poisson_from_r(&act, &r)?;
    println!("pi = {pi}");
    println!("[pi, pi] = 0: {}", is_poisson(&pi)?);
    println!("equivariance violations: {}", poisson_action_violations(&act, &pi, &cb)?.len());
    Ok(())
}
