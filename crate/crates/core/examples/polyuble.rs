//! The n-uble of sl₂: its r-matrix is Altⁿ(r_d) − t_n, and J_n identifies
//! g₍ₙ₎ with (gⁿ, δ_{r⁽ⁿ⁾}).

use forge::double::build_double;
use forge::fixtures;
use forge::polyuble::{alt_n, build_polyuble, t_element, verify_j_map};

fn main() -> forge::Result<()> {
    let (r, cb) = fixtures::sl2()?;
    let dbl = build_double(&cb)?;
    for n in 2..=3 {
        let pu = build_polyuble(&dbl, n)?;
        let want = &alt_n(dbl.r_d().tensor(), n)? - &t_element(&dbl, n)?;
        let j = verify_j_map(&pu, &r)?;
        println!(
            "n = {n}: ambient dim {}, r = Alt - t: {}, J is a bialgebra map: {}, invertible: {}",
            pu.ambient().dim(),
            pu.r_ambient()? == want,
            j.lie.is_empty() && j.bialgebra.is_empty(),
            j.invertible
        );
    }
    Ok(())
}
