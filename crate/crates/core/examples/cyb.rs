//! Standard r-matrices solve the classical Yang-Baxter equation; their
//! symmetric part is an invariant form.

use forge::fixtures::{standard_r, RootDatum};

fn main() -> forge::Result<()> {
    for rank in 1..=2 {
        let datum = RootDatum::type_a(rank)?;
        let r = standard_r(&datum)?;
        println!("{}:", datum.name());
        println!("  r      = {}", r.tensor());
        println!("  s      = {}", r.sym());
        println!("  Lambda = {}", r.lambda());
        println!("  CYB(r) = {}", r.cyb());
        println!("  quasitriangular {}, factorizable {}", r.is_quasitriangular(), r.is_factorizable());
    }
    Ok(())
}
