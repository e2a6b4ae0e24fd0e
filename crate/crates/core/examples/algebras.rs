//! Structure constants of sl_{r+1} from a root datum, checked exactly.

use forge::fixtures::RootDatum;
use forge::tensorspace::{linalg, Tensor};

fn main() -> forge::Result<()> {
    for rank in 1..=3 {
        let datum = RootDatum::type_a(rank)?;
        let g = datum.algebra()?;
        println!(
            "{}: dim {}, {} positive roots, Jacobi violations {}, form violations {}",
            datum.name(),
            g.dim(),
            datum.num_positive(),
            g.check_jacobi().len(),
            g.check_form().len()
        );
    }
    let g = RootDatum::type_a(1)?.algebra()?;
    let labels = g.space().labels();
    for a in 0..g.dim() {
        for b in a + 1..g.dim() {
            let xy = g.bracket_coords(&linalg::unit(g.dim(), a), &linalg::unit(g.dim(), b));
            println!("[{}, {}] = {}", labels[a], labels[b], Tensor::vector(g.space(), &xy));
        }
    }
    Ok(())
}
