//! Searches small skew tensors on sl₂ for twisting elements of δ_r and
//! compares the twisted cobracket with the one of `r − t`.

use forge::bialg::{check_twist, cobracket_from_r, twist_cobracket, TwistElement};
use forge::fixtures;
use forge::tensorspace::{int, Tensor};

fn main() -> forge::Result<()> {
    let (r, cb) = fixtures::sl2()?;
    let g = r.algebra();
    let range = [-1i64, 0, 1];
    let mut found = 0;
    for a in range {
        for b in range {
            for c in range {
                let mut t = Tensor::zero_on(g.space(), 2);
                for ((i, j), x) in [(0, 1), (0, 2), (1, 2)].into_iter().zip([a, b, c]) {
                    t.add_entry(vec![i, j], int(x));
                    t.add_entry(vec![j, i], int(-x));
                }
                if !check_twist(&cb, &t)? {
                    continue;
                }
                found += 1;
                let twisted = twist_cobracket(&TwistElement::new(&cb, t.clone())?)?;
                let same = twisted == cobracket_from_r(g, &(r.tensor() - &t))?;
                println!("t = {t}: delta_t = delta_(r - t) is {same}");
            }
        }
    }
    println!("{found} of 27 candidates are twisting elements");
    Ok(())
}
