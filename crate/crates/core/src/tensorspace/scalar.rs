use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{ForgeError, Result};

/// Exact rational scalar. `BigRational` keeps values in lowest terms with a
/// positive denominator.
pub type Scalar = BigRational;

/// `n / d` as a scalar. Panics on `d == 0`.
pub fn q(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn half() -> Scalar {
    q(1, 2)
}

/// Parses `"p"` or `"p/q"`. `field` names the location for the diagnostic.
pub fn parse_scalar(text: &str, field: &str) -> Result<Scalar> {
    let err = |message: String| ForgeError::Parse { field: field.to_string(), message };
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err(format!("bad numerator in {text:?}")))?;
    let den: BigInt = den.parse().map_err(|_| err(format!("bad denominator in {text:?}")))?;
    if den.is_zero() {
        return Err(err(format!("zero denominator in {text:?}")));
    }
    Ok(Scalar::new(num, den))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_scalar(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
