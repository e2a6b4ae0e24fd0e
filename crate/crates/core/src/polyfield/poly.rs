use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};

use crate::tensorspace::{format_scalar, Scalar};

/// Sparse polynomial in a fixed number of variables with rational
/// coefficients. Exponent vectors have length `nvars`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Poly {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Poly {
        let mut p = Poly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Poly {
        Poly::constant(nvars, Scalar::one())
    }

    /// The coordinate function `z_i`.
    pub fn var(nvars: usize, i: usize) -> Poly {
        Poly::monomial(nvars, &[(i, 1)], Scalar::one())
    }

    /// `c · Π z_i^{e_i}` from `(variable, exponent)` pairs.
    pub fn monomial(nvars: usize, powers: &[(usize, u32)], c: Scalar) -> Poly {
        let mut exp = vec![0; nvars];
        for &(i, e) in powers {
            exp[i] += e;
        }
        let mut p = Poly::zero(nvars);
        p.add_term(exp, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exp: Vec<u32>, c: Scalar) {
        debug_assert_eq!(exp.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &Poly) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-Scalar::one())
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// `∂p/∂z_i`.
    pub fn derivative(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut d = e.clone();
                d[i] -= 1;
                out.add_term(d, c * Scalar::from_integer(e[i].into()));
            }
        }
        out
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        let mut total = Scalar::zero();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    v *= x;
                }
            }
            total += v;
        }
        total
    }

    /// Whether `z_i` occurs.
    pub fn depends_on(&self, i: usize) -> bool {
        self.terms.keys().any(|e| e[i] > 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Human-readable form using the given variable names, highest terms first.
    pub fn render(&self, vars: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, k)| **k > 0)
                .map(|(i, k)| if *k == 1 { vars[i].clone() } else { format!("{}^{}", vars[i], k) })
                .collect();
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if n == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                let _ = write!(out, " {sign} ");
            }
            if mono.is_empty() {
                out.push_str(&format_scalar(&mag));
            } else if mag.is_one() {
                out.push_str(&mono.join("*"));
            } else {
                let _ = write!(out, "{}*{}", format_scalar(&mag), mono.join("*"));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensorspace::int;

    #[test]
    fn product_rule() {
        let z = Poly::var(2, 0);
        let w = Poly::var(2, 1);
        let p = z.mul(&w).sub(&w.mul(&w));
        assert_eq!(p.derivative(1), z.sub(&w.scale(&int(2))));
        assert_eq!(p.eval(&[int(3), int(2)]), int(2));
    }

    #[test]
    fn render() {
        let vars: Vec<String> = vec!["z1".into(), "z2".into()];
        let p = Poly::var(2, 0).mul(&Poly::var(2, 1)).sub(&Poly::var(2, 1).mul(&Poly::var(2, 1)));
        assert_eq!(p.render(&vars), "z1*z2 - z2^2");
        assert_eq!(p.scale(&int(-2)).render(&vars), "-2*z1*z2 + 2*z2^2");
    }
}
