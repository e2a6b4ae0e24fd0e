use super::field::PolyField;
use super::poly::Poly;
use crate::error::{ForgeError, Result};

/// `[X, Y]^j = Σ_i X^i ∂_i Y^j − Y^i ∂_i X^j`.
pub fn vector_bracket(x: &PolyField, y: &PolyField) -> Result<PolyField> {
    x.chart().expect(y.chart())?;
    for f in [x, y] {
        if f.degree() != 1 {
            return Err(ForgeError::OrderMismatch { expected: 1, found: f.degree() });
        }
    }
    let n = x.nvars();
    let mut coeffs = Vec::with_capacity(n);
    for j in 0..n {
        coeffs.push(x.apply_to(&y.component(&[j]))?.sub(&y.apply_to(&x.component(&[j]))?));
    }
    PolyField::vector(x.chart(), coeffs)
}

/// Splits the monomial `a ∂_{i_1}∧…∧∂_{i_k}` into `X_1 = a∂_{i_1}`,
/// `X_p = ∂_{i_p}`.
fn factors(idx: &[usize], a: &Poly, f: &PolyField) -> Vec<PolyField> {
    idx.iter()
        .enumerate()
        .map(|(p, &i)| {
            let coeff = if p == 0 { a.clone() } else { Poly::one(f.nvars()) };
            PolyField::monomial(f.chart(), &[i], coeff)
        })
        .collect()
}

fn wedge_all(chart: &super::field::Chart, parts: &[&PolyField]) -> Result<PolyField> {
    let mut out = PolyField::function(chart, Poly::one(chart.dim()));
    for p in parts {
        out = out.wedge(p)?;
    }
    Ok(out)
}

/// `[A, f] = Σ_p (−1)^{k−p} X_p(f) X_1∧…X̂_p…∧X_k` for `A = X_1∧…∧X_k`.
fn bracket_with_function(a: &PolyField, f: &Poly) -> Result<PolyField> {
    let k = a.degree();
    let mut out = PolyField::zero(a.chart(), k - 1);
    for (idx, coeff) in a.components() {
        for p in 0..k {
            let df = coeff.mul(&f.derivative(idx[p]));
            let rest: Vec<usize> = idx.iter().enumerate().filter(|(q, _)| *q != p).map(|(_, i)| *i).collect();
            let df = if (k - 1 - p) % 2 == 1 { df.neg() } else { df };
            out.add_term(&rest, df);
        }
    }
    Ok(out)
}

/// Schouten bracket of multivector fields, extending the Lie bracket of
/// vector fields with `[X, f] = X(f)` and the graded Leibniz rule
/// `[A, B∧C] = [A,B]∧C + (−1)^{(k−1)l} B∧[A,C]`.
pub fn schouten_field(a: &PolyField, b: &PolyField) -> Result<PolyField> {
    a.chart().expect(b.chart())?;
    let (k, l) = (a.degree(), b.degree());
    let chart = a.chart();
    if k + l == 0 {
        return Ok(PolyField::zero(chart, 0));
    }
    if l == 0 {
        return bracket_with_function(a, &b.component(&[]));
    }
    if k == 0 {
        let out = bracket_with_function(b, &a.component(&[]))?;
        return Ok(if (l - 1) % 2 == 0 { out.neg() } else { out });
    }
    let mut out = PolyField::zero(chart, k + l - 1);
    if k + l - 1 > chart.dim() {
        return Ok(out);
    }
    for (ia, ca) in a.components() {
        let xs = factors(ia, ca, a);
        for (ib, cb) in b.components() {
            let ys = factors(ib, cb, b);
            for p in 0..k {
                for q in 0..l {
                    let head = vector_bracket(&xs[p], &ys[q])?;
                    if head.is_zero() {
                        continue;
                    }
                    let mut parts: Vec<&PolyField> = vec![&head];
                    parts.extend(xs.iter().enumerate().filter(|(i, _)| *i != p).map(|(_, x)| x));
                    parts.extend(ys.iter().enumerate().filter(|(j, _)| *j != q).map(|(_, y)| y));
                    let term = wedge_all(chart, &parts)?;
                    // (−1)^{(p+1)+(q+1)} with 1-based positions.
                    out = if (p + q) % 2 == 1 { out.sub(&term)? } else { out.add(&term)? };
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyfield::field::Chart;
    use crate::tensorspace::int;

    #[test]
    fn coordinate_example() {
        let c = Chart::numbered("z", 2);
        let d1 = PolyField::partial(&c, 0);
        let z1d2 = PolyField::monomial(&c, &[1], Poly::var(2, 0));
        assert_eq!(schouten_field(&d1, &z1d2).unwrap(), PolyField::partial(&c, 1));
    }

    #[test]
    fn vector_on_function_is_derivative() {
        let c = Chart::numbered("z", 2);
        let x = PolyField::monomial(&c, &[0], Poly::var(2, 1));
        let f = Poly::var(2, 0).mul(&Poly::var(2, 0));
        let got = schouten_field(&x, &PolyField::function(&c, f.clone())).unwrap();
        assert_eq!(got, PolyField::function(&c, x.apply_to(&f).unwrap()));
        let back = schouten_field(&PolyField::function(&c, f), &x).unwrap();
        assert_eq!(back, got.neg());
    }

    #[test]
    fn bivector_in_two_variables_is_poisson() {
        let c = Chart::numbered("z", 2);
        let pi = PolyField::monomial(&c, &[0, 1], Poly::var(2, 0).mul(&Poly::var(2, 1)).scale(&int(3)));
        assert!(schouten_field(&pi, &pi).unwrap().is_zero());
    }

    #[test]
    fn sum_of_partials_on_quadratic_bivector() {
        let c = Chart::numbered("z", 2);
        let z1 = Poly::var(2, 0);
        let z2 = Poly::var(2, 1);
        let pi = PolyField::monomial(&c, &[0, 1], z1.mul(&z2).sub(&z2.mul(&z2)));
        let x = PolyField::partial(&c, 0).add(&PolyField::partial(&c, 1)).unwrap();
        let want = PolyField::monomial(&c, &[0, 1], z1.sub(&z2));
        assert_eq!(schouten_field(&x, &pi).unwrap(), want);
    }
}
