use crate::bialg::{cobracket_from_r, cyb, RMatrix};
use crate::double::{p_plus_minus, DoubleAlgebra};
use crate::error::{ForgeError, Result};
use crate::liealg::{LieAlgebra, Violation};
use crate::tensorspace::{linalg, zero, DirectSum, LinearMap, Space, Tensor};

use super::rpower::{mix_n, power, power_sum, r_power, repeat_blocks};
use super::uble::{Piece, PolyubleSplitting, Side};

/// `⊕ V → ⊕ V` sending block `from` onto block `to` for each pair.
pub fn block_map(from: &DirectSum, to: &DirectSum, assign: &[(usize, usize)]) -> Result<LinearMap> {
    let mut m = LinearMap::zero(from.space(), to.space());
    for &(a, b) in assign {
        from.check_position(a)?;
        to.check_position(b)?;
        if from.parts()[a] != to.parts()[b] {
            return Err(ForgeError::SpaceMismatch { expected: to.parts()[b].name(), found: from.parts()[a].name() });
        }
        m = m.add(&to.inclusion(b)?.compose(&from.projection(a)?)?)?;
    }
    Ok(m)
}

/// `φ_{m,k}: gᵐ → gⁿ` repeating slot `k` (1-based) `n−m+1` times.
pub fn phi_mk(g: &Space, m: usize, k: usize, n: usize) -> Result<LinearMap> {
    if k == 0 || k > m {
        return Err(ForgeError::IndexError { index: k, bound: m });
    }
    if m > n {
        return Err(ForgeError::IndexError { index: m, bound: n });
    }
    let extra = n - m;
    let mut assign = Vec::new();
    for b in 0..m {
        match (b + 1).cmp(&k) {
            std::cmp::Ordering::Less => assign.push((b, b)),
            std::cmp::Ordering::Equal => assign.extend((0..=extra).map(|e| (b, b + e))),
            std::cmp::Ordering::Greater => assign.push((b, b + extra)),
        }
    }
    block_map(&power_sum(g, m), &power_sum(g, n), &assign)
}

/// `(diag)_n = φ_{1,1}: g → gⁿ`.
pub fn diag_n(g: &Space, n: usize) -> Result<LinearMap> {
    let single = power_sum(g, 1);
    phi_mk(g, 1, 1, n)?.compose(&single.inclusion(0)?)
}

/// Bracket and cobracket violations of `φ_{m,k}: (gᵐ, δ_{r⁽ᵐ⁾}) → (gⁿ, δ_{r⁽ⁿ⁾})`.
pub fn phi_mk_violations(r: &RMatrix, m: usize, k: usize, n: usize) -> Result<Vec<Violation>> {
    let phi = phi_mk(r.algebra().space(), m, k, n)?;
    let src = r_power(r, m)?;
    let dst = r_power(r, n)?;
    hom_violations(src.algebra(), src.tensor(), dst.algebra(), dst.tensor(), &phi)
}

/// Violations of `h: (a, δ_{r_a}) → (b, δ_{r_b})` being a Lie bialgebra map.
pub fn hom_violations(a: &LieAlgebra, ra: &Tensor, b: &LieAlgebra, rb: &Tensor, h: &LinearMap) -> Result<Vec<Violation>> {
    let mut out = a.hom_violations(b, h);
    let ca = cobracket_from_r(a, ra)?;
    let cb = cobracket_from_r(b, rb)?;
    out.extend(ca.hom_violations(&cb, h)?);
    Ok(out)
}

fn check_perm(tau: &[usize]) -> Result<()> {
    let mut seen = vec![false; tau.len()];
    for &t in tau {
        if t >= tau.len() || seen[t] {
            return Err(ForgeError::InvalidArgument(format!("{tau:?} is not a permutation")));
        }
        seen[t] = true;
    }
    Ok(())
}

/// `φ_τ(x)_i = x_{τ⁻¹(i)}`, so block `a` moves to position `τ(a)`
/// (0-based, `tau[a] = τ(a)`).
pub fn phi_tau(g: &Space, tau: &[usize]) -> Result<LinearMap> {
    check_perm(tau)?;
    let sum = power_sum(g, tau.len());
    let assign: Vec<(usize, usize)> = tau.iter().enumerate().map(|(a, &t)| (a, t)).collect();
    block_map(&sum, &sum, &assign)
}

/// `r^{(ε,τ,n)} = (ε₁s, …, ε_n s) + (Λ, …, Λ) − Mixⁿ(Λ) − φ_τ(Mixⁿ(s))`.
pub fn r_eps_tau(r: &RMatrix, eps: &[i8], tau: &[usize]) -> Result<Tensor> {
    let n = eps.len();
    if tau.len() != n {
        return Err(ForgeError::InvalidArgument("ε and τ must have the same length".into()));
    }
    if n == 0 || eps.iter().any(|e| *e != 1 && *e != -1) {
        return Err(ForgeError::InvalidArgument(format!("invalid sign vector {eps:?}")));
    }
    let space = r.algebra().space();
    let sum = power_sum(space, n);
    let s = r.sym();
    let signed: Vec<Tensor> = eps.iter().map(|e| if *e == 1 { s.clone() } else { -s }).collect();
    let mut out = sum.assemble(&signed)?;
    out += &repeat_blocks(r.lambda(), n)?;
    out = &out - &mix_n(r.lambda(), n)?;
    out = &out - &mix_n(s, n)?.pushforward(&phi_tau(space, tau)?)?;
    Ok(out)
}

/// `φ_τ(Mixⁿ(s))` from the signed-block formula: `+(Mixⁿ(s))_{j,k}` when
/// `τ⁻¹(j) < τ⁻¹(k)`, `−` otherwise.
pub fn phi_tau_mix_formula(s: &Tensor, tau: &[usize]) -> Result<Tensor> {
    check_perm(tau)?;
    let n = tau.len();
    let mut inv = vec![0; n];
    for (a, &t) in tau.iter().enumerate() {
        inv[t] = a;
    }
    let mut out = Tensor::zero_on(power_sum(s.space(0), n).space(), 2);
    for j in 0..n {
        for k in j + 1..n {
            let b = super::rpower::mix_block(s, n, j, k)?;
            if inv[j] < inv[k] {
                out += &b;
            } else {
                out = &out - &b;
            }
        }
    }
    Ok(out)
}

/// `p_J: gⁿ → gᵏ` for increasing 0-based `J`.
pub fn p_j(g: &Space, n: usize, blocks: &[usize]) -> Result<LinearMap> {
    if blocks.is_empty() || blocks.windows(2).any(|w| w[0] >= w[1]) {
        return Err(ForgeError::InvalidArgument(format!("{blocks:?} is not increasing")));
    }
    let assign: Vec<(usize, usize)> = blocks.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    block_map(&power_sum(g, n), &power_sum(g, blocks.len()), &assign)
}

/// The sign vector `ε(i) = (−1)^{j_i − 1}` (1-based `j_i`) of `p_J(r⁽ⁿ⁾)`.
pub fn projection_signs(blocks: &[usize]) -> Vec<i8> {
    blocks.iter().map(|b| if b % 2 == 0 { 1 } else { -1 }).collect()
}

/// `p_{2n}: dⁿ → g^{2n}`, `(a_j) ↦ (p₊a_1, …, p₊a_n, p₋a_n, …, p₋a_1)`.
pub fn p_2n(dbl: &DoubleAlgebra, r: &RMatrix, n: usize) -> Result<LinearMap> {
    let (pp, pm) = p_plus_minus(dbl, r)?;
    let d = dbl.sum().space();
    let src = power_sum(d, n);
    let dst = power_sum(r.algebra().space(), 2 * n);
    let mut out = LinearMap::zero(src.space(), dst.space());
    for j in 0..n {
        let proj = src.projection(j)?;
        out = out.add(&dst.inclusion(j)?.compose(&pp)?.compose(&proj)?)?;
        out = out.add(&dst.inclusion(2 * n - 1 - j)?.compose(&pm)?.compose(&proj)?)?;
    }
    Ok(out)
}

/// `p_{2n}(r_d⁽ⁿ⁾) − r⁽²ⁿ⁾`.
pub fn p_2n_defect(dbl: &DoubleAlgebra, r: &RMatrix, n: usize) -> Result<Tensor> {
    let rd = r_power(dbl.r_d(), n)?;
    let image = rd.tensor().pushforward(&p_2n(dbl, r, n)?)?;
    Ok(&image - r_power(r, 2 * n)?.tensor())
}

/// `J_N: g₍N₎ → g^N` built from `p±`.
pub fn j_map(pu: &PolyubleSplitting, r: &RMatrix) -> Result<LinearMap> {
    let dbl = pu.dbl();
    let (pp, pm) = p_plus_minus(dbl, r)?;
    let big = pu.n();
    let m = dbl.m();
    let dst = power_sum(r.algebra().space(), big);
    let total = dst.space().dim();
    let mut images = Vec::new();
    for (i, piece) in pu.pieces(Side::G).iter().enumerate() {
        match piece {
            Piece::Diag(_) => {
                for a in 0..2 * m {
                    let mut v = vec![zero(); total];
                    for (row, x) in pp.column(a) {
                        v[dst.offset(i) + row] += x;
                    }
                    for (row, x) in pm.column(a) {
                        v[dst.offset(big - 1 - i) + row] += x;
                    }
                    images.push(v);
                }
            }
            Piece::G(_) => {
                for a in 0..m {
                    images.push(linalg::unit(total, dst.offset(i) + a));
                }
            }
            Piece::Dual(_) => return Err(ForgeError::ConventionViolation("g(N) has no g* block".into())),
        }
    }
    let src = pu.algebra(Side::G)?;
    LinearMap::from_images(src.space().clone(), dst.space().clone(), &images)
}

/// Outcome of checking `J_N`.
#[derive(Clone, Debug)]
pub struct JMapReport {
    pub lie: Vec<Violation>,
    pub bialgebra: Vec<Violation>,
    pub invertible: bool,
    pub factorizable: bool,
}

pub fn verify_j_map(pu: &PolyubleSplitting, r: &RMatrix) -> Result<JMapReport> {
    let j = j_map(pu, r)?;
    let src = pu.cobracket(Side::G)?;
    let rn = r_power(r, pu.n())?;
    let dst = cobracket_from_r(rn.algebra(), rn.tensor())?;
    Ok(JMapReport {
        lie: src.algebra().hom_violations(rn.algebra(), &j),
        bialgebra: src.hom_violations(&dst, &j)?,
        invertible: j.is_invertible(),
        factorizable: r.is_factorizable(),
    })
}

/// `(diag)_n(Λ) − [(Λ, …, Λ) − Mixⁿ(Λ)]`.
pub fn diagonal_lambda_defect(r: &RMatrix, n: usize) -> Result<Tensor> {
    let lam = r.lambda();
    let lhs = lam.pushforward(&diag_n(r.algebra().space(), n)?)?;
    let rhs = &repeat_blocks(lam, n)? - &mix_n(lam, n)?;
    Ok(&lhs - &rhs)
}

/// CYB of a tensor on `gⁿ`.
pub fn cyb_on_power(r: &RMatrix, n: usize, t: &Tensor) -> Result<Tensor> {
    let (g, _) = power(r.algebra(), n)?;
    cyb(&g, t)
}
