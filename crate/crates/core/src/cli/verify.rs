//! The identity suites behind `forge verify`.
//!
//! Work is split into one task per suite and subject. Tasks run on a rayon
//! pool and their checks are concatenated in task order, so the report does
//! not depend on the thread count.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::manifest::{FieldKind, Model, NamedAction, NamedField};
use super::report::{Check, Recorder};
use crate::bialg::{
    check_twist, cobracket_from_r, cyb, f_pm_pairing, f_pm_pairing_alt, is_ad_invariant, r_from_f_pm, twist_cobracket,
    twist_cobracket_alt, Cobracket, DualPair, RMatrix, TwistElement,
};
use crate::double::{build_double, drinfeld_criterion, k_r_subspace, p_plus_minus, q_map, verify_manin, DoubleAlgebra};
use crate::error::{ForgeError, Result};
use crate::fixtures::stabilizer_at;
use crate::liealg::{is_coisotropic, schouten, LieAlgebra, Violation};
use crate::polyfield::{
    apply_action, d_prime_violations, direct_product, fusion, fusion_pair_via_f_pm, fusion_square, fusion_tau, is_poisson,
    mixed_2_hat_violations, mixed_product_2, mixed_product_double, mixed_product_n, mixed_term, mixed_term_in_basis,
    poisson_action_violations, product_action, quasi_correspond, quasi_inverse, quasi_violations, restrict_action,
    symmetric_image_vanishes, twist_space, Chart, LieAction, PoissonSpace,
};
use crate::polyuble::{
    alt_n, build_polyuble, cyb_on_power, diag_n, diagonal_lambda_defect, dual_bracket_rn, embedding_violations, mix_n,
    mixed_model, p_2n_defect, p_j, phi_mk_violations, phi_tau, phi_tau_mix_formula, power_sum, projection_signs,
    r_angle, r_eps_tau, r_power, step_by_step_defect, t_element, verify_j_map, Side,
};
use crate::tensorspace::{half, int, linalg, permutations, q, LinearMap, Scalar, Tensor};

pub const SUITES: [&str; 9] = ["jacobi", "cocycle", "cybe", "double", "polyuble", "rn", "twist", "fields", "fusion"];

/// Seed for the sampled twisting-element candidates.
const TWIST_SEED: u64 = 0x5eed;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Profile {
    Small,
    Full,
}

impl std::str::FromStr for Profile {
    type Err = ForgeError;

    fn from_str(s: &str) -> Result<Profile> {
        match s {
            "small" => Ok(Profile::Small),
            "full" => Ok(Profile::Full),
            _ => Err(ForgeError::InvalidArgument(format!("unknown profile {s:?}; expected small or full"))),
        }
    }
}

impl Profile {
    pub fn name(self) -> &'static str {
        match self {
            Profile::Small => "small",
            Profile::Full => "full",
        }
    }

    fn limits(self) -> Limits {
        match self {
            Profile::Full => Limits { rn: 4, rn_large: 3, perms: 3, zeta: 3, rd: 3, uble: 3, sizes: 4, twists: 200, fields: 3, diag: 4 },
            Profile::Small => Limits { rn: 3, rn_large: 2, perms: 2, zeta: 2, rd: 2, uble: 2, sizes: 3, twists: 100, fields: 2, diag: 3 },
        }
    }
}

/// Largest `n` tried by each family of checks.
#[derive(Clone, Copy, Debug)]
struct Limits {
    /// `r⁽ⁿ⁾` for algebras of dimension at most 3.
    rn: usize,
    /// `r⁽ⁿ⁾` for larger algebras.
    rn_large: usize,
    /// Exhaustive sign and permutation sweeps.
    perms: usize,
    zeta: usize,
    rd: usize,
    uble: usize,
    /// Mixed-twist models `g₍ₖ₎`, `g₍ₖ₎*` for `1 ≤ k ≤ sizes`.
    sizes: usize,
    twists: usize,
    fields: usize,
    diag: usize,
}

impl Limits {
    fn rn_max(&self, dim: usize) -> usize {
        if dim <= 3 {
            self.rn
        } else {
            self.rn_large
        }
    }
}

/// Suites to run: the requested ones, else the manifest's `checks`, else all.
pub fn select_suites(requested: &[String], model: &Model) -> Result<Vec<&'static str>> {
    let names: &[String] = if requested.is_empty() { &model.checks } else { requested };
    if names.is_empty() || names.iter().any(|s| s == "all") {
        return Ok(SUITES.to_vec());
    }
    let mut out = Vec::new();
    for n in names {
        let suite = SUITES
            .iter()
            .find(|s| *s == n)
            .ok_or_else(|| ForgeError::InvalidArgument(format!("unknown suite {n:?}; expected one of {} or all", SUITES.join(", "))))?;
        if !out.contains(suite) {
            out.push(*suite);
        }
    }
    Ok(out)
}

/// A Lie bialgebra taken from the manifest: `δ_r` for an r-matrix, or an
/// explicit cobracket that matches no `δ_r` on the same algebra.
struct Subject<'a> {
    name: String,
    algebra: &'a str,
    cb: Cobracket,
    r: Option<&'a RMatrix>,
}

fn subjects(model: &Model) -> Result<Vec<Subject<'_>>> {
    let mut out = Vec::new();
    for r in &model.rmatrices {
        match cobracket_from_r(r.r.algebra(), r.r.tensor()) {
            Ok(cb) => out.push(Subject { name: r.name.clone(), algebra: &r.algebra, cb, r: Some(&r.r) }),
            Err(ForgeError::NotCoboundarySkew(_)) => {}
            Err(e) => return Err(e),
        }
    }
    for c in &model.cobrackets {
        if !out.iter().any(|s| s.r.is_some() && s.algebra == c.algebra && s.cb == c.cobracket) {
            out.push(Subject { name: c.name.clone(), algebra: &c.algebra, cb: c.cobracket.clone(), r: None });
        }
    }
    Ok(out)
}

type Task<'a> = Box<dyn Fn() -> Vec<Check> + Send + Sync + 'a>;

fn task<'a>(suite: &'static str, subject: String, anchor: &'static str, body: impl Fn(&mut Recorder) -> Result<()> + Send + Sync + 'a) -> Task<'a> {
    Box::new(move || {
        let mut rec = Recorder::new(suite, &subject);
        if let Err(e) = body(&mut rec) {
            rec.record(anchor, "evaluation", false, format!("error: {e}"));
        }
        rec.finish()
    })
}

/// Runs the selected suites on the current rayon pool.
pub fn verify_model(model: &Model, suites: &[&'static str], profile: Profile) -> Result<Vec<Check>> {
    let lim = profile.limits();
    let subs = subjects(model)?;
    let mut tasks: Vec<Task<'_>> = Vec::new();
    for &suite in suites {
        match suite {
            "jacobi" => {
                for a in &model.algebras {
                    tasks.push(task(suite, a.name.clone(), "subsec-Lie-bialgebras", move |rec| jacobi_suite(rec, &a.algebra)));
                }
            }
            "cocycle" => {
                for r in &model.rmatrices {
                    tasks.push(task(suite, r.name.clone(), "subsec-Lie-bialgebras", move |rec| {
                        let cb = cobracket_from_r(r.r.algebra(), r.r.tensor())?;
                        cocycle_suite(rec, &cb, Some(&r.r))
                    }));
                }
                for c in &model.cobrackets {
                    tasks.push(task(suite, c.name.clone(), "subsec-Lie-bialgebras", move |rec| cocycle_suite(rec, &c.cobracket, None)));
                }
            }
            "cybe" => {
                for r in &model.rmatrices {
                    tasks.push(task(suite, r.name.clone(), "subsec-r-matrices", move |rec| cybe_suite(rec, &r.r, lim)));
                }
            }
            "double" => {
                for s in &subs {
                    tasks.push(task(suite, s.name.clone(), "subsec-double", move |rec| double_suite(rec, s)));
                }
            }
            "polyuble" => {
                for s in &subs {
                    tasks.push(task(suite, s.name.clone(), "subsec-polyuble", move |rec| polyuble_suite(rec, s, lim)));
                }
            }
            "rn" => {
                for s in subs.iter().filter(|s| s.r.is_some()) {
                    tasks.push(task(suite, s.name.clone(), "subsec-mixed-powers", move |rec| rn_suite(rec, s, lim)));
                }
            }
            "twist" => {
                for s in &subs {
                    let actions: Vec<&NamedAction> = model.actions.iter().filter(|a| s.r.is_some() && a.rmatrix.as_deref() == Some(s.name.as_str())).collect();
                    tasks.push(task(suite, s.name.clone(), "subsec-twists", move |rec| twist_suite(rec, s, &actions, lim)));
                }
            }
            "fields" => {
                for a in &model.actions {
                    let Some(rname) = &a.rmatrix else { continue };
                    let Some(r) = model.rmatrix(rname) else { continue };
                    tasks.push(task(suite, a.name.clone(), "subsec-Poi-r-mixed", move |rec| fields_suite(rec, &a.action, &r.r, lim)));
                }
                for f in &model.fields {
                    for a in model.actions.iter().filter(|a| a.action.chart() == f.field.chart()) {
                        let cbs: Vec<&Subject<'_>> = subs.iter().filter(|s| s.algebra == a.algebra).collect();
                        let rs: Vec<&RMatrix> = model.rmatrices.iter().filter(|r| r.algebra == a.algebra).map(|r| &r.r).collect();
                        let subject = format!("{} on {}", f.name, a.name);
                        tasks.push(task(suite, subject, "de-Poisson-space", move |rec| field_suite(rec, f, &a.action, &cbs, &rs)));
                    }
                }
            }
            "fusion" => {
                for s in subs.iter().filter(|s| s.r.is_some()) {
                    tasks.push(task(suite, s.name.clone(), "subsec-mixed-fusion", move |rec| diagonal_suite(rec, s, lim)));
                }
                for a in &model.actions {
                    let Some(rname) = &a.rmatrix else { continue };
                    let Some(r) = model.rmatrix(rname) else { continue };
                    tasks.push(task(suite, a.name.clone(), "subsec-mixed-fusion", move |rec| fusion_suite(rec, &a.action, &r.r, lim)));
                }
            }
            other => return Err(ForgeError::InvalidArgument(format!("unknown suite {other:?}"))),
        }
    }
    let results: Vec<Vec<Check>> = tasks.par_iter().map(|t| t()).collect();
    Ok(results.into_iter().flatten().collect())
}

fn flag(found: &[Violation], what: impl FnOnce() -> Vec<String>) -> Vec<Violation> {
    if found.is_empty() {
        Vec::new()
    } else {
        vec![Violation(what())]
    }
}

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    linalg::unit(n, i)
}

/// Why a subject cannot enter the derived suites, if it cannot.
fn prerequisite(g: &LieAlgebra, cb: &Cobracket, r: Option<&RMatrix>) -> Option<String> {
    if !g.check_antisymmetry().is_empty() || !g.check_jacobi().is_empty() {
        return Some(format!("{} is not a Lie algebra", g.space().name()));
    }
    if !cb.cocycle_violations().is_empty() || !cb.dual_jacobi_violations().is_empty() {
        return Some("the cobracket is not a Lie bialgebra structure".into());
    }
    if let Some(r) = r {
        if !r.is_quasitriangular() {
            return Some("r is not quasitriangular".into());
        }
    }
    None
}

/// Records a failing prerequisite line and returns `false` when the
/// subject is not usable.
fn admit(rec: &mut Recorder, anchor: &str, g: &LieAlgebra, cb: &Cobracket, r: Option<&RMatrix>) -> bool {
    match prerequisite(g, cb, r) {
        None => true,
        Some(why) => {
            rec.record(anchor, "prerequisite", false, why);
            false
        }
    }
}

fn jacobi_suite(rec: &mut Recorder, g: &LieAlgebra) -> Result<()> {
    rec.violations("subsec-Lie-bialgebras", "[x, y] = -[y, x]", Ok(g.check_antisymmetry()));
    rec.violations("subsec-Lie-bialgebras", "Jacobi identity", Ok(g.check_jacobi()));
    if g.form().is_some() {
        rec.violations("de-lag-splitting", "<[x, y], z> = <x, [y, z]>", Ok(g.check_form()));
    }
    Ok(())
}

/// `(ad_x ⊗ 1 + 1 ⊗ ad_x)(r)` from the structure constants.
fn ad_on_r(g: &LieAlgebra, i: usize, r: &Tensor) -> Tensor {
    let mut out = Tensor::zero_on(g.space(), 2);
    for (idx, c) in r.entries() {
        for (k, x) in g.bracket_basis(i, idx[0]) {
            out.add_entry(vec![*k, idx[1]], c * x);
        }
        for (k, x) in g.bracket_basis(i, idx[1]) {
            out.add_entry(vec![idx[0], *k], c * x);
        }
    }
    out
}

fn cocycle_suite(rec: &mut Recorder, cb: &Cobracket, r: Option<&RMatrix>) -> Result<()> {
    let g = cb.algebra();
    let skew: Vec<Violation> = (0..g.dim()).filter(|&i| !cb.value(i).is_skew()).map(|i| Violation(vec![g.label(i)])).collect();
    rec.violations("eq-cocycle-def", "delta(x) lies in the wedge square", Ok(skew));
    rec.violations("eq-cocycle-def", "delta[x, y] = ad_x delta(y) - ad_y delta(x)", Ok(cb.cocycle_violations()));
    rec.violations("subsec-Lie-bialgebras", "dual bracket satisfies Jacobi", Ok(cb.dual_jacobi_violations()));
    if let Some(r) = r {
        let bad = (0..g.dim()).filter(|&i| &ad_on_r(g, i, r.tensor()) != cb.value(i)).map(|i| Violation(vec![g.label(i)])).collect();
        rec.violations("eq-delta-r", "delta_r(x) = (ad_x (x) 1 + 1 (x) ad_x)(r)", Ok(bad));
    }
    Ok(())
}

fn cybe_suite(rec: &mut Recorder, r: &RMatrix, lim: Limits) -> Result<()> {
    let g = r.algebra();
    rec.holds("eq-CYB-s", "s is ad-invariant", is_ad_invariant(g, r.sym()));
    rec.vanishes("eq-CYB-r", "CYB(r) = 0", Ok(r.cyb()));
    rec.vanishes("eq-CYB-Lam-s", "CYB(r) = 1/2 [Lam, Lam] + CYB(s)", r.cyb_split_defect());
    let lam = r.lambda();
    rec.vanishes("eq-CYB-Lam", "CYB(Lam) = 1/2 [Lam, Lam]", schouten(g, lam, lam).and_then(|ll| Ok(&cyb(g, lam)? - &ll.scale(&half()))));
    let cb = cobracket_from_r(g, r.tensor())?;
    if !admit(rec, "subsec-r-matrices", g, &cb, Some(r)) {
        return Ok(());
    }
    for n in 2..=lim.rn_max(g.dim()) {
        let rn = r_power(r, n)?;
        rec.vanishes("th-uble-r", &format!("CYB(r^({n})) = 0"), rn.cyb());
        rec.holds("eq-r-n-def", &format!("symmetric part of r^({n}) is (s, -s, ...)"), Ok(rn.rmatrix()?.sym() == &rn.expected_sym()?));
        rec.violations("eq-Mix-r-sharp", &format!("Mix^{n}(r) sharp map, block by block"), rn.mix_sharp_violations());
    }
    let dbl = build_double(&cb)?;
    for n in 2..=lim.rd {
        rec.vanishes("re-rd-n", &format!("CYB(r_d^({n})) = 0"), r_power(dbl.r_d(), n)?.cyb());
    }
    Ok(())
}

fn double_suite(rec: &mut Recorder, s: &Subject<'_>) -> Result<()> {
    let g = s.cb.algebra();
    if !admit(rec, "subsec-double", g, &s.cb, s.r) {
        return Ok(());
    }
    let dbl = build_double(&s.cb)?;
    let d = dbl.total();
    rec.violations("eq-bra-d", "Jacobi identity on d = g + g*", Ok(d.check_jacobi()));
    rec.violations("eq-pairing-dd", "<, >_d is invariant", Ok(d.check_form()));
    rec.holds("de-lag-splitting", "d = g + g* is a Lagrangian splitting", Ok(verify_manin(d, &dbl.g_subspace(), &dbl.dual_subspace())));
    rec.violations("eq-delta-d-g-g", "delta_d restricts to delta_g and -delta_g*", dbl.restriction_violations());
    rec.holds("eq-Lambda-d", "Lam_(g,g*) is the skew part of r_d", Ok(dbl.lambda_matches()));
    rec.vanishes("eq-double-r", "CYB(r_d) = 0", Ok(dbl.r_d().cyb()));
    let Some(r) = s.r else { return Ok(()) };
    let (pp, pm) = p_plus_minus(&dbl, r)?;
    rec.violations("eq-ppm", "p+: (d, delta_d) -> (g, delta_r) is a Lie bialgebra map", dbl.cobracket().hom_violations(&s.cb, &pp));
    rec.violations("eq-ppm", "p-: (d, delta_d) -> (g, delta_r) is a Lie bialgebra map", dbl.cobracket().hom_violations(&s.cb, &pm));
    rec.holds("eq-r-ppm", "p+(r_d) = r", Ok(&dbl.r_d().tensor().pushforward(&pp)? == r.tensor()));
    rec.holds("eq-r-ppm", "p-(r_d) = -r21", Ok(dbl.r_d().tensor().pushforward(&pm)? == -&r.r21()));
    let (g_stable, ideal) = drinfeld_criterion(&dbl, r.tensor())?;
    rec.holds("le-drinfi-r-0", "[g, k_r] lies in k_r", Ok(g_stable));
    rec.holds("le-drinfi-r-0", "k_r is an ideal of d", Ok(ideal));
    rec.holds("eq-de-l-pm", "f+ and f- are subalgebras", Ok(g.is_subalgebra(r.f_plus()) && g.is_subalgebra(r.f_minus())));
    let pair = f_pm_pairing(r)?;
    rec.holds("le-lpm-dual", "(f-, delta_r) and (f+, -delta_r) form a dual pair", pair.is_dual());
    rec.holds("eq-pairing-ll", "pairing of f- and f+ from r+ and from r-", Ok(f_pm_pairing_alt(r)? == pair.pairing));
    rec.holds("re-r-fpm", "r = sum x_i (x) r+(xi_i) over a basis of f-", Ok(&r_from_f_pm(r, &pair)? == r.tensor()));
    let (dq, qm) = q_map(r, &pair)?;
    rec.violations("eq-q", "q: d_(f-) -> g is a Lie algebra map", Ok(dq.total().hom_violations(g, &qm)));
    rec.holds("le-rr-quasi", "q(r_(d_(f-))) = r", Ok(&dq.r_d().tensor().pushforward(&qm)? == r.tensor()));
    Ok(())
}

fn polyuble_suite(rec: &mut Recorder, s: &Subject<'_>, lim: Limits) -> Result<()> {
    if !admit(rec, "subsec-polyuble", s.cb.algebra(), &s.cb, s.r) {
        return Ok(());
    }
    let dbl = build_double(&s.cb)?;
    for n in 2..=lim.uble {
        let pu = build_polyuble(&dbl, n)?;
        rec.holds("eq-n-splitting", &format!("d^{n} = g({n}) + g({n})* is a Lagrangian splitting"), Ok(verify_manin(pu.ambient(), pu.g_n(), pu.g_n_star())));
        if let Some(r) = s.r {
            let rep = verify_j_map(&pu, r)?;
            let anchor = if n % 2 == 0 { "le-dn-g2n" } else { "le-dn-g2n-1" };
            let mut found = rep.lie.clone();
            found.extend(rep.bialgebra.iter().cloned());
            rec.violations(anchor, &format!("J_{n}: g({n}) -> (g^{n}, r^({n})) is a Lie bialgebra map"), Ok(found));
            let kind = if rep.factorizable { "factorizable" } else { "not factorizable" };
            let inv = if rep.invertible { "invertible" } else { "not invertible" };
            let detail = format!("r {kind}, J_{n} {inv}");
            rec.holds_with("pr-uble-mixed-power", &format!("J_{n} is invertible iff r is factorizable"), Ok((rep.invertible == rep.factorizable, detail)));
        }
    }
    if let Some(r) = s.r {
        for n in 1..=lim.uble.min(2) {
            rec.vanishes("le-dn-g2n", &format!("p_{}(r_d^({n})) = r^({})", 2 * n, 2 * n), p_2n_defect(&dbl, r, n));
        }
    }
    for size in 1..=lim.sizes {
        if size % 2 == 1 {
            let model = mixed_model(&dbl, Side::G, size)?;
            rec.violations("le-uble-mixed-1", &format!("g({size}) embeds in g({}) as a Lie bialgebra", size + 1), embedding_violations(&dbl, &model));
        }
        let model = mixed_model(&dbl, Side::Dual, size)?;
        let even = 2 * model.factors.len();
        rec.violations("le-uble-mixed-2", &format!("g({size})* embeds in g({even}) as a Lie bialgebra"), embedding_violations(&dbl, &model));
    }
    Ok(())
}

fn blocks(v: &[Scalar], m: usize) -> Vec<Vec<Scalar>> {
    v.chunks(m).map(<[Scalar]>::to_vec).collect()
}

fn rn_suite(rec: &mut Recorder, s: &Subject<'_>, lim: Limits) -> Result<()> {
    let r = s.r.expect("rn subjects carry an r-matrix");
    let g = r.algebra();
    if !admit(rec, "subsec-mixed-powers", g, &s.cb, Some(r)) {
        return Ok(());
    }
    let m = g.dim();
    let top = lim.rn_max(m);
    for n in 2..=lim.zeta.min(top) {
        let rn = r_power(r, n)?;
        let dual = cobracket_from_r(rn.algebra(), rn.tensor())?.dual()?;
        let da = dual.algebra();
        let mut bad = Vec::new();
        for a in 0..m * n {
            for b in a + 1..m * n {
                let (ua, ub) = (unit(m * n, a), unit(m * n, b));
                let z = dual_bracket_rn(r, &blocks(&ua, m), &blocks(&ub, m))?.concat();
                if z != da.bracket_coords(&ua, &ub) {
                    bad.push(Violation(vec![da.label(a), da.label(b)]));
                }
            }
        }
        rec.violations("eq-zetaj", &format!("bracket on (g*)^{n} dual to delta_r^({n}) is the blockwise formula"), Ok(bad));
    }
    {
        let r2 = r_power(r, 2)?.rmatrix()?;
        let (mut plus, mut minus) = (Vec::new(), Vec::new());
        for i in 0..2 * m {
            let xi = blocks(&unit(2 * m, i), m);
            let sum: Vec<Scalar> = xi[0].iter().zip(&xi[1]).map(|(a, b)| a + b).collect();
            let want_plus = [r.r_plus().apply_coords(&sum), r.r_minus().apply_coords(&sum)].concat();
            let mixed: Vec<Scalar> = r.r_minus().apply_coords(&xi[0]).iter().zip(r.r_plus().apply_coords(&xi[1])).map(|(a, b)| a + b).collect();
            let want_minus = [mixed.clone(), mixed].concat();
            if r2.r_plus().image_of(i) != want_plus {
                plus.push(Violation(vec![r2.algebra().label(i) + "*"]));
            }
            if r2.r_minus().image_of(i) != want_minus {
                minus.push(Violation(vec![r2.algebra().label(i) + "*"]));
            }
        }
        rec.violations("eq-r-2-p", "(r^(2))+(xi1, xi2) = (r+(xi1 + xi2), r-(xi1 + xi2))", Ok(plus));
        rec.violations("eq-r-2-m", "(r^(2))-(xi1, xi2) = (r-(xi1) + r+(xi2), r-(xi1) + r+(xi2))", Ok(minus));
    }
    let space = g.space();
    for n in 2..=top {
        let rn = r_power(r, n)?;
        let mut bad = Vec::new();
        for mm in 1..=n {
            for k in 1..=mm {
                bad.extend(flag(&phi_mk_violations(r, mm, k, n)?, || vec![format!("m={mm}"), format!("k={k}")]));
            }
        }
        rec.violations("eq-phi-mk", &format!("phi_(m,k): (g^m, r^(m)) -> (g^{n}, r^({n})) are Lie bialgebra maps"), Ok(bad));

        let alternating = projection_signs(&(0..n).collect::<Vec<_>>());
        let id: Vec<usize> = (0..n).collect();
        rec.holds("eq-r-ep-tau-n", &format!("r^(eps,id,{n}) = r^({n}) for alternating eps"), Ok(&r_eps_tau(r, &alternating, &id)? == rn.tensor()));

        let mix_lam = mix_n(r.lambda(), n)?;
        let mix_s = mix_n(r.sym(), n)?;
        let (mut moved, mut fixed, mut formula) = (Vec::new(), Vec::new(), Vec::new());
        for (tau, _) in permutations(n) {
            let phi = phi_tau(space, &tau)?;
            let mut eps = vec![1i8; n];
            for (a, &t) in tau.iter().enumerate() {
                eps[t] = alternating[a];
            }
            let tag = || vec![format!("tau={tau:?}")];
            if rn.tensor().pushforward(&phi)? != r_eps_tau(r, &eps, &tau)? {
                moved.push(Violation(tag()));
            }
            if mix_lam.pushforward(&phi)? != mix_lam {
                fixed.push(Violation(tag()));
            }
            if phi_tau_mix_formula(r.sym(), &tau)? != mix_s.pushforward(&phi)? {
                formula.push(Violation(tag()));
            }
        }
        rec.violations("re-tau-r", &format!("phi_tau(r^({n})) = r^(eps,tau,{n}) for every tau"), Ok(moved));
        rec.violations("re-tau-r", &format!("phi_tau fixes Mix^{n}(Lam)"), Ok(fixed));
        rec.violations("re-tau-r", &format!("phi_tau(Mix^{n}(s)) by the signed-block formula"), Ok(formula));

        let mut proj = Vec::new();
        for mask in 1u32..(1 << n) {
            let j: Vec<usize> = (0..n).filter(|b| mask & (1 << b) != 0).collect();
            let ident: Vec<usize> = (0..j.len()).collect();
            if rn.tensor().pushforward(&p_j(space, n, &j)?)? != r_eps_tau(r, &projection_signs(&j), &ident)? {
                proj.push(Violation(vec![format!("J={j:?}")]));
            }
        }
        rec.violations("eq-p-sJ", &format!("p_J(r^({n})) = r^(eps,e,|J|) for every J"), Ok(proj));

        let mut steps = Vec::new();
        for j in 1..n {
            if !step_by_step_defect(r, n, j)?.is_zero() {
                steps.push(Violation(vec![format!("j={j}")]));
            }
        }
        rec.violations("re-step-by-step", &format!("Mix^{n}(r) splits at every j"), Ok(steps));

        if n < top {
            rec.vanishes("eq-r-modify", &format!("CYB(r<{}>) = 0", n + 1), cyb_on_power(r, n + 1, &r_angle(r, n + 1)?));
        }
    }
    for n in 2..=lim.perms.min(top) {
        let (gn, _) = crate::polyuble::power(g, n)?;
        let mut bad = Vec::new();
        for mask in 0u32..(1 << n) {
            let eps: Vec<i8> = (0..n).map(|b| if mask & (1 << b) != 0 { -1 } else { 1 }).collect();
            for (tau, _) in permutations(n) {
                if !RMatrix::new(&gn, r_eps_tau(r, &eps, &tau)?)?.is_quasitriangular() {
                    bad.push(Violation(vec![format!("eps={eps:?}"), format!("tau={tau:?}")]));
                }
            }
        }
        rec.violations("eq-r-ep-tau-n", &format!("r^(eps,tau,{n}) is quasitriangular for all eps, tau"), Ok(bad));
    }
    Ok(())
}

/// A random `t ∈ ∧²g` with one to three basis wedges and coefficients in
/// `{±1/2, ±1, ±3/2, ±2}`.
fn random_wedge(rng: &mut ChaCha8Rng, g: &LieAlgebra) -> Tensor {
    let m = g.dim();
    let mut t = Tensor::zero_on(g.space(), 2);
    let terms = rng.gen_range(1..=3);
    for _ in 0..terms {
        let i = rng.gen_range(0..m);
        let mut j = rng.gen_range(0..m - 1);
        if j >= i {
            j += 1;
        }
        let num = [-2, -1, 1, 2][rng.gen_range(0..4)];
        let c = q(num, rng.gen_range(1..=2));
        t.add_entry(vec![i, j], c.clone());
        t.add_entry(vec![j, i], -c);
    }
    t
}

fn twist_suite(rec: &mut Recorder, s: &Subject<'_>, actions: &[&NamedAction], lim: Limits) -> Result<()> {
    let g = s.cb.algebra();
    if !admit(rec, "subsec-twists", g, &s.cb, s.r) {
        return Ok(());
    }
    let dbl = build_double(&s.cb)?;
    for n in 2..=lim.uble {
        let pu = build_polyuble(&dbl, n)?;
        let want = &alt_n(dbl.r_d().tensor(), n)? - &t_element(&dbl, n)?;
        rec.holds("le-double-uble-r", &format!("r on d^{n} = Alt^{n}(r_d) - t_{n}"), Ok(pu.r_ambient()? == want));
    }
    for size in 1..=lim.sizes {
        let pu = build_polyuble(&dbl, size)?;
        for side in [Side::G, Side::Dual] {
            let model = mixed_model(&dbl, side, size)?;
            let name = match side {
                Side::G => format!("g({size})"),
                Side::Dual => format!("g({size})*"),
            };
            rec.holds("eq-t-n", &format!("t is a mixed twisting element for {name}"), model.is_mixed_twist());
            rec.violations("eq-iden-ggg", &format!("{name} is the twisted direct product"), model.compare(&pu));
        }
    }
    let Some(r) = s.r else { return Ok(()) };
    twist_candidates(rec, s, r, &dbl, actions, lim)
}

fn twist_candidates(rec: &mut Recorder, s: &Subject<'_>, r: &RMatrix, dbl: &DoubleAlgebra, actions: &[&NamedAction], lim: Limits) -> Result<()> {
    let g = r.algebra();
    let cb = &s.cb;
    let mut candidates = vec![Tensor::zero_on(g.space(), 2), r.lambda().scale(&int(2))];
    if g.dim() >= 2 {
        let mut rng = ChaCha8Rng::seed_from_u64(TWIST_SEED);
        while candidates.len() < lim.twists {
            candidates.push(random_wedge(&mut rng, g));
        }
    }
    let total = candidates.len();
    let (mut bad_r, mut bad_k) = (Vec::new(), Vec::new());
    let mut found = Vec::new();
    for (c, t) in candidates.into_iter().enumerate() {
        let twisting = check_twist(cb, &t)?;
        let shifted = RMatrix::new(g, r.tensor() - &t)?;
        if twisting != shifted.is_quasitriangular() {
            bad_r.push(Violation(vec![format!("candidate {c}")]));
        }
        if twisting != dbl.total().is_subalgebra(&k_r_subspace(dbl, &t)?) {
            bad_k.push(Violation(vec![format!("candidate {c}")]));
        }
        if twisting {
            found.push(t);
        }
    }
    let summary = format!("{} of {total} seeded candidates are twisting", found.len());
    let outcome = |bad: &[Violation]| if bad.is_empty() { (true, summary.clone()) } else { (false, format!("{summary}; fails at {}", bad[0])) };
    rec.holds_with("le-t-r", "t is twisting iff r - t is quasitriangular", Ok(outcome(&bad_r)));
    rec.holds_with("eq-delta-12-C", "k_t is a subalgebra iff delta(t) + 1/2 [t, t] = 0", Ok(outcome(&bad_k)));
    let mut bad = Vec::new();
    let mut twists = Vec::new();
    for (c, t) in found.iter().enumerate() {
        let te = TwistElement::new(cb, t.clone())?;
        let tw = twist_cobracket(&te)?;
        if tw != twist_cobracket_alt(cb, t)? || tw != cobracket_from_r(g, &(r.tensor() - t))? {
            bad.push(Violation(vec![format!("twist {c}")]));
        }
        twists.push(te);
    }
    rec.violations("eq-g1g1", "delta + [t, x] = delta - [x, t] = delta_(r - t) for every twist found", Ok(bad));
    for a in actions {
        let base = PoissonSpace::new(apply_action(&a.action, r.tensor())?.neg(), a.action.clone())?;
        let mut bad = Vec::new();
        for (c, te) in twists.iter().enumerate() {
            let shifted = apply_action(&a.action, &(r.tensor() - te.tensor()))?.neg();
            match twist_space(&base, te) {
                Ok(pi) if pi == shifted => {}
                _ => bad.push(Violation(vec![format!("twist {c}")])),
            }
        }
        rec.violations("le-twisting", &format!("pi + lambda(t) on {} is a Poisson space of the twist", a.name), Ok(bad));
    }
    Ok(())
}

fn renamed_copy(act: &LieAction, j: usize) -> Result<LieAction> {
    let vars = act.chart().vars().iter().map(|v| format!("{v}{j}")).collect();
    act.rename(&Chart::new(vars)?)
}

/// `(Y_j, −λ_j(r), λ_j)` on the `j`-th renamed copy of the chart.
fn factor_space(act: &LieAction, r: &RMatrix, j: usize) -> Result<PoissonSpace> {
    let a = renamed_copy(act, j)?;
    PoissonSpace::new(apply_action(&a, r.tensor())?.neg(), a)
}

/// `d` acting on copies `2j−1`, `2j` through `(p₊, p₋)`.
fn double_space(act: &LieAction, r: &RMatrix, dbl: &DoubleAlgebra, h: &LinearMap, j: usize) -> Result<PoissonSpace> {
    let a = renamed_copy(act, 2 * j - 1)?;
    let b = renamed_copy(act, 2 * j)?;
    let (prod, _) = product_action(&[&a, &b])?;
    let sigma = prod.compose(dbl.total(), h)?;
    let _ = r;
    PoissonSpace::new(apply_action(&sigma, dbl.r_d().tensor())?.neg(), sigma)
}

/// Rational sample points for stabilizer checks.
fn sample_points(dim: usize) -> Vec<Vec<Scalar>> {
    [int(0), int(1), q(-3, 2), int(2)].iter().map(|c| (0..dim).map(|v| c + int(v as i64)).collect()).collect()
}

/// A bivector field from the manifest on the chart of `act`, checked
/// against every Lie bialgebra structure on the acting algebra.
fn field_suite(rec: &mut Recorder, f: &NamedField, act: &LieAction, cbs: &[&Subject<'_>], rs: &[&RMatrix]) -> Result<()> {
    if f.field.degree() != 2 {
        rec.record("de-Poisson-space", "prerequisite", false, format!("{} has degree {}, not 2", f.name, f.field.degree()));
        return Ok(());
    }
    match f.kind {
        FieldKind::Poisson => {
            rec.holds("de-Poisson-space", "[pi, pi] = 0", is_poisson(&f.field));
            for s in cbs {
                rec.violations("de-Poisson-space", &format!("[lambda(x), pi] = lambda(delta(x)) for {}", s.name), poisson_action_violations(act, &f.field, &s.cb));
            }
        }
        FieldKind::QuasiPoisson => {
            for r in rs {
                rec.violations("le-quasi-twisting", "[Q, Q] = lambda(phi_s) and Q is g-invariant", quasi_violations(&f.field, act, r));
            }
        }
    }
    Ok(())
}

fn fields_suite(rec: &mut Recorder, act: &LieAction, r: &RMatrix, lim: Limits) -> Result<()> {
    let g = r.algebra();
    let cb = cobracket_from_r(g, r.tensor())?;
    rec.violations("de-Poisson-space", "lambda is a left Lie algebra action", act.action_violations());
    if !admit(rec, "subsec-Poi-r-mixed", g, &cb, Some(r)) {
        return Ok(());
    }
    rec.holds("le-admi-r-equi", "lambda(s) = 0", symmetric_image_vanishes(act, r.sym()));
    let mut coiso = true;
    for p in sample_points(act.chart().dim()) {
        coiso &= is_coisotropic(&stabilizer_at(act, &p), r.sym())?;
    }
    rec.holds("le-admi-r-equi", "stabilizers at sample points are coisotropic for s", Ok(coiso));
    let base = apply_action(act, r.tensor())?.neg();
    rec.holds("pr-admi-Poi-r", "[-lambda(r), -lambda(r)] = 0", is_poisson(&base));
    rec.violations("de-Poisson-space", "(Y, -lambda(r), lambda) is a (g, delta_r)-Poisson space", poisson_action_violations(act, &base, &cb));
    for n in 2..=lim.fields {
        let spaces = (1..=n).map(|j| factor_space(act, r, j)).collect::<Result<Vec<_>>>()?;
        let mp = mixed_product_n(&spaces, r)?;
        let rn = r_power(r, n)?;
        let pin = apply_action(&mp.action, rn.tensor())?.neg();
        rec.holds("th-piY-Mix-r", &format!("(pi_1, ..., pi_{n}) + lambda(Mix^{n}(r)) = -lambda(r^({n}))"), Ok(mp.pi == pin));
        rec.violations("th-piY-Mix-r", &format!("Y^{n} is a (g^{n}, r^({n}))-Poisson space"), poisson_action_violations(&mp.action, &mp.pi, &rn.rmatrix()?.cobracket()?));
        let diag = mp.action.compose(g, &diag_n(g.space(), n)?)?;
        rec.violations("th-piY-Mix-r", &format!("Y^{n} with the diagonal action is a (g, r)-Poisson space"), poisson_action_violations(&diag, &mp.pi, &cb));
        rec.holds("pr-mixed-is-poisson", &format!("[pi, pi] = 0 on Y^{n}"), is_poisson(&mp.pi));
        let mut proj = Vec::new();
        for (j, sp) in spaces.iter().enumerate() {
            if mp.pi.project(sp.chart())? != sp.pi {
                proj.push(Violation(vec![format!("factor {}", j + 1)]));
            }
        }
        rec.violations("de-mixed-general", &format!("pi on Y^{n} projects to each pi_j"), Ok(proj));
        let mut pairs = Vec::new();
        for j in 0..n {
            for k in j + 1..n {
                let chart = Chart::product(&[spaces[j].chart(), spaces[k].chart()])?;
                if mp.pi.project(&chart)? != fusion_pair_via_f_pm(&spaces[j], &spaces[k], r)? {
                    pairs.push(Violation(vec![format!("({}, {})", j + 1, k + 1)]));
                }
            }
        }
        rec.violations("re-step-by-step", &format!("pi on Y^{n} projects to the (f+, f-) mixed product on each pair"), Ok(pairs));
        double_form(rec, act, r, &cb, n)?;
    }
    Ok(())
}

/// The double-based description of the mixed product for `d`-spaces built
/// from pairs of copies, and the two-fold `(g*, g)` product for `n = 2`.
fn double_form(rec: &mut Recorder, act: &LieAction, r: &RMatrix, cb: &Cobracket, n: usize) -> Result<()> {
    let g = r.algebra();
    let dbl = build_double(cb)?;
    let (pp, pm) = p_plus_minus(&dbl, r)?;
    let two = power_sum(g.space(), 2);
    let h = two.inclusion(0)?.compose(&pp)?.add(&two.inclusion(1)?.compose(&pm)?)?;
    let dspaces = (1..=n).map(|j| double_space(act, r, &dbl, &h, j)).collect::<Result<Vec<_>>>()?;
    let via_d = mixed_product_double(&dspaces, &dbl)?;
    let via_r = mixed_product_n(&dspaces, dbl.r_d())?;
    rec.holds("eq-pi-n", &format!("(pi_j) - sum rho_j(xi_i) ^ lambda_k(x_i) = mixed product for (d, r_d), n = {n}"), Ok(via_d.pi == via_r.pi));
    let pu = build_polyuble(&dbl, n)?;
    let delta = cobracket_from_r(pu.ambient(), &pu.r_ambient()?)?;
    rec.violations("pr-n-mixed-product", &format!("(Y, pi_Y, sigma) is a Poisson space of the {n}-uble"), poisson_action_violations(&via_d.action, &via_d.pi, &delta));
    if n != 2 {
        return Ok(());
    }
    let pair = DualPair::of(cb)?;
    let m = dbl.m();
    let gstar: Vec<Vec<Scalar>> = (0..m).map(|i| unit(2 * m, m + i)).collect();
    let gb: Vec<Vec<Scalar>> = (0..m).map(|i| unit(2 * m, i)).collect();
    let rho = restrict_action(&dspaces[0].action, pair.b.algebra(), &gstar)?.negate();
    let lam = restrict_action(&dspaces[1].action, pair.a.algebra(), &gb)?;
    let x = PoissonSpace::new(dspaces[0].pi.clone(), rho)?;
    let y = PoissonSpace::new(dspaces[1].pi.clone(), lam)?;
    let pi2 = mixed_product_2(&x, &y, &pair)?;
    rec.holds("eq-pi-mixed-1", "pi_X x_(rho, lambda) pi_Y agrees with the double form", Ok(pi2 == via_d.pi));
    rec.violations("eq-pi-mixed-2", "pi(p_X* du, p_Y* dv) = -<rho^(du), lambda^(dv)>", mixed_2_hat_violations(&pi2, &x, &y, &pair));
    rec.violations("pr-mixed-is-poisson", "rho_0 is a right Poisson action of (d', delta_d')", d_prime_violations(&dbl, &pi2, &x, &y));
    let skewed: Vec<Vec<Scalar>> = (0..m).map(|i| (0..m).map(|k| if k == i { int(1) } else if k == i + 1 { int(i as i64 + 2) } else { int(0) }).collect()).collect();
    let chart = pi2.chart();
    rec.holds("re-mixed-term", "mixed term does not depend on the basis of g", Ok(mixed_term_in_basis(&x.action, &y.action, &skewed, chart)? == mixed_term(&x.action, &y.action, &pair, chart)?));
    let direct = direct_product(&[&x.pi, &y.pi])?;
    rec.holds("eq-pi-mixed-1", "pi_X x_(rho, lambda) pi_Y = (pi_X, pi_Y) - mixed term", Ok(pi2 == direct.sub(&mixed_term(&x.action, &y.action, &pair, chart)?)?));
    Ok(())
}

fn diagonal_suite(rec: &mut Recorder, s: &Subject<'_>, lim: Limits) -> Result<()> {
    let r = s.r.expect("diagonal subjects carry an r-matrix");
    for n in 2..=lim.diag {
        rec.vanishes("eq-diagonal-Lam", &format!("diag_{n}(Lam) = (Lam, ..., Lam) - Mix^{n}(Lam)"), diagonal_lambda_defect(r, n));
    }
    Ok(())
}

fn fusion_suite(rec: &mut Recorder, act: &LieAction, r: &RMatrix, lim: Limits) -> Result<()> {
    let g = r.algebra();
    let cb = cobracket_from_r(g, r.tensor())?;
    if !admit(rec, "subsec-mixed-fusion", g, &cb, Some(r)) {
        return Ok(());
    }
    for n in 2..=lim.fields {
        let spaces = (1..=n).map(|j| factor_space(act, r, j)).collect::<Result<Vec<_>>>()?;
        let fused = fusion(&spaces, r)?;
        rec.violations("de-mixed-product-r", &format!("fusion of {n} factors is a (g, r)-Poisson space"), poisson_action_violations(&fused.action, &fused.pi, &cb));
        if n == 2 {
            rec.holds("re-step-by-step", "fusion of two factors is the (f+, f-) mixed product", Ok(fusion_pair_via_f_pm(&spaces[0], &spaces[1], r)? == fused.pi));
        }
        if n == 3 {
            let left = fusion(&[fusion(&spaces[0..2], r)?, spaces[2].clone()], r)?;
            let right = fusion(&[spaces[0].clone(), fusion(&spaces[1..3], r)?], r)?;
            rec.holds("re-step-by-step", "fusion is associative", Ok(left == fused && right == fused));
            rec.holds("le-lpm-dual", "fusion of (Y1 Y2) with Y3 through the (f+, f-) pair", Ok(fusion_pair_via_f_pm(&fusion(&spaces[0..2], r)?, &spaces[2], r)? == fused.pi));
        }
        let qf = quasi_correspond(&fused, r)?;
        rec.violations("le-quasi-twisting", &format!("Q = pi + lambda(Lam) is (g, phi_s)-quasi-Poisson, n = {n}"), quasi_violations(&qf, &fused.action, r));
        rec.holds("eq-Qm-pim", &format!("Q - lambda(Lam) recovers pi, n = {n}"), Ok(quasi_inverse(&qf, &fused.action, r)?.pi == fused.pi));
        rec.holds("pr-functors-commute", &format!("twisting and fusion commute, n = {n}"), Ok(fusion_square(&spaces, r)?.commutes()));
        let mut bad = Vec::new();
        for (tau, _) in permutations(n) {
            let ok = match fusion_tau(&spaces, r, &tau) {
                Ok(ft) => {
                    let is_id = tau.iter().enumerate().all(|(a, &t)| a == t);
                    poisson_action_violations(&ft.action, &ft.pi, &cb)?.is_empty() && (!is_id || ft == fused)
                }
                Err(ForgeError::NotPoissonAction(_)) => false,
                Err(e) => return Err(e),
            };
            if !ok {
                bad.push(Violation(vec![format!("tau={tau:?}")]));
            }
        }
        rec.violations("re-fusion-order", &format!("tau-fusion of {n} factors is a (g, r)-Poisson space for every tau"), Ok(bad));
    }
    Ok(())
}
