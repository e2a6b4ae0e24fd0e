//! End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
//! if any fails. Everything is compared exactly.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use common::mobius_spaces;
use forge::bialg::{check_twist, cobracket_from_r, cyb, f_pm_pairing, Cobracket, RMatrix};
use forge::cli::report::ANCHORS;
use forge::double::{build_double, p_plus_minus, q_map, verify_manin};
use forge::fixtures;
use forge::polyfield::{
    apply_action, fusion, fusion_pair_via_f_pm, fusion_square, is_poisson, mixed_product_n, poisson_action_violations,
    quasi_correspond, quasi_violations, Chart, Poly,
};
use forge::polyuble::{
    alt_n, build_polyuble, diagonal_lambda_defect, dual_bracket_rn, mixed_model, p_2n_defect, phi_mk, r_power, t_element,
    verify_j_map, Side,
};
use forge::tensorspace::{linalg, q, Scalar, Tensor};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn ok<T>(r: forge::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn cobracket(r: &RMatrix) -> Result<Cobracket, String> {
    ok(cobracket_from_r(r.algebra(), r.tensor()))
}

fn fixtures_with_r() -> Result<Vec<(&'static str, RMatrix)>, String> {
    Ok(vec![
        ("abelian", ok(fixtures::abelian_bialgebra(2))?.0),
        ("axb", ok(fixtures::ax_plus_b_bialgebra())?.0),
        ("sl2", ok(fixtures::sl2())?.0),
        ("sl3", ok(fixtures::sl3())?.0),
    ])
}

fn cybe() -> Outcome {
    let start = Instant::now();
    let (sl2, cb2) = ok(fixtures::sl2())?;
    let (sl3, _) = ok(fixtures::sl3())?;
    for (name, r, top) in [("sl2", &sl2, 4), ("sl3", &sl3, 3)] {
        ensure(r.cyb().is_zero(), || format!("CYB(r_st) != 0 on {name}"))?;
        for n in 2..=top {
            ensure(ok(ok(r_power(r, n))?.cyb())?.is_zero(), || format!("CYB(r^({n})) != 0 on {name}"))?;
        }
    }
    let dbl = ok(build_double(&cb2))?;
    ensure(dbl.r_d().cyb().is_zero(), || "CYB(r_d) != 0".into())?;
    for n in 2..=3 {
        ensure(ok(ok(r_power(dbl.r_d(), n))?.cyb())?.is_zero(), || format!("CYB(r_d^({n})) != 0"))?;
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(60), || format!("took {took:.1?}"))?;
    Ok(format!("sl2 n<=4, sl3 n<=3, r_d n<=3 in {took:.1?}"))
}

fn doubles() -> Outcome {
    let all = fixtures_with_r()?;
    for (name, r) in &all {
        let dbl = ok(build_double(&cobracket(r)?))?;
        let d = dbl.total();
        ensure(d.check_jacobi().is_empty(), || format!("{name}: Jacobi on d"))?;
        ensure(d.check_form().is_empty(), || format!("{name}: form on d is not invariant"))?;
        ensure(verify_manin(d, &dbl.g_subspace(), &dbl.dual_subspace()), || format!("{name}: not a Manin triple"))?;
        ensure(ok(dbl.restriction_violations())?.is_empty(), || format!("{name}: delta_d does not restrict"))?;
        let (pp, pm) = ok(p_plus_minus(&dbl, r))?;
        ensure(&ok(dbl.r_d().tensor().pushforward(&pp))? == r.tensor(), || format!("{name}: p+(r_d) != r"))?;
        ensure(ok(dbl.r_d().tensor().pushforward(&pm))? == -&r.r21(), || format!("{name}: p-(r_d) != -r21"))?;
        let (dq, qm) = ok(q_map(r, &ok(f_pm_pairing(r))?))?;
        ensure(&ok(dq.r_d().tensor().pushforward(&qm))? == r.tensor(), || format!("{name}: q(r_d) != r"))?;
    }
    Ok(format!("{} fixtures", all.len()))
}

fn zeta() -> Outcome {
    let mut pairs = 0;
    for (name, r) in [("sl2", ok(fixtures::sl2())?.0), ("axb", ok(fixtures::ax_plus_b_bialgebra())?.0)] {
        let m = r.algebra().dim();
        for n in 2..=3 {
            let rn = ok(r_power(&r, n))?;
            let cb = ok(cobracket_from_r(rn.algebra(), rn.tensor()))?;
            let blocks = |v: &[Scalar]| v.chunks(m).map(<[Scalar]>::to_vec).collect::<Vec<_>>();
            for a in 0..m * n {
                for b in 0..m * n {
                    let (xi, eta) = (linalg::unit(m * n, a), linalg::unit(m * n, b));
                    let formula = ok(dual_bracket_rn(&r, &blocks(&xi), &blocks(&eta)))?.concat();
                    let evaluated: Vec<Scalar> = (0..m * n).map(|c| cb.value(c).evaluate(&[xi.clone(), eta.clone()])).collect();
                    ensure(formula == evaluated, || format!("{name} n={n} pair ({a}, {b})"))?;
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{pairs} dual basis pairs"))
}

fn homomorphisms() -> Outcome {
    let (r, cb) = ok(fixtures::sl2())?;
    let g = r.algebra();
    let mut maps = 0;
    for n in 1..=4 {
        let target = cobracket(&ok(ok(r_power(&r, n))?.rmatrix())?)?;
        for m in 1..=n {
            let source = cobracket(&ok(ok(r_power(&r, m))?.rmatrix())?)?;
            for k in 1..=m {
                let phi = ok(phi_mk(g.space(), m, k, n))?;
                ensure(ok(source.hom_violations(&target, &phi))?.is_empty(), || format!("phi_{{{m},{k}}} into n={n}"))?;
                maps += 1;
            }
        }
    }
    for (name, r, invertible) in [("sl2", r.clone(), true), ("axb", ok(fixtures::ax_plus_b_bialgebra())?.0, false)] {
        let dbl = ok(build_double(&cobracket(&r)?))?;
        let rep = ok(verify_j_map(&ok(build_polyuble(&dbl, 2))?, &r))?;
        ensure(rep.lie.is_empty() && rep.bialgebra.is_empty(), || format!("J_2 on {name} is not a bialgebra map"))?;
        ensure(rep.invertible == invertible, || format!("J_2 on {name}: invertible = {}", rep.invertible))?;
    }
    let dbl = ok(build_double(&cb))?;
    for n in 1..=2 {
        ensure(ok(p_2n_defect(&dbl, &r, n))?.is_zero(), || format!("p_2n(r_d^({n})) != r^({})", 2 * n))?;
    }
    Ok(format!("{maps} phi maps, J_2, p_2n"))
}

fn twists() -> Outcome {
    let (r, cb) = ok(fixtures::sl2())?;
    let g = r.algebra();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let (samples, mut hits) = (120, 0);
    for i in 0..samples {
        let mut t = Tensor::zero_on(g.space(), 2);
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            let x = q(rng.gen_range(-2..=2), rng.gen_range(1..=2));
            t.add_entry(vec![a, b], x.clone());
            t.add_entry(vec![b, a], -x);
        }
        let twisting = ok(check_twist(&cb, &t))?;
        ensure(twisting == ok(cyb(g, &(r.tensor() - &t)))?.is_zero(), || format!("sample {i} disagrees"))?;
        hits += usize::from(twisting);
    }
    let dbl = ok(build_double(&cb))?;
    for size in 1..=4 {
        let pu = ok(build_polyuble(&dbl, size))?;
        for side in [Side::G, Side::Dual] {
            let model = ok(mixed_model(&dbl, side, size))?;
            ensure(ok(model.is_mixed_twist())?, || format!("t is not a mixed twist ({side:?}, {size})"))?;
            ensure(ok(model.compare(&pu))?.is_empty(), || format!("identification fails ({side:?}, {size})"))?;
        }
    }
    for n in 1..=2 {
        let pu = ok(build_polyuble(&dbl, n + 1))?;
        let want = &ok(alt_n(dbl.r_d().tensor(), n + 1))? - &ok(t_element(&dbl, n + 1))?;
        ensure(ok(pu.r_ambient())? == want, || format!("r_d^{} != Alt - t", n + 1))?;
    }
    Ok(format!("{samples} samples ({hits} twisting), 4 identifications, n<=2"))
}

fn fields() -> Outcome {
    let (r, _) = ok(fixtures::sl2())?;
    for n in 2..=3 {
        let spaces = mobius_spaces(&r, n);
        let mp = ok(mixed_product_n(&spaces, &r))?;
        let rn = ok(r_power(&r, n))?;
        ensure(mp.pi == ok(apply_action(&mp.action, rn.tensor()))?.neg(), || format!("n={n}: pi != -lambda(r^(n))"))?;
        ensure(ok(is_poisson(&mp.pi))?, || format!("n={n}: [pi, pi] != 0"))?;
        let cbn = ok(cobracket_from_r(rn.algebra(), rn.tensor()))?;
        ensure(ok(poisson_action_violations(&mp.action, &mp.pi, &cbn))?.is_empty(), || format!("n={n}: not equivariant"))?;
        for (j, s) in spaces.iter().enumerate() {
            ensure(ok(mp.pi.project(s.chart()))? == s.pi, || format!("n={n}: projection to factor {j}"))?;
            for (k, t) in spaces.iter().enumerate().skip(j + 1) {
                let chart = ok(Chart::product(&[s.chart(), t.chart()]))?;
                let pair = ok(fusion_pair_via_f_pm(s, t, &r))?;
                ensure(ok(mp.pi.project(&chart))? == pair, || format!("n={n}: projection to factors ({j}, {k})"))?;
            }
        }
        if n == 2 {
            let (z1, z2) = (Poly::var(2, 0), Poly::var(2, 1));
            let want = z1.mul(&z2).sub(&z2.mul(&z2));
            ensure(mp.pi.component(&[0, 1]) == want && mp.pi.components().count() == 1, || format!("n=2 bivector is {}", mp.pi))?;
        }
    }
    Ok("n = 2, 3 on Möbius charts".into())
}

fn fusion_quasi() -> Outcome {
    let (r, _) = ok(fixtures::sl2())?;
    let spaces = mobius_spaces(&r, 3);
    let all = ok(fusion(&spaces, &r))?;
    let left = ok(fusion(&[ok(fusion(&spaces[0..2], &r))?, spaces[2].clone()], &r))?;
    let right = ok(fusion(&[spaces[0].clone(), ok(fusion(&spaces[1..3], &r))?], &r))?;
    ensure(left == all && right == all, || "fusion is not associative".into())?;
    let qf = ok(quasi_correspond(&all, &r))?;
    ensure(ok(quasi_violations(&qf, &all.action, &r))?.is_empty(), || "Q is not quasi-Poisson".into())?;
    ensure(ok(fusion_square(&spaces[0..2], &r))?.commutes(), || "functor square does not commute".into())?;
    for n in 2..=4 {
        ensure(ok(diagonal_lambda_defect(&r, n))?.is_zero(), || format!("diagonal Lambda identity fails for n={n}"))?;
    }
    Ok("associativity, Q, functor square, diagonal n<=4".into())
}

fn forge_bin(args: &[&str]) -> Result<std::process::Output, String> {
    Command::new(env!("CARGO_BIN_EXE_forge")).args(args).env_remove("FORGE_THREADS").output().map_err(|e| e.to_string())
}

fn cli() -> Outcome {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures");
    let start = Instant::now();
    let mut lines = 0;
    for name in ["abelian", "axb", "sl2", "sl3"] {
        let path = dir.join(format!("{name}.json"));
        let out = forge_bin(&["verify", path.to_str().unwrap(), "--profile", "full"])?;
        let text = String::from_utf8_lossy(&out.stdout).into_owned();
        ensure(out.status.code() == Some(0), || format!("{name}: exit {:?}", out.status.code()))?;
        for line in text.lines() {
            let anchored = line.starts_with("PASS [") && line.find(']').is_some_and(|end| ANCHORS.contains(&&line[6..end]));
            ensure(anchored, || format!("{name}: unanchored line {line:?}"))?;
            lines += 1;
        }
    }
    let took = start.elapsed();
    ensure(took < Duration::from_secs(300), || format!("full profile took {took:.1?}"))?;

    let sl2 = std::fs::read_to_string(dir.join("sl2.json")).map_err(|e| e.to_string())?;
    let corrupted = sl2.replacen("\"e\": \"2\"", "\"e\": \"3\"", 1);
    ensure(corrupted != sl2, || "could not corrupt sl2.json".into())?;
    let path: PathBuf = Path::new(env!("CARGO_TARGET_TMPDIR")).join("sl2-corrupted.json");
    std::fs::write(&path, corrupted).map_err(|e| e.to_string())?;
    let out = forge_bin(&["verify", path.to_str().unwrap()])?;
    let text = String::from_utf8_lossy(&out.stdout);
    ensure(out.status.code() == Some(1), || format!("corrupted fixture: exit {:?}", out.status.code()))?;
    ensure(text.contains("FAIL [subsec-Lie-bialgebras] jacobi sl2: Jacobi identity"), || "corrupted fixture: Jacobi failure not named".into())?;
    Ok(format!("{lines} anchored lines in {took:.1?}; corrupted sl2 exits 1"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("cybe", cybe),
        ("double", doubles),
        ("zeta", zeta),
        ("homomorphisms", homomorphisms),
        ("twist", twists),
        ("fields", fields),
        ("fusion-quasi", fusion_quasi),
        ("cli", cli),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panicked".into()))
        });
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
