//! Acceptance criteria A1-A11: one PASS/FAIL line each, nonzero exit on any
//! failure.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use quadbundle::algebra_core::{expand_rational_series, koszul_pairing, Field, IntPoly};
use quadbundle::clifford::{build_clifford, ideal_family_map, morita_tensor_dim};
use quadbundle::k3_chern::{self, ElemTransformData, K3ChernData};
use quadbundle::quadratic_forms::{classify_components, enumerate_max_isotropic, QuadForm};
use quadbundle::quadric_nets::{self, NetOfQuadrics};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn koszul_series() -> quadbundle::algebra_core::PowerSeries {
    let num = IntPoly::parse("(1+t)^3").unwrap();
    let den = IntPoly::parse("(1-t)^3").unwrap();
    expand_rational_series(&num, &den, 50).unwrap()
}

fn a1() -> Check {
    let h = koszul_series();
    for i in 0..50 {
        let want = if i == 0 { int(1) } else { int(4 * (i as i64) * (i as i64) + 2) };
        ensure(h.coeff(i) == &want, format!("coefficient {i} is {}", h.coeff(i)))?;
    }
    let p = koszul_pairing(&h, &h).map_err(|e| e.to_string())?;
    ensure(p.coeffs().iter().enumerate().all(|(i, c)| *c == int((i == 0) as i64)), "H(t) H(-t) != 1")?;
    Ok("50 coefficients are 1, 4i^2+2; H(t)H(-t) = 1 to order 50".into())
}

fn a2() -> Check {
    let v = koszul_series().even_veronese();
    ensure(v.coeff(0) == &int(1), "constant term")?;
    for n in 1..v.order() {
        let n64 = n as i64;
        ensure(v.coeff(n) == &int(16 * n64 * n64 + 2), format!("veronese coefficient {n}"))?;
    }
    ensure(v.coeffs()[..3] == [int(1), int(18), int(66)], "leading terms")?;
    Ok(format!("{} coefficients 1, 16n^2+2 starting 1 + 18t + 66t^2", v.order()))
}

fn a3() -> Check {
    for c2 in [0, 17, 30, 45] {
        let data = K3ChernData::azumaya(16, c2, 2).map_err(|e| e.to_string())?;
        for n in -5..=5 {
            ensure(k3_chern::chi_twisted_k3(&data, n) == 16 * n * n + 32 - c2, format!("chi at c2={c2}, n={n}"))?;
        }
    }
    let c2 = k3_chern::solve_c2_from_hilbert(16, 2, &IntPoly::from_ints(&[2, 0, 16])).map_err(|e| e.to_string())?;
    ensure(c2 == 30, format!("solved c2 = {c2}"))?;
    Ok("chi(A(n)) = 16n^2 + 32 - c2 on [-5,5]; 16n^2+2 gives c2 = 30".into())
}

fn a4() -> Check {
    ensure(k3_chern::simple_c2_lower_bound(4) == 30, "bound r=4")?;
    ensure(k3_chern::minimality_check(4, 30, 30) == Ok(true), "minimality r=4")?;
    ensure(k3_chern::simple_c2_lower_bound(2) == 6, "bound r=2")?;
    ensure(k3_chern::minimality_check(2, 8, 6) == Ok(true), "minimality r=2")?;
    ensure(k3_chern::gerbe_divisibility_check(2, 8, 6) == Ok(false), "divisibility 8 vs 6")?;
    Ok("bounds 30 and 6 attained/minimal; 4 does not divide 8-6".into())
}

fn a5() -> Check {
    let e = k3_chern::chi_even_clifford_p2().map_err(|e| e.to_string())?;
    let ranks: Vec<i64> = e.components.iter().map(|c| c.chern.rank).collect();
    let chis: Vec<i64> = e.components.iter().map(|c| c.chi).collect();
    ensure(ranks == [1, 6, 1], format!("ranks {ranks:?}"))?;
    ensure(chis == [1, -2, 1], format!("chi values {chis:?}"))?;
    ensure(e.total_chi == 0 && e.c2 == 8, "total chi / c2")?;
    ensure(e.exterior_square_cross_check, "Adams-operation cross-check")?;
    Ok("ranks (1,6,1), chi (1,-2,1), total 0, c2 = 8".into())
}

fn a6() -> Check {
    let f = Field::prime(7).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut tested, mut skipped) = (0, 0);
    let mut on_curve_rows = 0;
    while tested < 3 {
        ensure(tested + skipped < 60, "too few random nets pass the probe")?;
        let net = NetOfQuadrics::random(f, &mut rng).map_err(|e| e.to_string())?;
        let disc = quadric_nets::discriminant(&net);
        let passes = quadric_nets::smoothness_probe(&disc, true).map(|v| v.passed()).unwrap_or(false);
        let points = quadric_nets::find_base_points(&net).map_err(|e| e.to_string())?;
        if !passes || points.is_empty() {
            skipped += 1;
            continue;
        }
        // Two base points per net when available, chosen at random.
        for _ in 0..2.min(points.len()) {
            let x = &points[rng.gen_range(0..points.len())];
            let profile = quadric_nets::rank_profile(&net, x).map_err(|e| e.to_string())?;
            ensure(profile.rows.len() == 57, "57 plane points")?;
            ensure(profile.is_generic(), format!("non-generic profile {:?}", profile.histogram))?;
            ensure(profile.rank_drop_holds(), "rank drop 2")?;
            on_curve_rows += profile.rows.iter().filter(|r| r.on_curve && r.reduced_rank.is_some()).count();
        }
        tested += 1;
    }
    ensure(on_curve_rows > 0, "no on-curve fibers exercised")?;
    Ok(format!(
        "{tested} nets over GF(7) ({skipped} skipped by probe/base locus); off-curve 6/4, on-curve 5/3 ({on_curve_rows} on-curve rows)"
    ))
}

fn a7() -> Check {
    let f = Field::prime(11).unwrap();
    let h = build_clifford(&QuadForm::hyperbolic(f));
    let r = h.algebra().semisimplicity_report().map_err(|e| e.to_string())?;
    ensure(r.semisimple && r.factor_dimensions == [4], "Cl(H)")?;
    let q6 = QuadForm::diagonal_i64(f, &[1, 1, 1, 1, 1, -1]).unwrap();
    let even6 = build_clifford(&q6).even_subalgebra();
    let r6 = even6.algebra.semisimplicity_report().map_err(|e| e.to_string())?;
    ensure(r6.semisimple && r6.center_dimension == 2, "Cl0 of 6-variable form")?;
    ensure(r6.factor_dimensions == [16, 16], format!("factors {:?}", r6.factor_dimensions))?;
    let cone = QuadForm::slice_model(f.zero()).unwrap();
    let even0 = build_clifford(&cone).even_subalgebra();
    let r0 = even0.algebra.semisimplicity_report().map_err(|e| e.to_string())?;
    let z = r0.central_nilpotent.clone().ok_or("no central nilpotent")?;
    ensure(!r0.semisimple && !z.is_zero() && even0.algebra.mul(&z, &z).is_zero(), "degenerate slice")?;
    Ok("Cl(H) = M2; Cl0(6 vars) has factors (16,16); Cl0 at t=0 has a central nilpotent".into())
}

fn a8() -> Check {
    let f = Field::prime(3).unwrap();
    let h = QuadForm::hyperbolic(f);
    let mut summary = Vec::new();
    for q in [QuadForm::diagonal_i64(f, &[-1, 1]).unwrap().direct_sum(&h).unwrap(), h.direct_sum(&h).unwrap()] {
        let planes = enumerate_max_isotropic(&q, 2).map_err(|e| e.to_string())?;
        let classes = classify_components(&q, &planes).map_err(|e| e.to_string())?;
        ensure(classes.count() == 2, format!("{} classes", classes.count()))?;
        let map = ideal_family_map(&q).map_err(|e| e.to_string())?;
        ensure(map.idempotents.len() == 2 && map.idempotent_classes() == 2, "two idempotents")?;
        ensure(map.partitions_agree(), "partitions differ")?;
        summary.push(planes.len());
    }
    let cone = QuadForm::slice_model(f.zero()).unwrap();
    let planes = enumerate_max_isotropic(&cone, 2).map_err(|e| e.to_string())?;
    let classes = classify_components(&cone, &planes).map_err(|e| e.to_string())?;
    let map = ideal_family_map(&cone).map_err(|e| e.to_string())?;
    ensure(classes.count() == 1, "cone classes")?;
    ensure(map.idempotents.len() == 1 && map.idempotent_classes() == 1, "cone separated")?;
    Ok(format!(
        "split forms: {summary:?} planes in 2 classes matching 2 idempotents; rank 3: {} planes, 1 class, no separation",
        planes.len()
    ))
}

fn a9() -> Check {
    let dims: Vec<usize> = (1..=5).map(morita_tensor_dim).collect();
    ensure(dims == [1; 5], format!("{dims:?}"))?;
    Ok("dimension 1 for n = 1..5".into())
}

fn a10() -> Check {
    ensure(quadric_nets::even_theta_count(10) == BigInt::from(524800), "theta count")?;
    ensure(quadric_nets::plane_curve_genus(6) == Ok(10), "genus")?;
    let b = k3_chern::brauer_severi_invariants(24, 2, 8);
    ensure((b.chi_top, b.chi_o, b.k_cubed) == (48, 2, 8), "Brauer-Severi invariants")?;
    Ok("524800 even thetas, genus 10, (48, 2, 8)".into())
}

fn a11() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let r = rng.gen_range(2..8);
        let d = ElemTransformData::from_parts(1, rng.gen_range(-20..20), r - 1, rng.gen_range(-20..20), rng.gen_range(-30..30))
            .map_err(|e| e.to_string())?;
        let rep = k3_chern::delta_c2_elementary_transform(&d).map_err(|e| e.to_string())?;
        ensure(rep.agrees == Some(true), format!("forms disagree at {d:?}"))?;
    }
    let mut hits = 0;
    for _ in 0..200 {
        let r = rng.gen_range(2..8);
        let f1 = rng.gen_range(-20..20);
        let v1 = r * rng.gen_range(-5..5);
        let csq = 2 * r * rng.gen_range(-5..5);
        let d = ElemTransformData::from_parts(1, f1, r - 1, v1 - f1, csq).map_err(|e| e.to_string())?;
        let delta = k3_chern::delta_c2_elementary_transform(&d).map_err(|e| e.to_string())?.delta_c2;
        let c2 = rng.gen_range(0..100);
        ensure(k3_chern::gerbe_divisibility_check(r, c2 + delta, c2) == Ok(true), format!("divisibility at {d:?}"))?;
        hits += 1;
    }
    Ok(format!("printed and expanded forms agree on 50 tuples; 2r | delta on {hits} tuples meeting the hypotheses"))
}

fn main() -> ExitCode {
    let checks: [(&str, fn() -> Check); 11] = [
        ("A1", a1),
        ("A2", a2),
        ("A3", a3),
        ("A4", a4),
        ("A5", a5),
        ("A6", a6),
        ("A7", a7),
        ("A8", a8),
        ("A9", a9),
        ("A10", a10),
        ("A11", a11),
    ];
    let mut failed = 0;
    for (name, check) in checks {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(msg) => println!("{name} PASS: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("{name} FAIL: {msg}");
            }
        }
    }
    println!("{} of {} acceptance criteria passed", checks.len() - failed, checks.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
