//! Acceptance gate: ten criteria, each with its own time budget.
//! Prints one PASS/FAIL line per criterion and exits non-zero on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use lorentzvol::lattice::{
    coxeter_gram, diagram_ii17, gram_form_f, gram_identity_lorentzian, gram_ii, Signature,
};
use lorentzvol::mass::{mass_even_unimodular, volume_mass_ratio};
use lorentzvol::numerics::{dirichlet_l_chi3, pi_approx, sqrt3_approx, zeta_int, ApproxReal};
use lorentzvol::rational::zeta_even_exact;
use lorentzvol::volume::{
    covolume_po_even_unimodular, covolume_pso_odd_unimodular, covolume_smallest_orbifold,
    coxeter_polytope_volume_17, evaluate,
};

type Outcome = Result<(), String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// `c * 10^e` as an exact rational.
fn sci(c: i64, scale: i64, e: i32) -> BigRational {
    let ten = BigRational::from_integer(BigInt::from(10));
    q(c, scale) * num_traits::pow::Pow::pow(&ten, e)
}

fn coxeter_coefficient() -> BigRational {
    // 2^38 3^10 5^4 7^2 11 13 17
    let den = (BigInt::one() << 38usize)
        * BigInt::from(59_049)
        * BigInt::from(625)
        * BigInt::from(49)
        * BigInt::from(11 * 13 * 17);
    BigRational::new(BigInt::from(691 * 3617), den)
}

fn c1_coxeter_exact() -> Outcome {
    let e = coxeter_polytope_volume_17();
    ensure(e.coefficient() == &coxeter_coefficient(), || format!("coefficient {}", e.coefficient()))?;
    ensure(e.zeta_factors() == [9] && e.l3_factors().is_empty(), || format!("factors {e}"))?;
    ensure(e.pi_exponent() == 0 && e.sqrt3_exponent() == 0, || format!("transcendentals {e}"))
}

fn c2_coxeter_numeric() -> Outcome {
    let e = coxeter_polytope_volume_17();
    let v = evaluate(&e, 128).map_err(err)?;
    let ten = v.value_string(10);
    ensure(ten == "2.072451981e-18", || format!("10 significant digits: {ten}"))?;
    let lo = sci(2069, 1000, -18) - sci(24, 10, -20);
    let hi = sci(2069, 1000, -18) + sci(24, 10, -20);
    for prec in [64, 128] {
        let v = evaluate(&e, prec).map_err(err)?;
        ensure(v.lower().to_rational() >= lo && v.upper().to_rational() <= hi, || {
            format!("{prec}-bit enclosure {v} leaves the published interval")
        })?;
    }
    Ok(())
}

fn c3_index_two() -> Outcome {
    let two = q(2, 1);
    for n in [9, 17, 25, 33, 41] {
        let lhs = covolume_smallest_orbifold(n).map_err(err)?;
        let rhs = covolume_po_even_unimodular(n).map_err(err)?.multiply_scalar(&two).map_err(err)?;
        ensure(lhs == rhs, || format!("n = {n}: {lhs} vs {rhs}"))?;
    }
    Ok(())
}

fn c4_mass_anchor() -> Outcome {
    let m = mass_even_unimodular(8).map_err(err)?;
    ensure(m == q(1, 696_729_600), || format!("mass(8) = {m}"))
}

fn c5_ratio_identity() -> Outcome {
    let mut previous: Option<ApproxReal> = None;
    for n in [9, 17, 25, 33] {
        let mass = mass_even_unimodular(n - 1).map_err(err)?;
        let lhs = covolume_po_even_unimodular(n).map_err(err)?.multiply_scalar(&mass.recip()).map_err(err)?;
        let rhs = volume_mass_ratio(n).map_err(err)?;
        ensure(lhs == rhs, || format!("n = {n}: {lhs} vs {rhs}"))?;
        let v = evaluate(&rhs, 64).map_err(err)?;
        if let Some(p) = &previous {
            ensure(p.upper() < v.lower(), || format!("ratio not increasing at n = {n}"))?;
        }
        previous = Some(v);
    }
    Ok(())
}

fn c6_zeta_consistency() -> Outcome {
    let pi = pi_approx(128).map_err(err)?;
    for j in 1..=8u32 {
        let z = zeta_int(2 * j as i64, 128).map_err(err)?;
        let (c, k) = zeta_even_exact(j);
        let folded = pi.powi(k, 160).map_err(err)?.mul_rational(&c, 160);
        ensure(z.overlaps(&folded), || format!("zeta({}) {z} vs {folded}", 2 * j))?;
    }
    for s in [3, 5, 9] {
        let fine = zeta_int(s, 128).map_err(err)?;
        let coarse = zeta_int(s, 64).map_err(err)?;
        let again = zeta_int(s, 128).map_err(err)?;
        ensure(coarse.contains(&fine) && coarse.contains(&again), || format!("zeta({s}) not nested"))?;
        ensure(again.overlaps(&fine), || format!("zeta({s}) recomputation disagrees"))?;
    }
    Ok(())
}

fn c7_l_anchor() -> Outcome {
    let l = dirichlet_l_chi3(1, 128).map_err(err)?;
    // class number formula: L(1) = pi / (3 sqrt 3)
    let three_root3 = sqrt3_approx(200).map_err(err)?.mul_rational(&q(3, 1), 200);
    let oracle = pi_approx(200).map_err(err)?.div(&three_root3, 200).map_err(err)?;
    let gap = (l.value() - oracle.value()).abs();
    let allowed = l.abs_error() + oracle.abs_error();
    ensure(gap <= allowed, || format!("L(1) = {l}, pi/sqrt27 = {oracle}"))
}

fn c8_lattices() -> Outcome {
    for n in [9, 17, 25] {
        let g = gram_ii(n).map_err(err)?;
        ensure(g.is_even() == Ok(true), || format!("II_{{{n},1}} not even"))?;
        ensure(g.determinant() == q(-1, 1), || format!("II_{{{n},1}} det {}", g.determinant()))?;
        ensure(g.signature() == Signature::new(n as usize, 1, 0), || format!("II_{{{n},1}} {}", g.signature()))?;
    }
    for n in [9, 17, 25] {
        let i = gram_identity_lorentzian(n).map_err(err)?;
        let f = gram_form_f(n).map_err(err)?;
        ensure(i.is_even() == Ok(false) && i.determinant() == q(-1, 1), || format!("I_{{{n},1}}"))?;
        ensure(f.is_even() == Ok(false) && f.determinant() == q(-3, 1), || format!("f_{n}"))?;
    }
    Ok(())
}

fn c9_coxeter_certificate() -> Outcome {
    let g = coxeter_gram(&diagram_ii17()).map_err(err)?;
    let s = g.signature();
    ensure(s == Signature::new(17, 1, 1), || format!("signature {s}"))?;
    ensure(g.rank() == 18, || format!("rank {}", g.rank()))
}

fn c10_index_three() -> Outcome {
    let three = q(3, 1);
    for n in [5, 13, 21] {
        let lhs = covolume_pso_odd_unimodular(n).map_err(err)?;
        let rhs = covolume_smallest_orbifold(n).map_err(err)?.multiply_scalar(&three).map_err(err)?;
        ensure(lhs == rhs, || format!("n = {n}: {lhs} vs {rhs}"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("coxeter polytope volume, exact", 1000, c1_coxeter_exact),
        ("coxeter polytope volume, numeric", 5000, c2_coxeter_numeric),
        ("index-two identity", 1000, c3_index_two),
        ("mass anchor", 1000, c4_mass_anchor),
        ("covolume/mass ratio identity", 2000, c5_ratio_identity),
        ("zeta consistency", 5000, c6_zeta_consistency),
        ("L-function anchor", 2000, c7_l_anchor),
        ("lattice certificates", 2000, c8_lattices),
        ("coxeter certificate", 1000, c9_coxeter_certificate),
        ("index-three relation", 1000, c10_index_three),
    ];
    let mut failures = 0;
    for (i, (name, limit_ms, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|()| {
            ensure(elapsed < Duration::from_millis(*limit_ms), || {
                format!("took {} ms, limit {limit_ms} ms", elapsed.as_millis())
            })
        });
        match outcome {
            Ok(()) => println!("PASS {:>2} {name} ({} ms)", i + 1, elapsed.as_millis()),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2} {name} ({} ms): {why}", i + 1, elapsed.as_millis());
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
