//! The exact identity suite behind `lorentzvol selfcheck`.

use num_traits::One;

use crate::lattice::{coxeter_gram, diagram_ii17, gram_ii, Signature};
use crate::mass::{mass_even_unimodular_with, volume_mass_ratio_with};
use crate::numerics::{pi_approx, zeta_int};
use crate::rational::{zeta_even_exact_with, BernoulliSource, ExactRational, Recurrence, TangentNumbers};
use crate::volume::{
    covolume_po_even_unimodular_with, covolume_pso_odd_unimodular, covolume_smallest_orbifold,
    coxeter_polytope_volume_17_with,
};
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
}

/// Run every check with the built-in Bernoulli numbers.
pub fn run() -> Vec<Check> {
    run_with(&Recurrence)
}

/// Run every check, taking Bernoulli numbers from `source` wherever a formula
/// consumes them directly. The other side of each identity stays on the
/// built-in table, so a bad source shows up as a failure.
pub fn run_with(source: &dyn BernoulliSource) -> Vec<Check> {
    let checks: [(&'static str, &dyn Fn() -> Result<bool>); 9] = [
        ("bernoulli-routes", &|| {
            Ok((1..=30).all(|j| source.bernoulli(2 * j) == TangentNumbers.bernoulli(2 * j)))
        }),
        ("index-two", &|| {
            let two = ExactRational::from_integer(2.into());
            for n in [9, 17, 25, 33, 41] {
                let po = covolume_po_even_unimodular_with(source, n)?.multiply_scalar(&two)?;
                if covolume_smallest_orbifold(n)? != po {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        ("index-three", &|| {
            let three = ExactRational::from_integer(3.into());
            for n in [5, 13, 21] {
                if covolume_pso_odd_unimodular(n)? != covolume_smallest_orbifold(n)?.multiply_scalar(&three)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        ("mass-e8", &|| {
            Ok(mass_even_unimodular_with(source, 8)? == ExactRational::new(1.into(), 696_729_600.into()))
        }),
        ("covolume-mass-ratio", &|| {
            for n in [9, 17, 25, 33] {
                let mass = mass_even_unimodular_with(source, n - 1)?;
                let lhs = covolume_po_even_unimodular_with(source, n)?.multiply_scalar(&mass.recip())?;
                if lhs != volume_mass_ratio_with(source, n)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        ("coxeter-17-exact", &|| {
            let e = coxeter_polytope_volume_17_with(source);
            let den: num_bigint::BigInt = "1208407573954339799040000".parse().expect("literal");
            Ok(e.coefficient() == &ExactRational::new((691 * 3617).into(), den)
                && e.zeta_factors() == [9]
                && e.pi_exponent() == 0
                && e.sqrt3_exponent() == 0)
        }),
        ("zeta-even-fold", &|| {
            let pi = pi_approx(160)?;
            for j in 1..=8u32 {
                let (c, k) = zeta_even_exact_with(source, j);
                let folded = pi.powi(k, 160)?.mul_rational(&c, 160);
                if !folded.overlaps(&zeta_int(2 * j as i64, 128)?) {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        ("signature-ii", &|| {
            Ok([9, 17, 25].into_iter().all(|n| {
                gram_ii(n).is_ok_and(|g| {
                    g.signature() == Signature::new(n as usize, 1, 0)
                        && g.determinant() == -ExactRational::one()
                        && g.is_even() == Ok(true)
                })
            }))
        }),
        ("signature-coxeter-17", &|| {
            let g = coxeter_gram(&diagram_ii17())?;
            Ok(g.signature() == Signature::new(17, 1, 1))
        }),
    ];
    checks
        .iter()
        .map(|(name, f)| Check { name, passed: f().unwrap_or(false) })
        .collect()
}
