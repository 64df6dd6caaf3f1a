//! Arbitrary-precision evaluation with rigorous error bounds.
//!
//! Every public evaluator works internally at `precision_bits` plus guard bits,
//! then posts a ball whose radius is exactly `2^-precision_bits`. The posted
//! radius is therefore monotone in the requested precision, and the enclosure
//! at a higher precision always sits inside the one at a lower precision.

mod ball;
mod dyadic;
mod pi;
mod zeta;

pub use ball::ApproxReal;
pub use dyadic::Dyadic;

use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::rational::ExactRational;

pub const MIN_PI_PRECISION: u32 = 16;
pub(crate) const GUARD_BITS: i64 = 32;

/// Round to a grid well below the target and widen to exactly `2^-prec`;
/// `None` if the internal radius does not fit.
fn post(ball: &ApproxReal, prec: u32) -> Option<ApproxReal> {
    let target = Dyadic::pow2(-(prec as i64));
    let rounded = ball.round_abs(-(prec as i64) - 8);
    (rounded.abs_error() <= &target).then(|| rounded.widen_to(target))
}

fn with_guard(prec: u32, eval: impl Fn(i64) -> ApproxReal) -> ApproxReal {
    let mut guard = GUARD_BITS;
    loop {
        if let Some(b) = post(&eval(prec as i64 + guard), prec) {
            return b;
        }
        guard *= 2;
    }
}

fn check_precision(bits: u32, min: u32) -> Result<()> {
    if bits < min {
        return Err(Error::Precision { bits, min });
    }
    Ok(())
}

/// `pi` with `|value - pi| <= abs_error = 2^-precision_bits`.
pub fn pi_approx(precision_bits: u32) -> Result<ApproxReal> {
    check_precision(precision_bits, MIN_PI_PRECISION)?;
    Ok(with_guard(precision_bits, |w| pi::pi_ball(w as u64)))
}

/// Riemann zeta at an integer `s >= 2`.
pub fn zeta_int(s: i64, precision_bits: u32) -> Result<ApproxReal> {
    hurwitz_zeta(s, &ExactRational::one(), precision_bits)
}

/// Hurwitz zeta `sum_{k>=0} (k + a)^-s` for integer `s >= 2` and rational `0 < a <= 1`.
pub fn hurwitz_zeta(s: i64, a: &ExactRational, precision_bits: u32) -> Result<ApproxReal> {
    if s < 2 {
        return Err(Error::Argument { s, requirement: "Hurwitz/Riemann zeta needs s >= 2" });
    }
    if !a.is_positive() || a > &ExactRational::one() {
        return Err(Error::Shift { a: a.to_string() });
    }
    check_precision(precision_bits, 1)?;
    let s = u32::try_from(s)
        .map_err(|_| Error::Argument { s, requirement: "s must fit in 32 bits" })?;
    Ok(with_guard(precision_bits, |w| zeta::hurwitz_ball(s, a, w)))
}

/// `L(s, chi_-3)` for the nontrivial character mod 3, integer `s >= 1`.
pub fn dirichlet_l_chi3(s: i64, precision_bits: u32) -> Result<ApproxReal> {
    if s < 1 {
        return Err(Error::Argument { s, requirement: "L(s, chi_-3) is evaluated for s >= 1" });
    }
    check_precision(precision_bits, 1)?;
    if s == 1 {
        return Ok(with_guard(precision_bits, zeta::l_chi3_at_one_ball));
    }
    let s = u32::try_from(s)
        .map_err(|_| Error::Argument { s, requirement: "s must fit in 32 bits" })?;
    Ok(with_guard(precision_bits, |w| zeta::l_chi3_ball(s, w)))
}

/// `sqrt(3)` posted like the other constants.
pub fn sqrt3_approx(precision_bits: u32) -> Result<ApproxReal> {
    check_precision(precision_bits, 1)?;
    Ok(with_guard(precision_bits, |w| {
        ApproxReal::from_int(3).sqrt(w as u32 + 4).expect("3 is positive")
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{ratio, zeta_even_exact};

    #[test]
    fn pi_contract() {
        for p in [16, 64, 200] {
            let pi = pi_approx(p).unwrap();
            assert!(pi.abs_error() <= &Dyadic::pow2(-(p as i64) + 2));
            let v = pi.to_f64();
            assert!(v > 3.1 && v < 3.2);
        }
        assert!((pi_approx(16).unwrap().to_f64() - std::f64::consts::PI).abs() <= 2f64.powi(-14));
        assert_eq!(
            pi_approx(64).unwrap().value_string(21),
            "3.14159265358979323846e0"
        );
        assert_eq!(pi_approx(15), Err(Error::Precision { bits: 15, min: 16 }));
    }

    #[test]
    fn zeta_rejects_pole() {
        assert!(matches!(zeta_int(1, 64), Err(Error::Argument { s: 1, .. })));
        assert!(matches!(zeta_int(-4, 64), Err(Error::Argument { .. })));
    }

    #[test]
    fn zeta_two_cross_module() {
        let z = zeta_int(2, 128).unwrap();
        let pi = pi_approx(128).unwrap();
        let (c, k) = zeta_even_exact(1);
        let folded = pi.powi(k, 140).unwrap().mul_rational(&c, 140);
        assert!(z.overlaps(&folded));
    }

    #[test]
    fn zeta_nine_direct_summation_oracle() {
        // sum_{n<=10^6} n^-9 in f64; tail < 1/(8 * 10^48)
        let partial: f64 = (1..=1_000_000u32).rev().map(|n| (n as f64).powi(-9)).sum();
        let z = zeta_int(9, 128).unwrap();
        assert!((z.to_f64() - partial).abs() < 1e-15);
        assert_eq!(z.value_string(24), "1.00200839282608221441785e0");
    }

    #[test]
    fn zeta_thirty_three_term_oracle() {
        // the omitted tail sum_{n>=4} n^-30 lies in [4^-30, 4^-30 + 4^-29/29]
        let z = zeta_int(30, 64).unwrap();
        let pow = |b: i64| ExactRational::new(1.into(), num_traits::pow(num_bigint::BigInt::from(b), 30));
        let partial = ratio(1, 1) + pow(2) + pow(3);
        let tail_lo = pow(4);
        let tail_hi = pow(4) + pow(4) * ratio(4, 29);
        let diff = z.value().to_rational() - partial;
        let slack = z.abs_error().to_rational();
        assert!(diff >= &tail_lo - &slack && diff <= &tail_hi + &slack);
        assert!(diff.abs() <= Dyadic::pow2(-59).to_rational());
    }

    #[test]
    fn hurwitz_domain_and_identities() {
        assert!(matches!(hurwitz_zeta(3, &ratio(0, 1), 64), Err(Error::Shift { .. })));
        assert!(matches!(hurwitz_zeta(3, &ratio(3, 2), 64), Err(Error::Shift { .. })));
        assert!(matches!(hurwitz_zeta(1, &ratio(1, 2), 64), Err(Error::Argument { .. })));
        for s in [2, 5, 9] {
            let h = hurwitz_zeta(s, &ratio(1, 1), 100).unwrap();
            assert!(h.overlaps(&zeta_int(s, 100).unwrap()));
        }
        let h = hurwitz_zeta(2, &ratio(1, 2), 100).unwrap();
        let three_zeta2 = zeta_int(2, 100).unwrap().mul_rational(&ratio(3, 1), 120);
        assert!(h.overlaps(&three_zeta2));
        let h = hurwitz_zeta(3, &ratio(1, 3), 64).unwrap();
        assert!(h.lower() > Dyadic::from_int(27));
        // oracle: 27 + sum_{k>=1} (k + 1/3)^-3 summed directly
        let direct: f64 = 27.0 + (1..200_000).map(|k| (k as f64 + 1.0 / 3.0).powi(-3)).sum::<f64>();
        assert!((h.to_f64() - direct).abs() < 1e-9);
    }

    #[test]
    fn l_values() {
        let l1 = dirichlet_l_chi3(1, 64).unwrap();
        assert_eq!(l1.value_string(9), "6.04599788e-1");
        let l2 = dirichlet_l_chi3(2, 128).unwrap();
        // alternating character series, tail below the first omitted term
        let mut direct = 0.0;
        for k in 0..300_000u64 {
            direct += 1.0 / ((3 * k + 1) as f64).powi(2) - 1.0 / ((3 * k + 2) as f64).powi(2);
        }
        assert!((l2.to_f64() - direct).abs() < 1e-11);
        assert_eq!(l2.value_string(20), "7.8130241289648629687e-1");
        let l20 = dirichlet_l_chi3(20, 64).unwrap();
        let two_term = ratio(1, 1) - ratio(1, 1 << 20);
        assert!((l20.value().to_rational() - two_term).abs() <= Dyadic::pow2(-40).to_rational());
        assert!(matches!(dirichlet_l_chi3(0, 64), Err(Error::Argument { .. })));
    }

    #[test]
    fn doubling_precision_refines() {
        for s in [2, 3, 5, 9] {
            let lo = zeta_int(s, 64).unwrap();
            let hi = zeta_int(s, 128).unwrap();
            assert!(hi.abs_error() <= lo.abs_error());
            assert!(lo.contains(&hi));
        }
        let lo = dirichlet_l_chi3(1, 40).unwrap();
        let hi = dirichlet_l_chi3(1, 80).unwrap();
        assert!(lo.contains(&hi));
    }

    #[test]
    fn sqrt3_is_posted() {
        let r = sqrt3_approx(90).unwrap();
        assert_eq!(r.abs_error(), &Dyadic::pow2(-90));
        assert!(r.mul(&r, 120).contains_rational(&ratio(3, 1)));
    }
}
