//! Public-API checks of the volume formulas against independent routes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use proptest::prelude::*;

use lorentzvol::numerics::{dirichlet_l_chi3, zeta_int};
use lorentzvol::rational::{bernoulli, factorial};
use lorentzvol::volume::{
    covolume_po_even_unimodular, covolume_pso_odd_unimodular, covolume_smallest_orbifold,
    coxeter_polytope_volume_17, evaluate, VolumeExpression,
};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// The n = 1 mod 8 constant written out with factorials and the even zeta
/// values `zeta(2j) = (2pi)^(2j) |B_2j| / (2 (2j)!)`, so no shortcut is shared
/// with the library.
fn first_case_by_hand(n: i64) -> BigRational {
    let r = (n + 1) / 2;
    let mut c = BigRational::new(BigInt::one(), BigInt::one() << (r - 2) as usize);
    for j in 1..r as u32 {
        let odd_fact = BigRational::from_integer(factorial(2 * j as u64 - 1).into());
        let fact = BigRational::from_integer(factorial(2 * j as u64).into());
        // (2j-1)! zeta(2j) / (2pi)^(2j) with the pi powers cancelled
        c *= odd_fact * bernoulli(2 * j).abs() / (fact * q(2, 1));
    }
    c
}

#[test]
fn first_case_matches_hand_fold() {
    for n in [9, 17, 25, 33, 41] {
        let e = covolume_smallest_orbifold(n).unwrap();
        assert_eq!(e.coefficient(), &first_case_by_hand(n), "n = {n}");
        assert_eq!(e.zeta_factors(), &[((n + 1) / 2) as u32]);
    }
}

#[test]
fn po_nine_is_product_of_four() {
    let e = covolume_po_even_unimodular(9).unwrap();
    assert_eq!(e.coefficient(), &(q(1, 48) * q(1, 480) * q(1, 1008) * q(1, 960)));
    let half = covolume_smallest_orbifold(9).unwrap().multiply_scalar(&q(1, 2)).unwrap();
    assert_eq!(half, e);
}

#[test]
fn pso_odd_structure() {
    let e = covolume_pso_odd_unimodular(5).unwrap();
    // 3 * (7*3)/(3*4) * (1/24)(1/240)
    assert_eq!(e.coefficient(), &(q(3, 1) * q(21, 12) * q(1, 24 * 240)));
    assert_eq!(e.zeta_factors(), &[3]);
    assert_eq!(covolume_pso_odd_unimodular(13).unwrap().zeta_factors(), &[7]);
}

#[test]
fn third_case_numeric_against_series() {
    // n = 7: (27/8) sqrt 3 L(4) / (24 * 240 * 504)
    let v = evaluate(&covolume_smallest_orbifold(7).unwrap(), 64).unwrap();
    let l4 = dirichlet_l_chi3(4, 64).unwrap().to_f64();
    let expected = 27.0 / 8.0 * 3f64.sqrt() * l4 / (24.0 * 240.0 * 504.0);
    assert!(((v.to_f64() - expected) / expected).abs() < 1e-14);
}

#[test]
fn coxeter_value_digits() {
    let e = coxeter_polytope_volume_17();
    let v = evaluate(&e, 128).unwrap();
    // 25-digit reference from an independent multiprecision evaluation
    assert_eq!(v.value_string(25), "2.072451981072504166788959e-18");
    let z9 = zeta_int(9, 64).unwrap().to_f64();
    let c = 2_499_347.0 / 1.208_407_573_954_339_8e24;
    assert!(((v.to_f64() - c * z9) / (c * z9)).abs() < 1e-14);
}

#[test]
fn positive_for_all_inputs() {
    for n in (5..=41).step_by(2) {
        let e = covolume_smallest_orbifold(n).unwrap();
        let v = evaluate(&e, 64).unwrap();
        assert!(v.is_positive(), "n = {n}");
    }
}

#[test]
fn evaluate_rejects_zero_precision() {
    assert!(evaluate(&VolumeExpression::one(), 0).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn evaluation_nests_with_precision(n in (2i64..=20).prop_map(|k| 2 * k + 1), p in 32u32..120) {
        let e = covolume_smallest_orbifold(n).unwrap();
        let lo = evaluate(&e, p).unwrap();
        let hi = evaluate(&e, p + 24).unwrap();
        prop_assert!(hi.abs_error() <= lo.abs_error());
        prop_assert!(lo.overlaps(&hi));
    }

    #[test]
    fn scalar_then_expression_commute(a in 1i64..500, b in 1i64..500, n in (1i64..=5).prop_map(|k| 8 * k + 1)) {
        let e = covolume_po_even_unimodular(n).unwrap();
        let s = VolumeExpression::rational(q(a, b)).unwrap();
        prop_assert_eq!(e.multiply(&s), e.multiply_scalar(&q(a, b)).unwrap());
    }
}
