use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::numerics::{dirichlet_l_chi3, pi_approx, sqrt3_approx, zeta_int, ApproxReal, Dyadic};
use crate::rational::{zeta_even_exact, ExactRational};

/// `coefficient * sqrt(3)^e * pi^k * prod zeta(s_i) * prod L(t_i, chi_-3)` in canonical form.
///
/// Canonical means: the coefficient is positive, `e` is 0 or 1 (squares of
/// `sqrt(3)` live in the coefficient), every `zeta(2j)` has been rewritten as a
/// rational multiple of `pi^(2j)`, and both factor lists are sorted. Two
/// expressions are equal exactly when they denote the same product in this
/// form, so `==` is the exact-identity check used throughout the tests.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VolumeExpression {
    coefficient: ExactRational,
    sqrt3_exponent: u32,
    pi_exponent: i64,
    zeta_factors: Vec<u32>,
    l3_factors: Vec<u32>,
}

impl VolumeExpression {
    /// Build and normalize. `sqrt3_exponent` may be any power; even `zeta`
    /// arguments are folded. Arguments below 2 are rejected.
    pub fn new(
        coefficient: ExactRational,
        sqrt3_exponent: u32,
        pi_exponent: i64,
        zeta_factors: Vec<u32>,
        l3_factors: Vec<u32>,
    ) -> Result<Self> {
        if !coefficient.is_positive() {
            return Err(Error::NonPositiveScalar { value: coefficient.to_string() });
        }
        for &s in zeta_factors.iter() {
            if s < 2 {
                return Err(Error::Argument { s: s as i64, requirement: "zeta factors need s >= 2" });
            }
        }
        for &t in l3_factors.iter() {
            if t < 2 {
                return Err(Error::Argument { s: t as i64, requirement: "L factors need t >= 2" });
            }
        }
        let mut expr = VolumeExpression {
            coefficient,
            sqrt3_exponent,
            pi_exponent,
            zeta_factors,
            l3_factors,
        };
        expr.normalize_in_place();
        Ok(expr)
    }

    /// A bare positive rational.
    pub fn rational(q: ExactRational) -> Result<Self> {
        Self::new(q, 0, 0, vec![], vec![])
    }

    pub fn one() -> Self {
        Self::rational(ExactRational::one()).expect("1 > 0")
    }

    pub fn zeta(s: u32) -> Result<Self> {
        Self::new(ExactRational::one(), 0, 0, vec![s], vec![])
    }

    pub fn l_chi3(t: u32) -> Result<Self> {
        Self::new(ExactRational::one(), 0, 0, vec![], vec![t])
    }

    fn normalize_in_place(&mut self) {
        if self.sqrt3_exponent >= 2 {
            let three_pow = num_traits::pow(BigInt::from(3), (self.sqrt3_exponent / 2) as usize);
            self.coefficient *= ExactRational::from_integer(three_pow);
            self.sqrt3_exponent %= 2;
        }
        let mut odd = Vec::with_capacity(self.zeta_factors.len());
        for &s in &self.zeta_factors {
            if s % 2 == 0 {
                let (c, k) = zeta_even_exact(s / 2);
                self.coefficient *= c;
                self.pi_exponent += k;
            } else {
                odd.push(s);
            }
        }
        odd.sort_unstable();
        self.zeta_factors = odd;
        self.l3_factors.sort_unstable();
    }

    /// Run normalization again; always returns an equal expression.
    pub fn normalized(&self) -> Self {
        let mut e = self.clone();
        e.normalize_in_place();
        e
    }

    pub fn coefficient(&self) -> &ExactRational {
        &self.coefficient
    }

    pub fn sqrt3_exponent(&self) -> u32 {
        self.sqrt3_exponent
    }

    pub fn pi_exponent(&self) -> i64 {
        self.pi_exponent
    }

    pub fn zeta_factors(&self) -> &[u32] {
        &self.zeta_factors
    }

    pub fn l3_factors(&self) -> &[u32] {
        &self.l3_factors
    }

    pub fn multiply_scalar(&self, q: &ExactRational) -> Result<Self> {
        if !q.is_positive() {
            return Err(Error::NonPositiveScalar { value: q.to_string() });
        }
        let mut e = self.clone();
        e.coefficient *= q;
        Ok(e)
    }

    pub fn multiply(&self, other: &VolumeExpression) -> Self {
        let mut e = VolumeExpression {
            coefficient: &self.coefficient * &other.coefficient,
            sqrt3_exponent: self.sqrt3_exponent + other.sqrt3_exponent,
            pi_exponent: self.pi_exponent + other.pi_exponent,
            zeta_factors: [self.zeta_factors.as_slice(), other.zeta_factors.as_slice()].concat(),
            l3_factors: [self.l3_factors.as_slice(), other.l3_factors.as_slice()].concat(),
        };
        e.normalize_in_place();
        e
    }

    /// `self / other` when the transcendental parts agree, i.e. the quotient is rational.
    pub fn rational_ratio(&self, other: &VolumeExpression) -> Option<ExactRational> {
        let same = self.sqrt3_exponent == other.sqrt3_exponent
            && self.pi_exponent == other.pi_exponent
            && self.zeta_factors == other.zeta_factors
            && self.l3_factors == other.l3_factors;
        same.then(|| &self.coefficient / &other.coefficient)
    }

    /// An exponent `U` with `value < 2^U`, read off the structure alone.
    fn magnitude_exponent(&self) -> i64 {
        let c = self.coefficient.numer().bits() as i64 - self.coefficient.denom().bits() as i64 + 1;
        let pi = if self.pi_exponent > 0 { 2 * self.pi_exponent } else { 0 };
        // sqrt(3) < 2, zeta(s) <= zeta(2) < 2, L(t) < 1 for t >= 2
        c + pi + self.sqrt3_exponent as i64 + self.zeta_factors.len() as i64
    }
}

/// Numeric value with a rigorous bound.
///
/// The posted error is `2^(U - precision_bits)` where `2^U` bounds the value
/// from the structure of the expression; an exactly representable value (no
/// transcendental factors, dyadic coefficient) comes back with zero error.
pub fn evaluate(expr: &VolumeExpression, precision_bits: u32) -> Result<ApproxReal> {
    if precision_bits == 0 {
        return Err(Error::Precision { bits: 0, min: 1 });
    }
    let factors = 2 + expr.zeta_factors.len() + expr.l3_factors.len();
    let u = expr.magnitude_exponent();
    let mut guard = 32 + 4 * factors as u32;
    loop {
        let w = precision_bits + guard;
        let ball = product_ball(expr, w)?;
        if ball.abs_error().is_zero() {
            return Ok(ball);
        }
        let target = Dyadic::pow2(u - precision_bits as i64);
        let rounded = ball.round_abs(u - precision_bits as i64 - 8);
        if rounded.abs_error() <= &target {
            return Ok(rounded.widen_to(target));
        }
        guard *= 2;
    }
}

fn product_ball(expr: &VolumeExpression, w: u32) -> Result<ApproxReal> {
    let inner = w + 8;
    let mut acc = ApproxReal::from_rational_rel(&expr.coefficient, inner);
    if expr.sqrt3_exponent == 1 {
        acc = acc.mul(&sqrt3_approx(inner)?, inner);
    }
    if expr.pi_exponent != 0 {
        let pi = pi_approx(inner + 2 * bit_len(expr.pi_exponent.unsigned_abs()))?;
        acc = acc.mul(&pi.powi(expr.pi_exponent, inner)?, inner);
    }
    for &s in &expr.zeta_factors {
        acc = acc.mul(&zeta_int(s as i64, inner)?, inner);
    }
    for &t in &expr.l3_factors {
        acc = acc.mul(&dirichlet_l_chi3(t as i64, inner)?, inner);
    }
    Ok(acc)
}

fn bit_len(k: u64) -> u32 {
    64 - k.leading_zeros()
}

impl fmt::Display for VolumeExpression {
    /// `691·3617/(...) · √3 · π^2 · ζ(9) · L(4)` style, coefficient as `num/den`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = vec![self.coefficient.to_string()];
        if self.sqrt3_exponent == 1 {
            parts.push("√3".into());
        }
        match self.pi_exponent {
            0 => {}
            1 => parts.push("π".into()),
            k => parts.push(format!("π^{k}")),
        }
        parts.extend(self.zeta_factors.iter().map(|s| format!("ζ({s})")));
        parts.extend(self.l3_factors.iter().map(|t| format!("L({t})")));
        write!(f, "{}", parts.join(" · "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use proptest::prelude::*;

    #[test]
    fn even_zeta_folds_into_pi() {
        let e = VolumeExpression::zeta(2).unwrap();
        assert_eq!(e.coefficient(), &ratio(1, 6));
        assert_eq!(e.pi_exponent(), 2);
        assert!(e.zeta_factors().is_empty());
        let e = VolumeExpression::new(ratio(1, 1), 0, -4, vec![4, 5], vec![]).unwrap();
        assert_eq!(e, VolumeExpression::new(ratio(1, 90), 0, 0, vec![5], vec![]).unwrap());
    }

    #[test]
    fn sqrt3_squares_fold() {
        let a = VolumeExpression::new(ratio(2, 1), 1, 0, vec![], vec![4]).unwrap();
        let sq = a.multiply(&a);
        assert_eq!(sq.sqrt3_exponent(), 0);
        assert_eq!(sq.coefficient(), &ratio(12, 1));
        assert_eq!(sq.l3_factors(), &[4, 4]);
        let seven = VolumeExpression::new(ratio(1, 1), 7, 0, vec![], vec![]).unwrap();
        assert_eq!(seven.coefficient(), &ratio(27, 1));
        assert_eq!(seven.sqrt3_exponent(), 1);
    }

    #[test]
    fn scalar_multiplication() {
        let e = VolumeExpression::new(ratio(3, 7), 1, 2, vec![9, 3], vec![2]).unwrap();
        assert_eq!(e.multiply_scalar(&ratio(1, 1)).unwrap(), e);
        assert!(matches!(e.multiply_scalar(&ratio(0, 1)), Err(Error::NonPositiveScalar { .. })));
        assert!(matches!(e.multiply_scalar(&ratio(-1, 2)), Err(Error::NonPositiveScalar { .. })));
        assert_eq!(e.zeta_factors(), &[3, 9]);
    }

    #[test]
    fn invalid_construction() {
        assert!(VolumeExpression::new(ratio(0, 1), 0, 0, vec![], vec![]).is_err());
        assert!(VolumeExpression::new(ratio(1, 1), 0, 0, vec![1], vec![]).is_err());
        assert!(VolumeExpression::new(ratio(1, 1), 0, 0, vec![], vec![1]).is_err());
    }

    #[test]
    fn evaluate_empty_product_is_exact() {
        let one = evaluate(&VolumeExpression::one(), 64).unwrap();
        assert_eq!(one.value(), &Dyadic::from_int(1));
        assert!(one.abs_error().is_zero());
    }

    #[test]
    fn evaluate_zeta_two_as_pi_squared() {
        let e = VolumeExpression::new(ratio(1, 6), 0, 2, vec![], vec![]).unwrap();
        let v = evaluate(&e, 128).unwrap();
        assert!(v.overlaps(&zeta_int(2, 128).unwrap()));
        assert!(v.abs_error() <= &Dyadic::pow2(-120));
    }

    #[test]
    fn evaluate_with_sqrt3_and_l() {
        // pi / sqrt(27) = L(1); check sqrt(3) * L(4) against a float
        let e = VolumeExpression::new(ratio(1, 1), 1, 0, vec![], vec![4]).unwrap();
        let v = evaluate(&e, 80).unwrap();
        let l4: f64 = (0..100_000u64)
            .map(|k| ((3 * k + 1) as f64).powi(-4) - ((3 * k + 2) as f64).powi(-4))
            .sum();
        assert!((v.to_f64() - 3f64.sqrt() * l4).abs() < 1e-12);
        // 30-digit reference from an independent multiprecision sum
        assert_eq!(v.value_string(21), "1.62817223969870595658e0");
    }

    #[test]
    fn evaluate_error_is_monotone() {
        let e = VolumeExpression::new(ratio(5, 3), 1, -2, vec![3], vec![2]).unwrap();
        let mut last: Option<Dyadic> = None;
        for p in 40..60 {
            let v = evaluate(&e, p).unwrap();
            if let Some(prev) = &last {
                assert!(v.abs_error() <= prev);
            }
            last = Some(v.abs_error().clone());
        }
    }

    fn arb_expr() -> impl Strategy<Value = VolumeExpression> {
        (
            1i64..1000,
            1i64..1000,
            0u32..5,
            -6i64..6,
            proptest::collection::vec(2u32..20, 0..4),
            proptest::collection::vec(2u32..20, 0..3),
        )
            .prop_map(|(n, d, e, k, z, l)| VolumeExpression::new(ratio(n, d), e, k, z, l).unwrap())
    }

    proptest! {
        #[test]
        fn normalization_is_idempotent(e in arb_expr()) {
            prop_assert_eq!(e.normalized(), e.clone());
            prop_assert!(e.zeta_factors().iter().all(|s| s % 2 == 1));
            prop_assert!(e.sqrt3_exponent() <= 1);
        }

        #[test]
        fn multiplication_commutes_and_associates(a in arb_expr(), b in arb_expr(), c in arb_expr()) {
            prop_assert_eq!(a.multiply(&b), b.multiply(&a));
            prop_assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));
            prop_assert_eq!(a.multiply(&VolumeExpression::one()), a.clone());
        }
    }
}
