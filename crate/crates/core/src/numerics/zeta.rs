//! Euler–Maclaurin evaluation of Hurwitz zeta at integer arguments, and the
//! convergent path for `L(1, chi_-3)`.
//!
//! All summands are exact rationals (integer `s`, rational shift) so each one
//! enters the ball sum with a single rounding. The truncation error of the
//! Euler–Maclaurin tail with `M` correction terms is bounded by the magnitude
//! of the last correction term, `|B_2M|/(2M)! * (s)_(2M-1) * x^(1-s-2M)` with
//! `x = N + a`, because every derivative of `x^-s` has constant sign.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};

use super::ball::ApproxReal;
use super::dyadic::Dyadic;
use crate::rational::{bernoulli, factorial, ExactRational};

/// Cap on the number of correction terms; past it the chooser grows `N` instead.
const MAX_CORRECTIONS: u32 = 120;

/// Rising factorial `s (s+1) ... (s+k-1)`.
fn rising(s: u32, k: u32) -> BigUint {
    (0..k).fold(BigUint::one(), |acc, i| acc * BigUint::from(s + i))
}

fn rpow(q: &ExactRational, e: i32) -> ExactRational {
    let p = num_traits::pow(q.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

fn below(q: &ExactRational, w: i64) -> bool {
    // q <= 2^-w
    let lhs = q.numer() << w.max(0) as usize;
    let rhs = q.denom() << (-w).max(0) as usize;
    lhs <= rhs
}

/// Magnitude of the `j`-th Euler–Maclaurin correction for `x^-s` at `x`.
fn correction(s: u32, j: u32, x: &ExactRational) -> ExactRational {
    let b = bernoulli(2 * j);
    let coeff = b / ExactRational::from_integer(factorial(2 * j as u64).into())
        * ExactRational::from_integer(rising(s, 2 * j - 1).into());
    coeff * rpow(x, -(s as i32) - 2 * j as i32 + 1)
}

/// Deterministic choice of `(N, M)` so that the remainder is at most `2^-(w+1)`.
fn choose_terms(s: u32, a: &ExactRational, w: i64) -> (u32, u32, ExactRational) {
    let mut n = ((w / 6).max(4)) as u32;
    loop {
        let x = a + ExactRational::from_integer(n.into());
        let cap = MAX_CORRECTIONS.min((3.0 * n as f64) as u32).max(1);
        for m in 1..=cap {
            let bound = correction(s, m, &x).abs();
            if below(&bound, w + 1) {
                return (n, m, bound);
            }
        }
        n += n / 2 + 1;
    }
}

fn bits_for(count: u32) -> i64 {
    64 - (count as u64).leading_zeros() as i64
}

/// `zeta(s, a)` enclosed with absolute error about `2^-w`.
pub(crate) fn hurwitz_ball(s: u32, a: &ExactRational, w: i64) -> ApproxReal {
    let (n, m, remainder) = choose_terms(s, a, w);
    let wb = w + 4 + bits_for(n + m + 2);
    let mut acc = ApproxReal::from_int(0);
    let p = a.numer();
    let q = a.denom();
    let qs = num_traits::pow(q.clone(), s as usize);
    for k in 0..n {
        let base: BigInt = BigInt::from(k) * q + p;
        let term = ExactRational::new(qs.clone(), num_traits::pow(base, s as usize));
        acc = &acc + &ApproxReal::from_rational(&term, wb);
    }
    let x = a + ExactRational::from_integer(n.into());
    let integral = rpow(&x, 1 - s as i32) / ExactRational::from_integer((s - 1).into());
    let half = rpow(&x, -(s as i32)) / ExactRational::from_integer(2.into());
    acc = &acc + &ApproxReal::from_rational(&integral, wb);
    acc = &acc + &ApproxReal::from_rational(&half, wb);
    for j in 1..=m {
        acc = &acc + &ApproxReal::from_rational(&correction(s, j, &x), wb);
    }
    let tail = Dyadic::ceil_rational(&remainder, -w - 40);
    &acc + &ApproxReal::new(Dyadic::zero(), tail)
}

/// `L(s, chi_-3) = 3^-s (zeta(s, 1/3) - zeta(s, 2/3))` for `s >= 2`.
pub(crate) fn l_chi3_ball(s: u32, w: i64) -> ApproxReal {
    let third = ExactRational::new(1.into(), 3.into());
    let two_thirds = ExactRational::new(2.into(), 3.into());
    let diff = &hurwitz_ball(s, &third, w + 2) - &hurwitz_ball(s, &two_thirds, w + 2);
    let scale = ExactRational::new(1.into(), num_traits::pow(BigInt::from(3), s as usize));
    diff.mul_rational(&scale, (w + 8).max(8) as u32)
}

/// `L(1, chi_-3) = sum_k [1/(3k+1) - 1/(3k+2)]`.
///
/// With `f(x) = 1/(x+1/3) - 1/(x+2/3)` the series is `(1/3) sum_k f(k)`; the tail
/// from `N` on is handled by Euler–Maclaurin, whose integral term
/// `ln((3N+2)/(3N+1))` is expanded as `2 atanh(1/(6N+3))`.
pub(crate) fn l_chi3_at_one_ball(w: i64) -> ApproxReal {
    let w = w + 2;
    let third = ExactRational::new(1.into(), 3.into());
    let two_thirds = ExactRational::new(2.into(), 3.into());
    let gap = |x: &ExactRational, e: i32| rpow(&(x + &third), -e) - rpow(&(x + &two_thirds), -e);
    let term = |x: &ExactRational, j: u32| {
        bernoulli(2 * j) / ExactRational::from_integer((2 * j).into()) * gap(x, 2 * j as i32)
    };

    let mut n = ((w / 6).max(4)) as u32;
    let (x, m, remainder) = 'search: loop {
        let x = ExactRational::from_integer(n.into());
        let cap = MAX_CORRECTIONS.min(3 * n).max(1);
        for m in 1..=cap {
            let bound = term(&x, m).abs();
            if below(&bound, w + 1) {
                break 'search (x, m, bound);
            }
        }
        n += n / 2 + 1;
    };

    // atanh series for the integral term
    let t = ExactRational::new(1.into(), BigInt::from(6 * n as u64 + 3));
    let t2 = &t * &t;
    let mut log_terms = Vec::new();
    let mut power = t.clone();
    let mut i = 0u32;
    let log_tail = loop {
        let odd = ExactRational::from_integer((2 * i + 1).into());
        log_terms.push(ExactRational::from_integer(2.into()) * &power / &odd);
        power = &power * &t2;
        i += 1;
        let odd = ExactRational::from_integer((2 * i + 1).into());
        let tail = ExactRational::from_integer(2.into()) * &power
            / (odd * (ExactRational::one() - &t2));
        if below(&tail, w + 2) {
            break tail;
        }
    };

    let count = n + m + log_terms.len() as u32 + 2;
    let wb = w + 4 + bits_for(count);
    let mut acc = ApproxReal::from_int(0);
    for k in 0..n {
        let k = ExactRational::from_integer(k.into());
        acc = &acc + &ApproxReal::from_rational(&gap(&k, 1), wb);
    }
    for lt in &log_terms {
        acc = &acc + &ApproxReal::from_rational(lt, wb);
    }
    let half = gap(&x, 1) / ExactRational::from_integer(2.into());
    acc = &acc + &ApproxReal::from_rational(&half, wb);
    for j in 1..=m {
        acc = &acc + &ApproxReal::from_rational(&term(&x, j), wb);
    }
    let tail = Dyadic::ceil_rational(&(remainder + log_tail), -w - 40);
    let sum = &acc + &ApproxReal::new(Dyadic::zero(), tail);
    sum.mul_rational(&third, (w + 8) as u32)
}
