use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::rational::ExactRational;

/// Radii never carry more than this many significant bits; they are always
/// rounded outward.
const RADIUS_BITS: u32 = 30;

/// A real number known to lie in `[value - abs_error, value + abs_error]`.
///
/// Midpoints are exact dyadics; every operation that discards bits adds the
/// discarded amount to the radius, so the enclosure is never lost.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxReal {
    mid: Dyadic,
    rad: Dyadic,
}

fn up(rad: &Dyadic) -> Dyadic {
    rad.round_up_magnitude(RADIUS_BITS)
}

impl ApproxReal {
    /// Ball with the given midpoint and radius. The radius is rounded outward
    /// and its sign ignored.
    pub fn new(mid: Dyadic, rad: Dyadic) -> Self {
        ApproxReal { mid, rad: up(&rad.abs()) }
    }

    pub fn exact(mid: Dyadic) -> Self {
        ApproxReal { mid, rad: Dyadic::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::exact(Dyadic::from_int(n))
    }

    /// Enclose `q` with absolute error at most `2^-abs_bits`.
    pub fn from_rational(q: &ExactRational, abs_bits: i64) -> Self {
        let (mid, err) = Dyadic::from_rational(q, -abs_bits - 1);
        ApproxReal::new(mid, err)
    }

    /// Enclose `q` with relative error at most `2^-prec`.
    pub fn from_rational_rel(q: &ExactRational, prec: u32) -> Self {
        if q.is_zero() {
            return Self::from_int(0);
        }
        let lg = q.numer().bits() as i64 - q.denom().bits() as i64;
        Self::from_rational(q, prec as i64 + 1 - lg)
    }

    pub fn value(&self) -> &Dyadic {
        &self.mid
    }

    pub fn abs_error(&self) -> &Dyadic {
        &self.rad
    }

    pub fn lower(&self) -> Dyadic {
        &self.mid - &self.rad
    }

    pub fn upper(&self) -> Dyadic {
        &self.mid + &self.rad
    }

    pub fn to_f64(&self) -> f64 {
        self.mid.to_f64()
    }

    pub fn is_positive(&self) -> bool {
        self.lower() > Dyadic::zero()
    }

    pub fn contains_rational(&self, q: &ExactRational) -> bool {
        let d = (self.mid.to_rational() - q).abs();
        d <= self.rad.to_rational()
    }

    /// `other` lies entirely inside `self`.
    pub fn contains(&self, other: &ApproxReal) -> bool {
        self.lower() <= other.lower() && other.upper() <= self.upper()
    }

    pub fn overlaps(&self, other: &ApproxReal) -> bool {
        self.lower() <= other.upper() && other.lower() <= self.upper()
    }

    /// Round the midpoint to `prec` significant bits, absorbing the change into the radius.
    pub fn round(&self, prec: u32) -> Self {
        let (mid, err) = self.mid.round_significant(prec);
        ApproxReal::new(mid, &self.rad + &err)
    }

    /// Round the midpoint to a multiple of `2^e`.
    pub fn round_abs(&self, e: i64) -> Self {
        let (mid, err) = self.mid.round_to(e);
        ApproxReal::new(mid, &self.rad + &err)
    }

    /// Replace the radius by `rad`, which must not be smaller than the current one.
    pub fn widen_to(&self, rad: Dyadic) -> Self {
        debug_assert!(rad >= self.rad);
        ApproxReal::new(self.mid.clone(), rad.max(self.rad.clone()))
    }

    pub fn mul(&self, other: &ApproxReal, prec: u32) -> Self {
        let mid = &self.mid * &other.mid;
        let rad = &(&(&self.mid.abs() * &other.rad) + &(&other.mid.abs() * &self.rad))
            + &(&self.rad * &other.rad);
        ApproxReal::new(mid, rad).round(prec)
    }

    pub fn mul_rational(&self, q: &ExactRational, prec: u32) -> Self {
        self.mul(&ApproxReal::from_rational_rel(q, prec + 2), prec)
    }

    pub fn div(&self, other: &ApproxReal, prec: u32) -> Result<Self> {
        let den_abs = other.mid.abs();
        if den_abs <= other.rad {
            return Err(Error::DivisionByZero);
        }
        let a = self.mid.to_rational();
        let b = other.mid.to_rational();
        let quot = &a / &b;
        // |x/y - a/b| <= (r_x + |a/b| r_y) / (|b| - r_y)
        let spread = (self.rad.to_rational() + quot.abs() * other.rad.to_rational())
            / (den_abs.to_rational() - other.rad.to_rational());
        let lg = if quot.is_zero() {
            0
        } else {
            quot.numer().bits() as i64 - quot.denom().bits() as i64
        };
        let e = lg - prec as i64 - 1;
        let (mid, err) = Dyadic::from_rational(&quot, e);
        let rad = &Dyadic::ceil_rational(&spread, e - RADIUS_BITS as i64) + &err;
        Ok(ApproxReal::new(mid, rad))
    }

    pub fn recip(&self, prec: u32) -> Result<Self> {
        ApproxReal::from_int(1).div(self, prec)
    }

    /// Integer power; negative exponents go through a reciprocal.
    pub fn powi(&self, k: i64, prec: u32) -> Result<Self> {
        let work = prec + 2 * (64 - k.unsigned_abs().leading_zeros()) + 4;
        let mut base = self.clone();
        let mut acc = ApproxReal::from_int(1);
        let mut e = k.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, work);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base, work);
            }
        }
        if k < 0 {
            acc.recip(prec)
        } else {
            Ok(acc.round(prec))
        }
    }

    /// Square root of a ball whose lower end is strictly positive.
    pub fn sqrt(&self, prec: u32) -> Result<Self> {
        let lo = self.lower();
        if lo <= Dyadic::zero() {
            return Err(Error::NegativeSqrt);
        }
        // isqrt of mid scaled to an even exponent with enough bits
        let mb = self.mid.magnitude_bound().unwrap_or(0);
        let mut e = mb - 2 * (prec as i64 + 4);
        if e.rem_euclid(2) != 0 {
            e -= 1;
        }
        let scaled = if self.mid.exponent() >= e {
            self.mid.mantissa() << (self.mid.exponent() - e) as usize
        } else {
            self.mid.mantissa() >> (e - self.mid.exponent()) as usize
        };
        // scaled*2^e <= mid < (scaled+1)*2^e, s = floor(sqrt(scaled))
        let s = scaled.sqrt();
        let root = Dyadic::new(s.clone(), e / 2);
        // sqrt(mid) lies in [s, s + 1) * 2^(e/2)
        let trunc = Dyadic::pow2(e / 2);
        // |sqrt(x) - sqrt(mid)| <= r / sqrt(lo), and sqrt(lo) >= isqrt-based floor of lo
        let lo_root = isqrt_floor(&lo, prec);
        if lo_root.is_zero() {
            return Err(Error::NegativeSqrt);
        }
        let spread = self.rad.to_rational() / lo_root.to_rational();
        let spread = Dyadic::ceil_rational(&spread, e / 2 - RADIUS_BITS as i64);
        Ok(ApproxReal::new(root, &trunc + &spread))
    }

    /// Decimal rendering of the midpoint with `digits` significant digits.
    pub fn value_string(&self, digits: usize) -> String {
        self.mid.to_scientific(digits, false)
    }

    /// The radius rounded up to two significant decimal digits.
    pub fn error_string(&self) -> String {
        self.rad.to_scientific(2, true)
    }
}

/// A dyadic lower bound on `sqrt(x)` for `x > 0`.
fn isqrt_floor(x: &Dyadic, prec: u32) -> Dyadic {
    let mb = x.magnitude_bound().unwrap_or(0);
    let mut e = mb - 2 * (prec as i64 + 4);
    if e.rem_euclid(2) != 0 {
        e -= 1;
    }
    let scaled: BigInt = if x.exponent() >= e {
        x.mantissa() << (x.exponent() - e) as usize
    } else {
        x.mantissa() >> (e - x.exponent()) as usize
    };
    Dyadic::new(scaled.sqrt(), e / 2)
}

impl Add for &ApproxReal {
    type Output = ApproxReal;
    fn add(self, rhs: &ApproxReal) -> ApproxReal {
        ApproxReal::new(&self.mid + &rhs.mid, &self.rad + &rhs.rad)
    }
}

impl Sub for &ApproxReal {
    type Output = ApproxReal;
    fn sub(self, rhs: &ApproxReal) -> ApproxReal {
        ApproxReal::new(&self.mid - &rhs.mid, &self.rad + &rhs.rad)
    }
}

impl Neg for &ApproxReal {
    type Output = ApproxReal;
    fn neg(self) -> ApproxReal {
        ApproxReal { mid: -&self.mid, rad: self.rad.clone() }
    }
}

impl fmt::Display for ApproxReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ± {}", self.value_string(20), self.error_string())
    }
}
