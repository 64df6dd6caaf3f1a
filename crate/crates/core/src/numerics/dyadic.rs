use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::ExactRational;

/// Exact binary fraction `mantissa * 2^exponent`.
#[derive(Debug, Clone)]
pub struct Dyadic {
    mantissa: BigInt,
    exponent: i64,
}

impl Dyadic {
    pub fn new(mantissa: BigInt, exponent: i64) -> Self {
        Dyadic { mantissa, exponent }
    }

    pub fn zero() -> Self {
        Dyadic::new(BigInt::zero(), 0)
    }

    pub fn from_int(n: i64) -> Self {
        Dyadic::new(n.into(), 0)
    }

    /// `2^e`
    pub fn pow2(e: i64) -> Self {
        Dyadic::new(BigInt::one(), e)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    pub fn abs(&self) -> Self {
        Dyadic::new(self.mantissa.abs(), self.exponent)
    }

    /// Smallest `k` with `|self| < 2^k`; `None` for zero.
    pub fn magnitude_bound(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.exponent + self.mantissa.bits() as i64)
        }
    }

    pub fn to_rational(&self) -> ExactRational {
        if self.exponent >= 0 {
            ExactRational::from_integer(&self.mantissa << self.exponent as usize)
        } else {
            ExactRational::new(self.mantissa.clone(), BigInt::one() << (-self.exponent) as usize)
        }
    }

    pub fn to_f64(&self) -> f64 {
        let bits = self.mantissa.bits() as i64;
        let (m, e) = if bits > 60 {
            (&self.mantissa >> (bits - 60) as usize, self.exponent + bits - 60)
        } else {
            (self.mantissa.clone(), self.exponent)
        };
        let m = m.to_f64().unwrap_or(0.0);
        // split the scaling so neither factor overflows on its own
        let half = e / 2;
        m * 2f64.powi(half as i32) * 2f64.powi((e - half) as i32)
    }

    /// Nearest multiple of `2^e` (ties away from zero) and the rounding error bound
    /// `2^(e-1)`, or zero when nothing was discarded.
    pub fn round_to(&self, e: i64) -> (Dyadic, Dyadic) {
        if self.exponent >= e {
            return (self.clone(), Dyadic::zero());
        }
        let shift = (e - self.exponent) as usize;
        let divisor = BigInt::one() << shift;
        let (q, r) = self.mantissa.abs().div_rem(&divisor);
        if r.is_zero() {
            let q = if self.is_negative() { -q } else { q };
            return (Dyadic::new(q, e), Dyadic::zero());
        }
        let q = if (&r << 1usize) >= divisor { q + 1 } else { q };
        let q = if self.is_negative() { -q } else { q };
        (Dyadic::new(q, e), Dyadic::pow2(e - 1))
    }

    /// Round to `bits` significant bits. Returns the value and an error bound.
    pub fn round_significant(&self, bits: u32) -> (Dyadic, Dyadic) {
        let len = self.mantissa.bits() as i64;
        if len <= bits as i64 {
            return (self.clone(), Dyadic::zero());
        }
        self.round_to(self.exponent + len - bits as i64)
    }

    /// An upper bound on `|self|` with at most `bits` significant bits.
    pub fn round_up_magnitude(&self, bits: u32) -> Dyadic {
        let m = self.mantissa.abs();
        let len = m.bits() as i64;
        if len <= bits as i64 {
            return Dyadic::new(m, self.exponent);
        }
        let shift = (len - bits as i64) as usize;
        let q = (m + ((BigInt::one() << shift) - 1)) >> shift;
        Dyadic::new(q, self.exponent + shift as i64)
    }

    /// Nearest multiple of `2^e` to `q`, with error bound.
    pub fn from_rational(q: &ExactRational, e: i64) -> (Dyadic, Dyadic) {
        let (mut num, mut den) = (q.numer().clone(), q.denom().clone());
        if e >= 0 {
            den <<= e as usize;
        } else {
            num <<= (-e) as usize;
        }
        let negative = num.is_negative();
        let (quot, rem) = num.abs().div_rem(&den);
        if rem.is_zero() {
            let quot = if negative { -quot } else { quot };
            return (Dyadic::new(quot, e), Dyadic::zero());
        }
        let quot = if (&rem << 1usize) >= den { quot + 1 } else { quot };
        let quot = if negative { -quot } else { quot };
        (Dyadic::new(quot, e), Dyadic::pow2(e - 1))
    }

    /// Smallest dyadic `>= q` that is a multiple of `2^e` (for radii).
    pub fn ceil_rational(q: &ExactRational, e: i64) -> Dyadic {
        let (mut num, mut den) = (q.numer().clone(), q.denom().clone());
        if e >= 0 {
            den <<= e as usize;
        } else {
            num <<= (-e) as usize;
        }
        Dyadic::new(num.div_ceil(&den), e)
    }

    fn aligned(&self, other: &Dyadic) -> (BigInt, BigInt, i64) {
        let e = self.exponent.min(other.exponent);
        let a = &self.mantissa << (self.exponent - e) as usize;
        let b = &other.mantissa << (other.exponent - e) as usize;
        (a, b, e)
    }

    /// Decimal scientific notation with `digits` significant digits.
    /// `round_up` selects ceiling of the magnitude instead of round-to-nearest.
    pub fn to_scientific(&self, digits: usize, round_up: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let digits = digits.max(1);
        let q = self.to_rational();
        let negative = q.is_negative();
        let q = q.abs();
        let bits = self.magnitude_bound().unwrap_or(1) - 1;
        let mut e10 = (bits as f64 * std::f64::consts::LOG10_2).floor() as i64;
        // fix up the float estimate so that 10^e10 <= q < 10^(e10+1)
        while pow10(e10) > q {
            e10 -= 1;
        }
        while pow10(e10 + 1) <= q {
            e10 += 1;
        }
        let scaled = q * pow10(digits as i64 - 1 - e10);
        let mut int = if round_up {
            scaled.ceil().to_integer()
        } else {
            scaled.round().to_integer()
        };
        if int.to_string().len() > digits {
            int /= BigInt::from(10);
            e10 += 1;
        }
        let s = int.to_string();
        let (lead, rest) = s.split_at(1);
        let sign = if negative { "-" } else { "" };
        if rest.is_empty() {
            format!("{sign}{lead}e{e10}")
        } else {
            format!("{sign}{lead}.{rest}e{e10}")
        }
    }
}

fn pow10(e: i64) -> ExactRational {
    let p = num_traits::pow(BigInt::from(10), e.unsigned_abs() as usize);
    if e >= 0 {
        ExactRational::from_integer(p)
    } else {
        ExactRational::new(BigInt::one(), p)
    }
}

impl PartialEq for Dyadic {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Dyadic {}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl std::ops::Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(rhs);
        Dyadic::new(a + b, e)
    }
}

impl std::ops::Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, e) = self.aligned(rhs);
        Dyadic::new(a - b, e)
    }
}

impl std::ops::Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(&self.mantissa * &rhs.mantissa, self.exponent + rhs.exponent)
    }
}

impl std::ops::Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic::new(-&self.mantissa, self.exponent)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_scientific(20, false))
    }
}
