//! Bernoulli numbers over exact rationals.
//!
//! The convention throughout is `B_1 = -1/2`. Values come from the defining
//! recurrence `sum_{j=0}^{m} C(m+1, j) B_j = 0`, memoized in a process-wide
//! table. An independent route through the tangent numbers is kept alongside
//! so the two can be checked against each other.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{binomial, ExactRational};

/// Anything that can hand out Bernoulli numbers.
///
/// Formulas that consume `B_k` accept a source so that a deliberately broken
/// table can be pushed through them by the self-check harness.
pub trait BernoulliSource: Send + Sync {
    fn bernoulli(&self, k: u32) -> ExactRational;
}

/// The memoized recurrence. This is the source used by default everywhere.
#[derive(Debug, Clone, Copy, Default)]
pub struct Recurrence;

/// Bernoulli numbers via the Brent–Harvey tangent-number table.
///
/// Slower to grow incrementally, but shares no code with [`Recurrence`].
#[derive(Debug, Clone, Copy, Default)]
pub struct TangentNumbers;

static TABLE: Mutex<Vec<ExactRational>> = Mutex::new(Vec::new());

/// `B_k` with `B_1 = -1/2`.
pub fn bernoulli(k: u32) -> ExactRational {
    Recurrence.bernoulli(k)
}

impl BernoulliSource for Recurrence {
    fn bernoulli(&self, k: u32) -> ExactRational {
        if k == 1 {
            return ExactRational::new((-1).into(), 2.into());
        }
        if k % 2 == 1 {
            return ExactRational::zero();
        }
        let k = k as usize;
        // A poisoned lock only means another thread panicked mid-extend; every
        // entry already pushed is complete, so keep going with what is there.
        let mut table = TABLE.lock().unwrap_or_else(|e| e.into_inner());
        if table.is_empty() {
            table.push(ExactRational::one());
            table.push(ExactRational::new((-1).into(), 2.into()));
        }
        while table.len() <= k {
            let m = table.len();
            let mut acc = ExactRational::zero();
            for (j, b) in table.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                acc += b * ExactRational::from_integer(binomial(m as u64 + 1, j as u64).into());
            }
            let next = -acc / ExactRational::from_integer(BigInt::from(m + 1));
            table.push(next);
        }
        table[k].clone()
    }
}

impl BernoulliSource for TangentNumbers {
    fn bernoulli(&self, k: u32) -> ExactRational {
        match k {
            0 => return ExactRational::one(),
            1 => return ExactRational::new((-1).into(), 2.into()),
            _ if k % 2 == 1 => return ExactRational::zero(),
            _ => {}
        }
        let half = (k / 2) as usize;
        let tangent = tangent_numbers(half);
        let t = &tangent[half];
        // B_{2n} = (-1)^{n-1} 2n T_n / (2^{2n} (2^{2n} - 1))
        let pow = BigInt::one() << (2 * half);
        let den = &pow * (&pow - BigInt::one());
        let num = BigInt::from(2 * half) * t;
        let value = ExactRational::new(num, den);
        if half % 2 == 1 {
            value
        } else {
            -value
        }
    }
}

/// Tangent numbers `T_1..=T_n` (index 0 unused), integer-only.
fn tangent_numbers(n: usize) -> Vec<BigInt> {
    let mut t = vec![BigInt::zero(); n + 1];
    if n == 0 {
        return t;
    }
    t[1] = BigInt::one();
    for k in 2..=n {
        t[k] = BigInt::from(k - 1) * &t[k - 1];
    }
    for k in 2..=n {
        for j in k..=n {
            t[j] = BigInt::from(j - k) * &t[j - 1] + BigInt::from(j - k + 2) * &t[j];
        }
    }
    debug_assert!(t.iter().skip(1).all(|x| x.is_positive()));
    t
}
