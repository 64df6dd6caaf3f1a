//! Exact integer and rational plumbing.

mod bernoulli;
mod factor;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed};

pub use bernoulli::{bernoulli, BernoulliSource, Recurrence, TangentNumbers};
pub use factor::{factorize, format_factored, Factorization, PrimePower};

/// Arbitrary-size rational, always in lowest terms with a positive
/// denominator (guaranteed by `num_rational`).
pub type ExactRational = BigRational;

/// `C(m, j)`, zero when `j > m`.
pub fn binomial(m: u64, j: u64) -> BigUint {
    if j > m {
        return BigUint::from(0u32);
    }
    let j = j.min(m - j);
    let mut acc = BigUint::one();
    for i in 0..j {
        // acc * (m - i) is divisible by (i + 1) at every step
        acc = acc * BigUint::from(m - i) / BigUint::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// `zeta(2j) = c * pi^(2j)`; returns `(c, 2j)` with `c = 2^(2j-1) |B_2j| / (2j)!`.
///
/// # Panics
/// If `j == 0`.
pub fn zeta_even_exact(j: u32) -> (ExactRational, i64) {
    zeta_even_exact_with(&Recurrence, j)
}

pub fn zeta_even_exact_with(source: &dyn BernoulliSource, j: u32) -> (ExactRational, i64) {
    assert!(j >= 1, "zeta(2j) needs j >= 1");
    let b = source.bernoulli(2 * j).abs();
    let pow = BigInt::one() << (2 * j - 1);
    let fact = BigInt::from(factorial(2 * j as u64));
    (b * ExactRational::new(pow, fact), 2 * j as i64)
}

#[cfg(test)]
pub(crate) fn ratio(n: i64, d: i64) -> ExactRational {
    ExactRational::new(n.into(), d.into())
}
