use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ball::ApproxReal;
use super::dyadic::Dyadic;

/// `arctan(1/x) * 2^w` in fixed point, with an error bound in units of `2^-w`.
fn arctan_recip(x: u64, w: u64) -> (BigInt, u64) {
    let x2 = BigInt::from(x) * BigInt::from(x);
    // each power carries < 2 ulp of truncation error; each quotient adds one more
    let mut power = (BigInt::one() << w as usize) / BigInt::from(x);
    let mut sum = power.clone();
    let mut k = 1u64;
    loop {
        power /= &x2;
        if power.is_zero() {
            break;
        }
        let term = &power / BigInt::from(2 * k + 1);
        if k % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        k += 1;
    }
    // k terms at < 3 ulp each, plus the alternating tail (< 2 ulp)
    (sum, 3 * k + 2)
}

/// Machin: `pi = 16 arctan(1/5) - 4 arctan(1/239)`, enclosed at about `w` bits.
pub(crate) fn pi_ball(w: u64) -> ApproxReal {
    let (a, ea) = arctan_recip(5, w);
    let (b, eb) = arctan_recip(239, w);
    let mid = BigInt::from(16) * a - BigInt::from(4) * b;
    let err = 16 * ea + 4 * eb;
    ApproxReal::new(
        Dyadic::new(mid, -(w as i64)),
        Dyadic::new(BigInt::from(err), -(w as i64)),
    )
}
