use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::expression::VolumeExpression;
use crate::error::{Error, Result};
use crate::rational::{factorial, BernoulliSource, ExactRational, Recurrence};

fn half_plus_one(n: i64) -> u32 {
    ((n + 1) / 2) as u32
}

fn two_pow(e: u32) -> BigInt {
    BigInt::one() << e as usize
}

/// Covolume of the smallest orbifold of the Lorentzian lattice
/// `I_{n,1}`-type form `f_n`, for odd `n >= 5`.
///
/// Built as a product of `(2j-1)! zeta(2j) / (2 pi)^(2j)` factors so that the
/// even zeta values are folded by normalization, not by hand.
pub fn covolume_smallest_orbifold(n: i64) -> Result<VolumeExpression> {
    if n < 5 || n % 2 == 0 {
        return Err(Error::Dimension { n, requirement: "n must be odd and at least 5" });
    }
    let r = half_plus_one(n);
    let mut product = VolumeExpression::one();
    for j in 1..r {
        let c = ExactRational::new(factorial(2 * j as u64 - 1).into(), two_pow(2 * j));
        let factor = VolumeExpression::new(c, 0, -2 * j as i64, vec![2 * j], vec![])?;
        product = product.multiply(&factor);
    }
    let head = match n.rem_euclid(8) {
        1 => VolumeExpression::new(
            ExactRational::new(1.into(), two_pow(r - 2)),
            0,
            0,
            vec![r],
            vec![],
        )?,
        5 => {
            let num = (two_pow(r) - 1) * (two_pow(r - 1) - 1);
            let den = BigInt::from(3) * two_pow(r - 1);
            VolumeExpression::new(ExactRational::new(num, den), 0, 0, vec![r], vec![])?
        }
        // 3^(r - 1/2) = sqrt(3)^(2r - 1)
        _ => VolumeExpression::new(
            ExactRational::new(1.into(), two_pow(r - 1)),
            2 * r - 1,
            0,
            vec![],
            vec![r],
        )?,
    };
    Ok(head.multiply(&product))
}

/// Covolume of `PO(II_{n,1})` for `n = 1 mod 8`, `n >= 9`.
pub fn covolume_po_even_unimodular(n: i64) -> Result<VolumeExpression> {
    covolume_po_even_unimodular_with(&Recurrence, n)
}

/// `zeta(r) prod_{j<r} |B_2j| / (8j)` with the Bernoulli numbers from `source`.
pub fn covolume_po_even_unimodular_with(
    source: &dyn BernoulliSource,
    n: i64,
) -> Result<VolumeExpression> {
    if n < 9 || n.rem_euclid(8) != 1 {
        return Err(Error::Dimension { n, requirement: "n must be 1 mod 8 and at least 9" });
    }
    let r = half_plus_one(n);
    let mut c = ExactRational::one();
    for j in 1..r {
        c *= source.bernoulli(2 * j).abs() / ExactRational::from_integer((8 * j).into());
    }
    VolumeExpression::new(c, 0, 0, vec![r], vec![])
}

/// Volume of the 17-dimensional Coxeter polytope: twice the covolume of `PO(II_{17,1})`.
pub fn coxeter_polytope_volume_17() -> VolumeExpression {
    coxeter_polytope_volume_17_with(&Recurrence)
}

pub fn coxeter_polytope_volume_17_with(source: &dyn BernoulliSource) -> VolumeExpression {
    covolume_po_even_unimodular_with(source, 17)
        .and_then(|e| e.multiply_scalar(&ExactRational::from_integer(2.into())))
        .expect("17 = 1 mod 8")
}

/// Covolume of `PSO` of the odd unimodular lattice, `n = 5 mod 8`: three times the smallest orbifold.
pub fn covolume_pso_odd_unimodular(n: i64) -> Result<VolumeExpression> {
    if n < 5 || n.rem_euclid(8) != 5 {
        return Err(Error::Dimension { n, requirement: "n must be 5 mod 8" });
    }
    covolume_smallest_orbifold(n)?.multiply_scalar(&ExactRational::from_integer(3.into()))
}
