//! Mass of the genus of even unimodular Euclidean lattices, and its ratio to
//! the covolume of the even unimodular Lorentzian group one dimension up.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::rational::{BernoulliSource, ExactRational, Recurrence};
use crate::volume::VolumeExpression;

/// `sum 1/|O(L)|` over even unimodular lattices of rank `m`, via
/// `(|B_{m/2}|/m) prod_{j < m/2} |B_2j|/(4j)`.
pub fn mass_even_unimodular(m: i64) -> Result<ExactRational> {
    mass_even_unimodular_with(&Recurrence, m)
}

pub fn mass_even_unimodular_with(source: &dyn BernoulliSource, m: i64) -> Result<ExactRational> {
    if m < 8 || m % 8 != 0 {
        return Err(Error::Rank { m, requirement: "m must be a positive multiple of 8" });
    }
    let k = (m / 2) as u32;
    let mut mass = source.bernoulli(k).abs() / ExactRational::from_integer(m.into());
    for j in 1..k {
        mass *= source.bernoulli(2 * j).abs() / ExactRational::from_integer((4 * j).into());
    }
    Ok(mass)
}

/// `2^-r |B_{2r-2}| / |B_{r-1}| zeta(r)` for `n = 1 mod 8`, `r = (n+1)/2`.
pub fn volume_mass_ratio(n: i64) -> Result<VolumeExpression> {
    volume_mass_ratio_with(&Recurrence, n)
}

pub fn volume_mass_ratio_with(source: &dyn BernoulliSource, n: i64) -> Result<VolumeExpression> {
    if n < 9 || n.rem_euclid(8) != 1 {
        return Err(Error::Dimension { n, requirement: "n must be 1 mod 8 and at least 9" });
    }
    let r = ((n + 1) / 2) as u32;
    let c = source.bernoulli(2 * r - 2).abs() / source.bernoulli(r - 1).abs()
        / ExactRational::from_integer(BigInt::one() << r as usize);
    VolumeExpression::new(c, 0, 0, vec![r], vec![])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use crate::volume::covolume_po_even_unimodular;

    #[test]
    fn e8_mass_is_inverse_weyl_order() {
        // |W(E8)| = 2^14 3^5 5^2 7
        let weyl = (1i64 << 14) * 243 * 25 * 7;
        assert_eq!(weyl, 696_729_600);
        assert_eq!(mass_even_unimodular(8).unwrap(), ratio(1, weyl));
    }

    #[test]
    fn rank_sixteen_has_691() {
        let m = mass_even_unimodular(16).unwrap();
        assert_eq!(m.numer() % BigInt::from(691), BigInt::from(0));
        assert!(m.is_positive());
    }

    #[test]
    fn rank_errors() {
        for m in [-8, 0, 4, 12, 15] {
            assert!(mass_even_unimodular(m).is_err(), "{m}");
        }
        for n in [1, 5, 10, 13] {
            assert!(volume_mass_ratio(n).is_err(), "{n}");
        }
    }

    #[test]
    fn ratio_nine() {
        // B_8 = -1/30, B_4 = -1/30
        let e = volume_mass_ratio(9).unwrap();
        assert_eq!(e.coefficient(), &ratio(1, 32));
        assert_eq!(e.zeta_factors(), &[5]);
        assert_eq!(volume_mass_ratio(17).unwrap().zeta_factors(), &[9]);
    }

    #[test]
    fn covolume_over_mass() {
        for n in [9, 17, 25, 33] {
            let mass = mass_even_unimodular(n - 1).unwrap();
            let lhs = covolume_po_even_unimodular(n).unwrap().multiply_scalar(&mass.recip()).unwrap();
            assert_eq!(lhs, volume_mass_ratio(n).unwrap(), "n = {n}");
        }
    }
}
