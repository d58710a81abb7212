//! Exact Fourier coefficients of the degree-2 Siegel Eisenstein series, its
//! restriction to h^1 x h^1, and the q1 q2 q3 coefficients of the degree-3
//! restriction that drive the α_k derivation.

use num_integer::Integer;

use crate::bernoulli::{bernoulli_number, cohen_h};
use crate::exact::Rational;
use crate::{Error, Result};

/// Half-integral symmetric 2x2 index T = (a, b/2; b/2, c) stored as the
/// integer triple (a, b, c).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HalfIntegralIndex {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl HalfIntegralIndex {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        HalfIntegralIndex { a, b, c }
    }

    /// det(2T) = 4ac - b².
    pub fn det4(&self) -> i64 {
        4 * self.a * self.c - self.b * self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0 && self.c == 0
    }

    pub fn is_positive_semidefinite(&self) -> bool {
        self.a >= 0 && self.c >= 0 && self.det4() >= 0
    }

    /// gcd(a, b, c); zero for the zero index.
    pub fn content(&self) -> u64 {
        self.a
            .unsigned_abs()
            .gcd(&self.b.unsigned_abs())
            .gcd(&self.c.unsigned_abs())
    }
}

/// Fourier coefficient A_{2,k}(T) of the degree-2 Siegel Eisenstein series:
/// 1 for T = 0, and otherwise the Eichler-Zagier divisor sum
/// (2/(ζ(3-2k)ζ(1-k))) Σ_{d | content(T)} d^{k-1} H(k-1, det(2T)/d²).
///
/// The T = 0 case is special-cased because the divisor sum over d | (0,0,0)
/// is ill-defined; rank-1 indices flow through H(k-1, 0) = ζ(3-2k).
pub fn siegel_a2k(k: u32, t: &HalfIntegralIndex) -> Result<Rational> {
    if k < 4 || k % 2 != 0 {
        return Err(Error::InvalidWeight {
            k: k as i64,
            reason: "degree-2 Eisenstein coefficients need even k >= 4",
        });
    }
    if !t.is_positive_semidefinite() {
        return Err(Error::IndefiniteIndex {
            a: t.a,
            b: t.b,
            c: t.c,
        });
    }
    if t.is_zero() {
        return Ok(Rational::one());
    }
    // 2/(zeta(3-2k) zeta(1-k)) with zeta(1-k) = -B_k/k, zeta(3-2k) = -B_{2k-2}/(2k-2)
    let zeta_1mk = (-bernoulli_number(k)).div(&Rational::from_integer(k as i64))?;
    let zeta_3m2k =
        (-bernoulli_number(2 * k - 2)).div(&Rational::from_integer(2 * k as i64 - 2))?;
    let prefactor = Rational::from_integer(2).div(&(zeta_3m2k * zeta_1mk))?;

    let det4 = t.det4();
    let content = t.content() as i64;
    let mut sum = Rational::zero();
    for d in 1..=content {
        if content % d != 0 {
            continue;
        }
        let h = cohen_h(k - 1, det4 / (d * d))?;
        sum += &(Rational::from_integer(d).pow(k as i32 - 1)? * h);
    }
    Ok(prefactor * sum)
}

/// Coefficient of q2^{n2} q3^{n3} in the restriction of E_{2,k} to
/// h^1 x h^1: the sum of A_{2,k} over all b with b² <= 4 n2 n3.
pub fn e2_restricted_coef(k: u32, n2: u64, n3: u64) -> Result<Rational> {
    let bound = ((4 * n2 * n3) as f64).sqrt() as i64 + 1;
    let mut sum = Rational::zero();
    for b in -bound..=bound {
        let t = HalfIntegralIndex::new(n2 as i64, b, n3 as i64);
        if t.det4() < 0 {
            continue;
        }
        sum += &siegel_a2k(k, &t)?;
    }
    Ok(sum)
}

/// Coefficient of the q1 q2 q3 term of the degree-3 Siegel Eisenstein series
/// restricted to the diagonal, as the closed form
///
/// -2³k/B_k
///   + (2³k(k-1)/(B_k B_{2k-2})) (2³ H(k-1,3) + 3 H(k-1,4))
///   + ((-1)^{k/2} 2³ k(k-1)/|B_k B_{2k-2}|) (2^{2k-4} + 2·3^{k-1} + 2^{k+2} - 23)
pub fn e3_q1q2q3_coef(k: u32) -> Result<Rational> {
    if k < 12 || k % 2 != 0 {
        return Err(Error::InvalidWeight {
            k: k as i64,
            reason: "the q1q2q3 coefficient is used for even k >= 12",
        });
    }
    let bk = bernoulli_number(k);
    let b2 = bernoulli_number(2 * k - 2);
    let h3 = cohen_h(k - 1, 3)?;
    let h4 = cohen_h(k - 1, 4)?;
    let sign = if (k / 2) % 2 == 0 { 1 } else { -1 };

    let eight_k = Rational::from_integer(8 * k as i64);
    let k_minus_1 = Rational::from_integer(k as i64 - 1);

    let term1 = (-&eight_k).div(&bk)?;
    let term2 = (&eight_k * &k_minus_1).div(&(&bk * &b2))?
        * (Rational::from_integer(8) * h3 + Rational::from_integer(3) * h4);
    let power_sum = Rational::from_integer(2).pow(2 * k as i32 - 4)?
        + Rational::from_integer(2) * Rational::from_integer(3).pow(k as i32 - 1)?
        + Rational::from_integer(2).pow(k as i32 + 2)?
        - Rational::from_integer(23);
    let term3 = (Rational::from_integer(sign) * &eight_k * &k_minus_1)
        .div(&(&bk * &b2).abs())?
        * power_sum;

    Ok(term1 + term2 + term3)
}

/// Coefficient of q1 q2 q3 in E_{1,k}(z1) E_{2,k}(z2, z3):
/// (4/(ζ(3-2k)ζ(1-k)²)) Σ_{b=-2}^{2} H(k-1, 4-b²).
pub fn e1e2_q1q2q3_coef(k: u32) -> Result<Rational> {
    if k < 12 || k % 2 != 0 {
        return Err(Error::InvalidWeight {
            k: k as i64,
            reason: "the q1q2q3 coefficient is used for even k >= 12",
        });
    }
    let zeta_1mk = (-bernoulli_number(k)).div(&Rational::from_integer(k as i64))?;
    let zeta_3m2k =
        (-bernoulli_number(2 * k - 2)).div(&Rational::from_integer(2 * k as i64 - 2))?;
    let mut h_sum = Rational::zero();
    for b in -2i64..=2 {
        h_sum += &cohen_h(k - 1, 4 - b * b)?;
    }
    Rational::from_integer(4).div(&(zeta_3m2k * zeta_1mk.pow(2)?))
        .map(|pref| pref * h_sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::{eisenstein_qexp, sigma_power};

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q).unwrap()
    }

    #[test]
    fn constant_term_is_one() {
        for k in [4u32, 12, 22] {
            assert_eq!(
                siegel_a2k(k, &HalfIntegralIndex::new(0, 0, 0)).unwrap(),
                Rational::one()
            );
        }
    }

    #[test]
    fn rank_one_index_matches_eisenstein_coefficient() {
        // A_{2,12}((1,0,0)) = 2/zeta(-11) = q^1 coefficient of E_{1,12}
        assert_eq!(
            siegel_a2k(12, &HalfIntegralIndex::new(1, 0, 0)).unwrap(),
            r(65520, 691)
        );
    }

    #[test]
    fn phi_compatibility_with_degree_one() {
        // A_{2,k}((n,0,0)) = (2/zeta(1-k)) sigma_{k-1}(n)
        for k in (12..=22).step_by(2) {
            let e1 = eisenstein_qexp(k, 21).unwrap();
            for n in 1..=20u64 {
                let t = HalfIntegralIndex::new(n as i64, 0, 0);
                assert_eq!(
                    siegel_a2k(k, &t).unwrap(),
                    e1.coeff(n as usize).clone(),
                    "k={k}, n={n}"
                );
                // and the divisor-sum shape directly
                let factor = e1.coeff(1).clone();
                let expected = factor
                    * Rational::from_bigint(sigma_power(k - 1, n).unwrap());
                assert_eq!(siegel_a2k(k, &t).unwrap(), expected);
            }
        }
    }

    #[test]
    fn unimodular_invariance_at_unit_indices() {
        for k in (12..=22).step_by(2) {
            let plus = siegel_a2k(k, &HalfIntegralIndex::new(1, 1, 1)).unwrap();
            let minus = siegel_a2k(k, &HalfIntegralIndex::new(1, -1, 1)).unwrap();
            assert_eq!(plus, minus);
        }
    }

    #[test]
    fn a2k_unit_index_frozen_value() {
        // 2 H(11,3) / (zeta(-21) zeta(-11)); frozen from the exact oracle
        assert_eq!(
            siegel_a2k(12, &HalfIntegralIndex::new(1, 1, 1)).unwrap(),
            r(22266840960, 53678953)
        );
    }

    #[test]
    fn indefinite_index_rejected() {
        let t = HalfIntegralIndex::new(1, 3, 1);
        assert_eq!(
            siegel_a2k(12, &t),
            Err(Error::IndefiniteIndex { a: 1, b: 3, c: 1 })
        );
        assert!(siegel_a2k(12, &HalfIntegralIndex::new(-1, 0, 0)).is_err());
    }

    #[test]
    fn content_and_det() {
        assert_eq!(HalfIntegralIndex::new(2, 4, 6).content(), 2);
        assert_eq!(HalfIntegralIndex::new(1, 2, 1).det4(), 0);
        assert_eq!(HalfIntegralIndex::new(1, 1, 1).det4(), 3);
        assert_eq!(HalfIntegralIndex::new(1, 0, 1).det4(), 4);
    }

    #[test]
    fn content_divisor_sum_with_nontrivial_content() {
        // T = (2,0,2): content 2, det(2T) = 16, divisors d in {1,2}:
        // H(11,16) falls outside the supported index set, so this errors —
        // and T = (2,2,2) with det 12 does too. Supported larger-content case:
        // T = (2,0,0) rank one.
        assert!(siegel_a2k(12, &HalfIntegralIndex::new(2, 0, 2)).is_err());
        assert!(siegel_a2k(12, &HalfIntegralIndex::new(2, 0, 0)).is_ok());
    }

    #[test]
    fn restricted_coef_cases() {
        assert_eq!(e2_restricted_coef(12, 0, 0).unwrap(), Rational::one());
        assert_eq!(e2_restricted_coef(12, 1, 0).unwrap(), r(65520, 691));
        // five-term b-sum at (1,1), frozen from the exact oracle
        assert_eq!(e2_restricted_coef(12, 1, 1).unwrap(), r(511512019200, 53678953));
    }

    #[test]
    fn e3_frozen_regression_value() {
        assert_eq!(e3_q1q2q3_coef(12).unwrap(), r(54446805504000, 53678953));
        assert!(e3_q1q2q3_coef(10).is_err());
        assert!(e3_q1q2q3_coef(13).is_err());
    }

    #[test]
    fn e1e2_frozen_regression_value() {
        assert_eq!(
            e1e2_q1q2q3_coef(12).unwrap(),
            r(33514267497984000, 37092156523)
        );
    }

    #[test]
    fn weight_14_coefficients_coincide() {
        // no cusp forms of weight 14, so the cuspidal part vanishes
        assert_eq!(e3_q1q2q3_coef(14).unwrap(), e1e2_q1q2q3_coef(14).unwrap());
    }

    #[test]
    fn e1e2_two_route_equality() {
        // formula route vs product of coefficient extractions
        for k in (12..=40).step_by(2) {
            let zeta_1mk = (-bernoulli_number(k)).div(&Rational::from_integer(k as i64)).unwrap();
            let q1_coef = Rational::from_integer(2).div(&zeta_1mk).unwrap();
            let product_route = q1_coef * e2_restricted_coef(k, 1, 1).unwrap();
            assert_eq!(e1e2_q1q2q3_coef(k).unwrap(), product_route, "k={k}");
        }
    }
}
