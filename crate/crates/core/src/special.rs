//! Exact zeta special values and the weighted-average constant α_k, computed
//! by two independent routes, plus the exact table emitters.
//!
//! Route one ("direct") evaluates a single rearranged closed form in
//! Bernoulli numbers and class numbers. Route two ("pieces") assembles the
//! same constant from the q1 q2 q3 coefficient operations in [`crate::siegel`]
//! together with exact even zeta values. The two routes agreeing exactly is
//! the central algebraic regression check of the crate.

use serde::Serialize;

use crate::bernoulli::{bernoulli_number, cohen_h, factorial};
use crate::exact::{PiMonomial, Rational};
use crate::factor::FactoredPiMonomial;
use crate::siegel::{e1e2_q1q2q3_coef, e3_q1q2q3_coef};
use crate::{Error, Result};

/// ζ(m) for negative odd m, via ζ(-n) = -B_{n+1}/(n+1).
pub fn zeta_exact_negative_odd(m: i64) -> Result<Rational> {
    if m >= 0 || m % 2 == 0 {
        return Err(Error::InvalidArgument {
            value: m,
            reason: "exact zeta here takes negative odd arguments only",
        });
    }
    let n = (-m) as u32;
    (-bernoulli_number(n + 1)).div(&Rational::from_integer(n as i64 + 1))
}

/// ζ(2n) = (-1)^{n+1} (2π)^{2n} B_{2n} / (2 (2n)!) as an exact π-monomial
/// with exponent 2n.
pub fn zeta_exact_even(n: u32) -> PiMonomial {
    assert!(n >= 1, "zeta_exact_even takes n >= 1 (meaning zeta(2n))");
    let sign = if n % 2 == 1 { 1 } else { -1 };
    let coeff = (Rational::from_integer(sign) * Rational::from_integer(2).pow(2 * n as i32 - 1).expect("2 != 0")
        * bernoulli_number(2 * n))
    .div(&Rational::from_bigint(factorial(2 * n as u64)))
    .expect("factorial is nonzero");
    PiMonomial::new(coeff, 2 * n)
}

/// Which evaluation route produced an [`AlphaResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AlphaRoute {
    Direct,
    Pieces,
}

/// The weighted-average constant α_k with its route tag. Nonzero values
/// always carry π-exponent 3k-3; α_14 = 0.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlphaResult {
    pub k: u32,
    pub value: PiMonomial,
    pub route: AlphaRoute,
}

fn check_weight(k: u32) -> Result<()> {
    if k < 12 || k % 2 != 0 {
        return Err(Error::InvalidWeight {
            k: k as i64,
            reason: "alpha_k is defined for even k >= 12",
        });
    }
    Ok(())
}

/// α_k by the rearranged closed form
///
/// ```text
/// 2^{4k-4} k pi^{3k-3}
/// --------------------  [ -k(k-1)/B_k * Σ_{b=-2..2} H(k-1, 4-b²)
///  (k-1)! (2k-2)!          + B_{2k-2}
///                          + (k-1)(2^{2k-4} + 2·3^{k-1} + 2^{k+2} - 23
///                                  - 2³ H(k-1,3) - 3 H(k-1,4)) ]
/// ```
pub fn alpha_direct(k: u32) -> Result<AlphaResult> {
    check_weight(k)?;
    let bk = bernoulli_number(k);
    let b2 = bernoulli_number(2 * k - 2);
    let h3 = cohen_h(k - 1, 3)?;
    let h4 = cohen_h(k - 1, 4)?;
    let h0 = cohen_h(k - 1, 0)?;
    let h_sum = Rational::from_integer(2) * h0
        + Rational::from_integer(2) * &h3
        + &h4;

    let power_sum = Rational::from_integer(2).pow(2 * k as i32 - 4)?
        + Rational::from_integer(2) * Rational::from_integer(3).pow(k as i32 - 1)?
        + Rational::from_integer(2).pow(k as i32 + 2)?
        - Rational::from_integer(23);
    let kk = k as i64;
    let bracket = (Rational::from_integer(-kk * (kk - 1)).div(&bk)?) * h_sum
        + b2
        + Rational::from_integer(kk - 1)
            * (power_sum - Rational::from_integer(8) * h3 - Rational::from_integer(3) * h4);

    let prefactor = (Rational::from_integer(2).pow(4 * k as i32 - 4)?
        * Rational::from_integer(kk))
    .div(&Rational::from_bigint(
        factorial(k as u64 - 1) * factorial(2 * k as u64 - 2),
    ))?;

    Ok(AlphaResult {
        k,
        value: PiMonomial::new(prefactor * bracket, 3 * k - 3),
        route: AlphaRoute::Direct,
    })
}

/// α_k assembled from the diagonal-restriction coefficients:
/// (e3 - e1e2) · k · ζ(k) · ζ(2k-2) · (-1)^{k/2} · 2^{k-3} / π.
///
/// The odd zeta value ζ(k-1) cancels in this assembly, so the result is a
/// pure π-monomial; the single division by π lands the exponent on
/// k + (2k-2) - 1 = 3k-3.
pub fn alpha_from_pieces(k: u32) -> Result<AlphaResult> {
    check_weight(k)?;
    let diff = e3_q1q2q3_coef(k)? - e1e2_q1q2q3_coef(k)?;
    let sign = if (k / 2) % 2 == 0 { 1 } else { -1 };
    let scalar = diff
        * Rational::from_integer(k as i64)
        * Rational::from_integer(sign)
        * Rational::from_integer(2).pow(k as i32 - 3)?;
    let value = zeta_exact_even(k / 2)
        .mul(&zeta_exact_even(k - 1))
        .scale(&scalar)
        .div_by_pi()?;
    Ok(AlphaResult {
        k,
        value,
        route: AlphaRoute::Pieces,
    })
}

/// One row of the generalized-class-number table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Table1Row {
    pub k: u32,
    pub h3: Rational,
    pub h4: Rational,
}

/// One row of the α_k table, with the factored rendering.
#[derive(Debug, Clone, Serialize)]
pub struct Table2Row {
    pub k: u32,
    pub alpha: PiMonomial,
    #[serde(serialize_with = "serialize_factored")]
    pub factored: FactoredPiMonomial,
}

fn serialize_factored<S: serde::Serializer>(
    f: &FactoredPiMonomial,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&f.to_string())
}

/// Rows (k, H(k-1,3), H(k-1,4)) for each k in `ks`.
pub fn emit_table1(ks: &[u32]) -> Result<Vec<Table1Row>> {
    ks.iter()
        .map(|&k| {
            check_weight(k)?;
            Ok(Table1Row {
                k,
                h3: cohen_h(k - 1, 3)?,
                h4: cohen_h(k - 1, 4)?,
            })
        })
        .collect()
}

/// Rows (k, α_k) for each k in `ks`, with α_k rendered as factored integers
/// times the π-power.
pub fn emit_table2(ks: &[u32]) -> Result<Vec<Table2Row>> {
    ks.iter()
        .map(|&k| {
            let alpha = alpha_direct(k)?.value;
            let factored = FactoredPiMonomial::from_monomial(&alpha);
            Ok(Table2Row { k, alpha, factored })
        })
        .collect()
}
