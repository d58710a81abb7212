//! Floating-point L-value evaluation: Riemann and Dirichlet L-functions,
//! modular L-functions (direct sum and completed form), Rankin convolutions
//! against the theta series, and the symmetric square.
//!
//! Every result carries a conservative absolute error bound assembled from
//! the analytic tail estimate plus a rounding allowance. Summation order is
//! fixed, so values are bit-reproducible.

use crate::bernoulli::{bernoulli_number, DiscriminantCharacter};
use crate::numeric::funcs::{gamma, hurwitz_zeta_pieces, upper_incomplete_gamma};
use crate::numeric::{LValueResult, Method, NumericConfig};
use crate::qseries::{theta_qexp, QSeries, ThetaKind};
use crate::{Error, Result};

const PI: f64 = std::f64::consts::PI;

/// ζ(s) for s > 1 by Euler–Maclaurin.
pub fn zeta_num(s: f64) -> Result<LValueResult> {
    if s <= 1.0 {
        return Err(Error::NotAbsolutelyConvergent { s, min_s: 1.0 });
    }
    let (main, na, err) = hurwitz_zeta_pieces(s, 1.0);
    Ok(LValueResult {
        value: main + na.powf(1.0 - s) / (s - 1.0),
        abs_error_bound: err,
        method: Method::DirectSum,
    })
}

/// L(s, χ_D) for s > 0 via the Hurwitz decomposition
/// L(s, χ) = q^{-s} Σ_{j=1}^{q-1} χ(j) ζ(s, j/q).
///
/// The Euler–Maclaurin pole pieces are combined through expm1 so the
/// mean-zero character sum stays stable through s = 1.
pub fn dirichlet_l_num(s: f64, d: i64) -> Result<LValueResult> {
    if s <= 0.0 {
        return Err(Error::NotAbsolutelyConvergent { s, min_s: 0.0 });
    }
    let chi = DiscriminantCharacter::new(d)?;
    let q = chi.modulus() as f64;
    let mut main = 0.0;
    let mut pole_num = 0.0; // sum_j chi(j) * (na_j^{1-s} - 1), stable via expm1
    let mut log_sum = 0.0; // sum_j chi(j) * ln(na_j), the s -> 1 limit
    let mut err = 0.0;
    for j in 1..chi.modulus() {
        let c = chi.eval(j as i64);
        if c == 0 {
            continue;
        }
        let a = j as f64 / q;
        let (m, na, e) = hurwitz_zeta_pieces(s, a);
        let c = c as f64;
        main += c * m;
        pole_num += c * ((1.0 - s) * na.ln()).exp_m1();
        log_sum += c * na.ln();
        err += e;
    }
    // the character sum is mean-zero, so Σ c · na^{1-s} = Σ c · (na^{1-s} - 1)
    let pole = if (s - 1.0).abs() < 1e-12 {
        -log_sum
    } else {
        pole_num / (s - 1.0)
    };
    let scale = q.powf(-s);
    Ok(LValueResult {
        value: scale * (main + pole),
        abs_error_bound: scale * err + 1e-15,
        method: Method::DirectSum,
    })
}

/// Plain truncated Dirichlet series Σ_{n<=terms} χ(n) n^{-s}; a second
/// summation order used as a cross-check oracle (bound is the weak
/// partial-summation estimate, only useful for s > 1).
pub fn dirichlet_l_num_direct(s: f64, d: i64, terms: usize) -> Result<LValueResult> {
    let chi = DiscriminantCharacter::new(d)?;
    let mut acc = 0.0;
    for n in 1..=terms {
        let c = chi.eval(n as i64);
        if c != 0 {
            acc += c as f64 * (n as f64).powf(-s);
        }
    }
    Ok(LValueResult {
        value: acc,
        abs_error_bound: (terms as f64).powf(-s) * 2.0,
        method: Method::DirectSum,
    })
}

/// L(1-r, χ_D) by the functional equation of the completed L-function of a
/// real primitive character (conductor |D|, Γ-factor Γ((s+a)/2) with a = 1
/// for odd characters):
///
/// L(1-r, χ) = (q/π)^{r-1/2} · Γ((r+a)/2)/Γ((1-r+a)/2) · L(r, χ).
pub fn dirichlet_l_num_negative(r: u32, d: i64) -> Result<LValueResult> {
    if r == 0 {
        return Err(Error::InvalidArgument {
            value: 0,
            reason: "r must be positive",
        });
    }
    let a = if d < 0 { 1.0 } else { 0.0 };
    let rf = r as f64;
    let lr = dirichlet_l_num(rf, d)?;
    let q = d.unsigned_abs() as f64;
    let factor = (q / PI).powf(rf - 0.5) * gamma((rf + a) / 2.0) / gamma((1.0 - rf + a) / 2.0);
    Ok(LValueResult {
        value: factor * lr.value,
        abs_error_bound: factor.abs() * lr.abs_error_bound
            + 1e-12 * (factor * lr.value).abs(),
        method: Method::FunctionalEquation,
    })
}

fn coeffs_f64(f: &QSeries, limit: usize) -> Vec<f64> {
    f.coeffs()
        .iter()
        .take(limit)
        .map(|c| c.to_f64())
        .collect()
}

/// Tail bound for Σ_{n>N} n^p with p < -1.
fn power_tail(n: f64, p: f64) -> f64 {
    n.powf(p + 1.0) / (-(p + 1.0))
}

/// L(s, f) = Σ a(n) n^{-s} by direct summation, for s inside the absolutely
/// convergent range under the coefficient bound |a(n)| <= n^{(k+1)/2}
/// (divisor factor bounded crudely by n). Outside that range the caller is
/// pointed at [`completed_lambda_num`].
pub fn modular_l_num(f: &QSeries, k: u32, s: f64, config: &NumericConfig) -> Result<LValueResult> {
    let min_s = (k as f64 + 3.0) / 2.0;
    if s <= min_s {
        return Err(Error::NotAbsolutelyConvergent { s, min_s });
    }
    if f.precision() < 2 {
        return Err(Error::InsufficientPrecision {
            need: 2,
            have: f.precision(),
        });
    }
    let n_max = config.n_terms.min(f.precision() - 1);
    let a = coeffs_f64(f, n_max + 1);
    let mut acc = 0.0;
    for (n, an) in a.iter().enumerate().skip(1) {
        if *an != 0.0 {
            acc += an * (n as f64).powf(-s);
        }
    }
    let p = (k as f64 + 1.0) / 2.0 - s;
    Ok(LValueResult {
        value: acc,
        abs_error_bound: power_tail(n_max as f64, p) + 1e-15 * acc.abs() * (n_max as f64).sqrt(),
        method: Method::DirectSum,
    })
}

/// Completed Λ(s) = (2π)^{-s} Γ(s) L(s, f) via the incomplete-gamma
/// expansion
///
/// Λ(s) = Σ_n a(n) [ (2πn)^{-s} Γ(s, 2πn) + (-1)^{k/2} (2πn)^{s-k} Γ(k-s, 2πn) ],
///
/// which converges like e^{-2πn} and satisfies Λ(s) = (-1)^{k/2} Λ(k-s)
/// by construction. Valid for 0 < s < k.
pub fn completed_lambda_num(f: &QSeries, k: u32, s: f64) -> Result<LValueResult> {
    if s <= 0.0 || s >= k as f64 {
        return Err(Error::NotAbsolutelyConvergent {
            s,
            min_s: 0.0,
        });
    }
    if f.precision() < 2 {
        return Err(Error::InsufficientPrecision {
            need: 2,
            have: f.precision(),
        });
    }
    let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
    let n_max = 30.min(f.precision() - 1);
    let a = coeffs_f64(f, n_max + 1);
    let mut acc = 0.0;
    let mut last = 0.0;
    for (n, an) in a.iter().enumerate().skip(1) {
        let x = 2.0 * PI * n as f64;
        last = x.powf(-s) * upper_incomplete_gamma(s, x)
            + sign * x.powf(s - k as f64) * upper_incomplete_gamma(k as f64 - s, x);
        acc += an * last;
    }
    // terms decay faster than e^{-2pi n}; geometric majorant on the remainder
    let tail = (n_max as f64 + 1.0).powf((k as f64 + 1.0) / 2.0) * last.abs() * 2.0
        + 1e-16 * acc.abs();
    Ok(LValueResult {
        value: acc,
        abs_error_bound: tail,
        method: Method::FunctionalEquation,
    })
}

/// ζ(2s - 2k + 2)-style completion factor used by the Rankin and symmetric
/// square flags. Supports argument > 1, argument 0 (= -1/2), and negative
/// even/odd integers via Bernoulli numbers.
fn zeta_completion_factor(arg: f64) -> Result<f64> {
    if arg > 1.0 {
        return Ok(zeta_num(arg)?.value);
    }
    if arg == 0.0 {
        return Ok(-0.5);
    }
    if arg < 0.0 && arg.fract() == 0.0 {
        let n = (-arg) as u32;
        return Ok((-bernoulli_number(n + 1))
            .div(&crate::exact::Rational::from_integer(n as i64 + 1))?
            .to_f64());
    }
    Err(Error::NotAbsolutelyConvergent {
        s: arg,
        min_s: 1.0,
    })
}

/// Rankin convolution Σ_{n>=1} a(n) r_θ(n) n^{-s} against one of the two
/// theta series, optionally multiplied by ζ(2s - 2k + 2) when `zeta_factor`
/// is set. Needs s > (k+5)/2 for the crude |a(n) r(n)| <= 6 n^{(k+3)/2}
/// tail bound to converge.
pub fn rankin_l_num(
    f: &QSeries,
    k: u32,
    theta: ThetaKind,
    s: f64,
    zeta_factor: bool,
    config: &NumericConfig,
) -> Result<LValueResult> {
    let min_s = (k as f64 + 5.0) / 2.0;
    if s <= min_s {
        return Err(Error::NotAbsolutelyConvergent { s, min_s });
    }
    if f.precision() < 2 {
        return Err(Error::InsufficientPrecision {
            need: 2,
            have: f.precision(),
        });
    }
    let n_max = config.n_terms.min(f.precision() - 1);
    let a = coeffs_f64(f, n_max + 1);
    let th = theta_qexp(theta, n_max + 1);
    let r: Vec<f64> = th.coeffs().iter().map(|c| c.to_f64()).collect();
    let mut acc = 0.0;
    for n in 1..=n_max {
        if a[n] != 0.0 && r[n] != 0.0 {
            acc += a[n] * r[n] * (n as f64).powf(-s);
        }
    }
    let p = (k as f64 + 3.0) / 2.0 - s;
    let mut err = 6.0 * power_tail(n_max as f64, p) + 1e-15 * acc.abs() * (n_max as f64).sqrt();
    let mut value = acc;
    if zeta_factor {
        let z = zeta_completion_factor(2.0 * s - 2.0 * k as f64 + 2.0)?;
        value *= z;
        err *= z.abs();
    }
    Ok(LValueResult {
        value,
        abs_error_bound: err,
        method: Method::DirectSum,
    })
}

/// Symmetric square value ζ(2s-2k+2) Σ a(n²) n^{-s} (the ζ factor is the
/// default and can be turned off to expose the bare sum). Needs s > k + 2.
pub fn sym2_l_num(
    f: &QSeries,
    k: u32,
    s: f64,
    zeta_factor: bool,
    config: &NumericConfig,
) -> Result<LValueResult> {
    let min_s = k as f64 + 2.0;
    if s <= min_s {
        return Err(Error::NotAbsolutelyConvergent { s, min_s });
    }
    if f.precision() < 2 {
        return Err(Error::InsufficientPrecision {
            need: 2,
            have: f.precision(),
        });
    }
    let avail = f.precision() - 1;
    let n_max = ((avail as f64).sqrt() as usize).min(config.n_terms);
    let mut acc = 0.0;
    for n in 1..=n_max {
        let an2 = f.coeff(n * n).to_f64();
        if an2 != 0.0 {
            acc += an2 * (n as f64).powf(-s);
        }
    }
    // |a(n^2)| <= n^{k+1}
    let p = k as f64 + 1.0 - s;
    let mut err = power_tail(n_max as f64, p) + 1e-15 * acc.abs();
    let mut value = acc;
    if zeta_factor {
        let z = zeta_completion_factor(2.0 * s - 2.0 * k as f64 + 2.0)?;
        value *= z;
        err *= z.abs();
    }
    Ok(LValueResult {
        value,
        abs_error_bound: err,
        method: Method::DirectSum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernoulli::cohen_h;
    use crate::qseries::{delta_qexp, eigenform};
    use crate::special::zeta_exact_even;

    fn cfg() -> NumericConfig {
        NumericConfig::default()
    }

    #[test]
    fn zeta_matches_exact_even_values() {
        let z2 = zeta_num(2.0).unwrap();
        assert!((z2.value - PI * PI / 6.0).abs() < 1e-10);
        let z12 = zeta_num(12.0).unwrap();
        assert!((z12.value - zeta_exact_even(6).to_f64()).abs() < 1e-10);
        let big = zeta_num(60.0).unwrap();
        assert!((big.value - 1.0).abs() < 1e-15);
        assert!(zeta_num(1.0).is_err());
    }

    #[test]
    fn dirichlet_l_at_one_is_pi_over_four() {
        // Leibniz: L(1, chi_{-4}) = arctan(1) = pi/4
        let l = dirichlet_l_num(1.0, -4).unwrap();
        assert!(
            (l.value - PI / 4.0).abs() < l.abs_error_bound.max(1e-12),
            "got {} err {}",
            l.value,
            l.abs_error_bound
        );
        // and continuity just next to s = 1
        let l_eps = dirichlet_l_num(1.0 + 1e-9, -4).unwrap();
        assert!((l_eps.value - l.value).abs() < 1e-7);
    }

    #[test]
    fn dirichlet_l_two_summation_orders_agree() {
        for (s, d) in [(11.0, -4), (11.0, -3), (2.5, -4)] {
            let a = dirichlet_l_num(s, d).unwrap();
            let b = dirichlet_l_num_direct(s, d, 4000).unwrap();
            assert!(
                (a.value - b.value).abs() <= a.abs_error_bound + b.abs_error_bound,
                "s={s} d={d}: {} vs {}",
                a.value,
                b.value
            );
        }
    }

    #[test]
    fn dirichlet_l_large_s_tends_to_one() {
        let l = dirichlet_l_num(40.0, -3).unwrap();
        assert!((l.value - 1.0).abs() < 1e-11);
    }

    #[test]
    fn dirichlet_l_below_one() {
        // reference values from the Hurwitz-zeta decomposition at high precision
        for (s, d, want) in [
            (0.5, -4, 0.667691457189609177),
            (0.25, -4, 0.590723056442494732),
            (0.5, -3, 0.480867557696828626),
            (1.5, -3, 0.703968244868733262),
        ] {
            let l = dirichlet_l_num(s, d).unwrap();
            assert!(
                (l.value - want).abs() < 1e-12,
                "s={s} d={d}: {} vs {want}",
                l.value
            );
        }
        assert!(dirichlet_l_num(0.0, -4).is_err());
    }

    #[test]
    fn functional_equation_reproduces_exact_l_values() {
        for (r, d) in [(11u32, -4i64), (11, -3), (13, -3), (1, -4), (21, -4), (21, -3)] {
            let num = dirichlet_l_num_negative(r, d).unwrap();
            let exact = crate::bernoulli::dirichlet_l_exact_negative(r, d)
                .unwrap()
                .to_f64();
            let rel = (num.value - exact).abs() / exact.abs().max(1e-300);
            assert!(rel < 1e-10, "r={r} d={d}: rel {rel}");
        }
    }

    #[test]
    fn functional_equation_even_character_branch() {
        // exact oracle: B_{2,chi_5} = 5 * (4/25) = 4/5, so L(-1, chi_5) = -2/5
        let exact = crate::bernoulli::dirichlet_l_exact_negative(2, 5).unwrap();
        assert_eq!(exact, crate::exact::Rational::new(-2, 5).unwrap());
        let num = dirichlet_l_num_negative(2, 5).unwrap();
        assert!((num.value - exact.to_f64()).abs() < 1e-12, "{}", num.value);
        // odd r with an even character hits a trivial zero (up to the
        // floating-point residue of the Gamma pole)
        let zero = dirichlet_l_num_negative(11, 5).unwrap();
        assert!(zero.value.abs() < 1e-8, "{}", zero.value);
        assert!(crate::bernoulli::dirichlet_l_exact_negative(11, 5)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn degenerate_precision_is_rejected_with_finite_bounds() {
        let constant = QSeries::one(1);
        assert!(matches!(
            modular_l_num(&constant, 12, 11.0, &cfg()),
            Err(Error::InsufficientPrecision { .. })
        ));
        assert!(rankin_l_num(&constant, 12, ThetaKind::One, 11.0, false, &cfg()).is_err());
        assert!(sym2_l_num(&constant, 12, 22.0, true, &cfg()).is_err());
        assert!(completed_lambda_num(&constant, 12, 6.0).is_err());
    }

    #[test]
    fn functional_equation_matches_cohen_h() {
        // |L(1-r, chi_D) - H(r, n)|/|H| < 1e-8 for the table range
        for r in [11u32, 13, 15, 17, 19, 21] {
            for n in [3i64, 4] {
                let d = -n;
                let h = cohen_h(r, n).unwrap().to_f64();
                let l = dirichlet_l_num_negative(r, d).unwrap();
                assert!((l.value - h).abs() / h.abs() < 1e-8, "r={r} n={n}");
            }
        }
    }

    #[test]
    fn modular_l_direct_sum_and_stability() {
        let delta = delta_qexp(4001).unwrap();
        let l = modular_l_num(&delta, 12, 11.0, &cfg()).unwrap();
        assert!((l.value - 0.9894329131003376).abs() < 1e-10);
        // cutoff doubling stays within the combined bounds
        let mut small = cfg();
        small.n_terms = 500;
        let l_small = modular_l_num(&delta, 12, 11.0, &small).unwrap();
        assert!((l.value - l_small.value).abs() <= l.abs_error_bound + l_small.abs_error_bound);
        // convergence-range guard
        assert!(matches!(
            modular_l_num(&delta, 12, 7.0, &cfg()),
            Err(Error::NotAbsolutelyConvergent { .. })
        ));
        // s large: leading term 1
        let big = modular_l_num(&delta, 12, 60.0, &cfg()).unwrap();
        assert!((big.value - 1.0).abs() < 1e-14);
    }

    #[test]
    fn lambda_functional_equation_residuals() {
        let delta = delta_qexp(64).unwrap();
        for s in [6.0, 7.0, 8.0, 9.0, 10.0] {
            let a = completed_lambda_num(&delta, 12, s).unwrap();
            let b = completed_lambda_num(&delta, 12, 12.0 - s).unwrap();
            assert!(
                (a.value - b.value).abs() < 1e-6,
                "s={s}: {} vs {}",
                a.value,
                b.value
            );
        }
    }

    #[test]
    fn lambda_route_matches_direct_sum_at_eleven() {
        let delta = delta_qexp(4001).unwrap();
        let lam = completed_lambda_num(&delta, 12, 11.0).unwrap();
        let l11 = lam.value * (2.0 * PI).powf(11.0) / gamma(11.0);
        let direct = modular_l_num(&delta, 12, 11.0, &cfg()).unwrap();
        assert!(
            (l11 - direct.value).abs() < 1e-12 + direct.abs_error_bound,
            "{l11} vs {}",
            direct.value
        );
    }

    #[test]
    fn rankin_leading_term_and_flag_ratio() {
        let delta = delta_qexp(4001).unwrap();
        // s large: first Dirichlet term a(1) r(1)
        let big1 = rankin_l_num(&delta, 12, ThetaKind::One, 64.0, false, &cfg()).unwrap();
        assert!((big1.value - 4.0).abs() < 1e-12);
        let big2 = rankin_l_num(&delta, 12, ThetaKind::Two, 64.0, false, &cfg()).unwrap();
        assert!((big2.value - 6.0).abs() < 1e-12);
        // flag multiplies by zeta(2s-2k+2); at s = k-1 that is zeta(0) = -1/2
        let off = rankin_l_num(&delta, 12, ThetaKind::One, 11.0, false, &cfg()).unwrap();
        let on = rankin_l_num(&delta, 12, ThetaKind::One, 11.0, true, &cfg()).unwrap();
        assert!((on.value - off.value * -0.5).abs() < 1e-12);
        // cutoff doubling self-consistency
        let mut half = cfg();
        half.n_terms = 2000;
        let off_half = rankin_l_num(&delta, 12, ThetaKind::One, 11.0, false, &half).unwrap();
        assert!(
            (off.value - off_half.value).abs() <= off.abs_error_bound + off_half.abs_error_bound
        );
    }

    #[test]
    fn sym2_values_and_flag_ratio() {
        let delta = delta_qexp(4001).unwrap();
        let on = sym2_l_num(&delta, 12, 22.0, true, &cfg()).unwrap();
        let off = sym2_l_num(&delta, 12, 22.0, false, &cfg()).unwrap();
        let z22 = zeta_num(22.0).unwrap().value;
        assert!((on.value / off.value - z22).abs() < 1e-12);
        assert!((on.value - 0.9996457111247714).abs() < 1e-9, "{}", on.value);
        // s large tends to a(1) = 1 (zeta factor also tends to 1)
        let big = sym2_l_num(&delta, 12, 80.0, true, &cfg()).unwrap();
        assert!((big.value - 1.0).abs() < 1e-12);
        // cutoff-doubling stability
        let mut half = cfg();
        half.n_terms = 30;
        let on_half = sym2_l_num(&delta, 12, 22.0, true, &half).unwrap();
        assert!((on.value - on_half.value).abs() <= on.abs_error_bound + on_half.abs_error_bound);
    }

    #[test]
    fn eigenform_feeds_numeric_route() {
        let f = eigenform(12, 200).unwrap().unwrap();
        let l = modular_l_num(&f, 12, 11.0, &cfg()).unwrap();
        assert!((l.value - 0.9894329131003376).abs() < l.abs_error_bound + 1e-9);
    }
}
