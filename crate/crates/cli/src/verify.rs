//! The exact and numeric verification suites behind `verify`. Each check
//! prints one line with the measured quantity; any failure flips the exit
//! code to 1.

use pullback_core::bernoulli::{cohen_h, kronecker_symbol};
use pullback_core::exact::Rational;
use pullback_core::numeric::{
    completed_lambda_num, dirichlet_l_num, dirichlet_l_num_negative, gamma, modular_l_num,
    petersson_norm_num, rankin_l_num, sym2_l_num, theorem_check_num, zeta_num, NumericConfig,
    TheoremReport,
};
use pullback_core::qseries::{delta_qexp, eisenstein_qexp, sigma_power, theta_qexp, ThetaKind};
use pullback_core::siegel::{e1e2_q1q2q3_coef, e2_restricted_coef, siegel_a2k, HalfIntegralIndex};
use pullback_core::special::{alpha_direct, alpha_from_pieces, emit_table2};
use serde::Serialize;

#[derive(Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn check(name: &'static str, pass: bool, detail: String) -> CheckResult {
    CheckResult { name, pass, detail }
}

fn published_table1() -> [(u32, &'static str, &'static str); 6] {
    [
        (12, "-3694/3", "-50521/2"),
        (14, "111202/3", "2702765/2"),
        (16, "-13842922/9", "-199360981/2"),
        (18, "252470402/3", "19391512145/2"),
        (20, "-17612343854/3", "-2404879675441/2"),
        (22, "4577258092006/9", "370371188237525/2"),
    ]
}

/// The alpha table rows as factored strings. k = 18 carries 43867 (the
/// numerator of B_18); the printed source table's 43687 is a digit
/// transposition, which the acceptance suite tracks separately.
fn alpha_rows() -> [(u32, &'static str); 6] {
    [
        (12, "(2^31 * pi^33) / (3^6 * 5^3 * 7^3 * 11^2 * 13 * 17 * 19 * 23 * 691)"),
        (14, "0"),
        (16, "(2^40 * pi^45) / (3^13 * 5^6 * 7^3 * 11^2 * 13^2 * 17 * 19 * 23 * 29 * 31 * 3617)"),
        (18, "(2^37 * pi^51) / (3^12 * 5^5 * 7^5 * 11^3 * 13^2 * 17^2 * 19 * 23 * 29 * 31 * 43867)"),
        (20, "(2^39 * pi^57) / (3^17 * 5^7 * 7^3 * 11^2 * 13^2 * 17^2 * 19^2 * 29 * 31 * 37 * 283 * 617)"),
        (22, "(2^42 * 4409 * pi^63) / (3^21 * 5^8 * 7^5 * 11^3 * 13^2 * 17^2 * 19^2 * 23 * 29 * 31 * 37 * 41 * 131 * 593)"),
    ]
}

pub fn run_exact_suite() -> Vec<CheckResult> {
    let mut out = Vec::new();

    // class-number table
    let mut bad = Vec::new();
    for (k, h3, h4) in published_table1() {
        let g3 = cohen_h(k - 1, 3).map(|v| v.to_string()).unwrap_or_default();
        let g4 = cohen_h(k - 1, 4).map(|v| v.to_string()).unwrap_or_default();
        if g3 != h3 {
            bad.push(format!("H({},3) = {g3}, want {h3}", k - 1));
        }
        if g4 != h4 {
            bad.push(format!("H({},4) = {g4}, want {h4}", k - 1));
        }
    }
    out.push(check(
        "table1-class-numbers",
        bad.is_empty(),
        if bad.is_empty() {
            "12/12 published values reproduced exactly".into()
        } else {
            bad.join("; ")
        },
    ));

    // alpha table
    let mut bad = Vec::new();
    match emit_table2(&[12, 14, 16, 18, 20, 22]) {
        Ok(rows) => {
            for (row, (k, want)) in rows.iter().zip(alpha_rows()) {
                let got = row.factored.to_string();
                if got != want {
                    bad.push(format!("alpha_{k} = {got}, want {want}"));
                }
            }
        }
        Err(e) => bad.push(e.to_string()),
    }
    out.push(check(
        "table2-alpha-values",
        bad.is_empty(),
        if bad.is_empty() {
            "6/6 rows exact (k=18 with corrected factor 43867)".into()
        } else {
            bad.join("; ")
        },
    ));

    // two-route identity
    let mut worst = None;
    for k in (12..=40).step_by(2) {
        let (Ok(d), Ok(p)) = (alpha_direct(k), alpha_from_pieces(k)) else {
            worst = Some(k);
            break;
        };
        if d.value != p.value || (!d.value.is_zero() && d.value.pi_exp() != 3 * k - 3) {
            worst = Some(k);
            break;
        }
    }
    out.push(check(
        "alpha-route-identity",
        worst.is_none(),
        match worst {
            None => "direct == pieces exactly for even k in [12, 40]; pi-exponent 3k-3".into(),
            Some(k) => format!("routes disagree at k = {k}"),
        },
    ));

    // Siegel coefficient vs degree-one Eisenstein coefficients
    let mut bad = Vec::new();
    for k in (12..=22).step_by(2) {
        let e1 = eisenstein_qexp(k, 21).expect("even k");
        for n in 1..=20u64 {
            let t = HalfIntegralIndex::new(n as i64, 0, 0);
            match siegel_a2k(k, &t) {
                Ok(v) if &v == e1.coeff(n as usize) => {}
                _ => bad.push(format!("k={k}, n={n}")),
            }
        }
    }
    out.push(check(
        "phi-compatibility",
        bad.is_empty(),
        if bad.is_empty() {
            "A_2k((n,0,0)) = (2/zeta(1-k)) sigma_{k-1}(n) for n <= 20, k in 12..22".into()
        } else {
            bad.join("; ")
        },
    ));

    // q-expansion identities
    let n = 50;
    let e4 = eisenstein_qexp(4, n).unwrap();
    let e6 = eisenstein_qexp(6, n).unwrap();
    let e8 = eisenstein_qexp(8, n).unwrap();
    let delta = delta_qexp(n).unwrap();
    let id1 = e4.pow(3).sub(&e6.pow(2)) == delta.scale(&Rational::from_integer(1728));
    let id2 = e4.mul(&e4) == e8;
    out.push(check(
        "eisenstein-delta-identities",
        id1 && id2,
        format!("E4^3 - E6^2 = 1728 delta: {id1}; E4^2 = E8: {id2} (50 coefficients)"),
    ));

    // tau congruence mod 691
    let delta2k = delta_qexp(2001).unwrap();
    let mut failures = 0usize;
    for j in 1..=2000u64 {
        let diff = delta2k.coeff(j as usize).clone()
            - Rational::from_bigint(sigma_power(11, j).unwrap());
        let quot = diff.div(&Rational::from_integer(691)).unwrap();
        if !quot.is_integer() {
            failures += 1;
        }
    }
    out.push(check(
        "tau-691-congruence",
        failures == 0,
        format!("tau(n) = sigma11(n) mod 691 for n <= 2000; {failures} failures"),
    ));

    // restriction coefficient two-route equality
    let mut bad = Vec::new();
    for k in (12..=40).step_by(2) {
        let formula = e1e2_q1q2q3_coef(k).unwrap();
        let q1 = eisenstein_qexp(k, 2).unwrap().coeff(1).clone();
        let product = q1 * e2_restricted_coef(k, 1, 1).unwrap();
        if formula != product {
            bad.push(k.to_string());
        }
    }
    out.push(check(
        "e1e2-two-route",
        bad.is_empty(),
        if bad.is_empty() {
            "restriction coefficient formula matches coefficient-product route, k in [12, 40]".into()
        } else {
            format!("mismatch at k in {{{}}}", bad.join(", "))
        },
    ));

    // theta coefficient against the divisor-character identity
    let theta1 = theta_qexp(ThetaKind::One, 201);
    let mut bad = 0usize;
    for n in 1..=200i64 {
        let s: i64 = (1..=n)
            .filter(|d| n % d == 0)
            .map(|d| kronecker_symbol(-4, d) as i64)
            .sum();
        if theta1.coeff(n as usize) != &Rational::from_integer(4 * s) {
            bad += 1;
        }
    }
    out.push(check(
        "theta1-divisor-identity",
        bad == 0,
        format!("r2(n) = 4 sum chi_-4(d) for n <= 200; {bad} failures"),
    ));

    // factored table display reassembles exactly
    let rows = emit_table2(&(12..=22).step_by(2).collect::<Vec<_>>()).unwrap();
    let ok = rows.iter().all(|r| r.factored.reassemble() == r.alpha);
    out.push(check(
        "table2-reassembly",
        ok,
        "factored renderings re-multiply to the exact values".into(),
    ));

    out
}

pub fn run_numeric_suite(k: Option<u32>) -> (Vec<CheckResult>, Option<TheoremReport>) {
    let mut out = Vec::new();
    let mut report = None;
    let cfg = NumericConfig::default();

    // exact class numbers against the functional equation
    let mut worst: f64 = 0.0;
    for r in [11u32, 13, 15, 17, 19, 21] {
        for n in [3i64, 4] {
            let exact = cohen_h(r, n).unwrap().to_f64();
            let num = dirichlet_l_num_negative(r, -n).unwrap();
            worst = worst.max((num.value - exact).abs() / exact.abs());
        }
    }
    out.push(check(
        "cohen-lemma-numeric",
        worst < 1e-8,
        format!("max relative error {worst:.3e} over r in {{11..21}}, D in {{-3,-4}} (tol 1e-8)"),
    ));

    // completed-lambda reflection residuals
    let delta = delta_qexp(4001).unwrap();
    let mut worst: f64 = 0.0;
    for s in [6.0, 7.0, 8.0, 9.0, 10.0] {
        let a = completed_lambda_num(&delta, 12, s).unwrap();
        let b = completed_lambda_num(&delta, 12, 12.0 - s).unwrap();
        worst = worst.max((a.value - b.value).abs());
    }
    out.push(check(
        "lambda-functional-equation",
        worst < 1e-6,
        format!("max |Lambda(s) - Lambda(12-s)| = {worst:.3e} over s in {{6..10}} (tol 1e-6)"),
    ));

    // zeta evaluator against closed forms
    let z2 = (zeta_num(2.0).unwrap().value - std::f64::consts::PI.powi(2) / 6.0).abs();
    let z12 = (zeta_num(12.0).unwrap().value
        - pullback_core::special::zeta_exact_even(6).to_f64())
    .abs();
    out.push(check(
        "zeta-exact-crosscheck",
        z2 < 1e-10 && z12 < 1e-10,
        format!("|zeta(2) - pi^2/6| = {z2:.2e}, |zeta(12) - exact| = {z12:.2e} (tol 1e-10)"),
    ));

    let l1 = dirichlet_l_num(1.0, -4).unwrap();
    let d1 = (l1.value - std::f64::consts::PI / 4.0).abs();
    out.push(check(
        "dirichlet-at-one",
        d1 < 1e-10,
        format!("|L(1, chi_-4) - pi/4| = {d1:.2e} (tol 1e-10)"),
    ));

    // Petersson norm
    let pet = petersson_norm_num(&delta.truncate(40), 12, &cfg).unwrap();
    let rel = (pet.value - 1.035362056804321e-6).abs() / 1.035362056804321e-6;
    out.push(check(
        "petersson-delta-norm",
        rel < 1e-4,
        format!("<delta,delta> = {:.12e}, rel err {rel:.2e} vs reference (tol 1e-4)", pet.value),
    ));

    let mut deep = cfg.clone();
    deep.petersson_x_panels *= 2;
    deep.petersson_y_panels *= 2;
    let pet2 = petersson_norm_num(&delta.truncate(40), 12, &deep).unwrap();
    let within = (pet.value - pet2.value).abs() <= pet.abs_error_bound + pet2.abs_error_bound;
    out.push(check(
        "petersson-depth-doubling",
        within,
        format!(
            "doubled-depth shift {:.2e} within combined bounds {:.2e}",
            (pet.value - pet2.value).abs(),
            pet.abs_error_bound + pet2.abs_error_bound
        ),
    ));

    // cutoff-doubling stability for each series evaluator
    let mut half = cfg.clone();
    half.n_terms = cfg.n_terms / 2;
    let stable = |a: &pullback_core::numeric::LValueResult,
                  b: &pullback_core::numeric::LValueResult| {
        (a.value - b.value).abs() <= a.abs_error_bound + b.abs_error_bound
    };
    let m_full = modular_l_num(&delta, 12, 11.0, &cfg).unwrap();
    let m_half = modular_l_num(&delta, 12, 11.0, &half).unwrap();
    let r_full = rankin_l_num(&delta, 12, ThetaKind::One, 11.0, false, &cfg).unwrap();
    let r_half = rankin_l_num(&delta, 12, ThetaKind::One, 11.0, false, &half).unwrap();
    let s_full = sym2_l_num(&delta, 12, 22.0, true, &cfg).unwrap();
    let s_half = sym2_l_num(&delta, 12, 22.0, true, &half).unwrap();
    let ok = stable(&m_full, &m_half) && stable(&r_full, &r_half) && stable(&s_full, &s_half);
    out.push(check(
        "cutoff-doubling-stability",
        ok,
        "modular, Rankin, and Sym^2 sums move less than their combined bounds under halved cutoffs"
            .into(),
    ));

    // completed-lambda route against the direct sum
    let lam = completed_lambda_num(&delta, 12, 11.0).unwrap();
    let via_lambda = lam.value * (2.0 * std::f64::consts::PI).powf(11.0) / gamma(11.0);
    let dd = (via_lambda - m_full.value).abs();
    out.push(check(
        "lambda-vs-direct-sum",
        dd < 1e-10,
        format!("two routes to L(11, delta) differ by {dd:.2e} (tol 1e-10)"),
    ));

    // end-to-end check; reproduces the frozen measured outcome
    let kk = k.unwrap_or(12);
    match theorem_check_num(kk, &cfg) {
        Ok(rep) => {
            if kk == 12 {
                let bracket = rep.sub_values["klingen_bracket"].value;
                let bracket_ok = (bracket - 1426.0 / 7.0).abs() / (1426.0 / 7.0) < 1e-7;
                let err_ok = (rep.rel_err - 0.0878373).abs() < 2e-3;
                let flags_ok = !rep.flags.rankin_zeta && rep.flags.sym2_zeta;
                out.push(check(
                    "theorem-check-k12",
                    bracket_ok && err_ok && flags_ok,
                    format!(
                        "lhs {:.6e}, rhs {:.6e}, rel_err {:.4e} (frozen mismatch of the printed \
                         identity; Klingen bracket 1426/7 reproduced to {:.1e}), flags: rankin_zeta={}, sym2_zeta={}",
                        rep.lhs,
                        rep.rhs,
                        rep.rel_err,
                        (bracket - 1426.0 / 7.0).abs() / (1426.0 / 7.0),
                        rep.flags.rankin_zeta,
                        rep.flags.sym2_zeta
                    ),
                ));
            } else {
                out.push(check(
                    "theorem-check-trivial",
                    rep.rel_err == 0.0,
                    format!("k = {kk}: lhs {}, rhs {}, rel_err {}", rep.lhs, rep.rhs, rep.rel_err),
                ));
            }
            report = Some(rep);
        }
        Err(e) => out.push(check("theorem-check-k12", false, e.to_string())),
    }

    (out, report)
}
