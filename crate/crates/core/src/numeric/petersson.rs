//! Petersson norm by 2-D quadrature over the standard fundamental domain
//! F = { |x| <= 1/2, x² + y² >= 1 }: Gauss–Legendre panels in x, geometric
//! panels in y up to a cap, with the exponentially small y-tail bounded
//! analytically from the leading q-expansion term.

use crate::numeric::funcs::{gauss_legendre, gl_integrate};
use crate::numeric::{LValueResult, Method, NumericConfig};
use crate::qseries::QSeries;
use crate::{Error, Result};

const PI: f64 = std::f64::consts::PI;

struct FormEval {
    coeffs: Vec<f64>,
}

impl FormEval {
    /// |f(x + iy)|² from the truncated q-expansion.
    fn abs2(&self, x: f64, y: f64) -> f64 {
        let mut re = 0.0;
        let mut im = 0.0;
        for (n, a) in self.coeffs.iter().enumerate().skip(1) {
            if *a == 0.0 {
                continue;
            }
            let e = a * (-2.0 * PI * n as f64 * y).exp();
            let (s, c) = (2.0 * PI * n as f64 * x).sin_cos();
            re += e * c;
            im += e * s;
        }
        re * re + im * im
    }
}

fn integrate(form: &FormEval, k: u32, config: &NumericConfig, order: usize) -> f64 {
    let nodes = gauss_legendre(order);
    let y_cap = config.petersson_y_cap;
    let xp = config.petersson_x_panels;
    let yp = config.petersson_y_panels;
    let mut total = 0.0;
    for i in 0..xp {
        let x0 = -0.5 + i as f64 / xp as f64;
        let x1 = -0.5 + (i + 1) as f64 / xp as f64;
        total += gl_integrate(x0, x1, &nodes, |x| {
            let y_low = (1.0 - x * x).sqrt();
            let ratio = (y_cap / y_low).powf(1.0 / yp as f64);
            let mut inner = 0.0;
            let mut lo = y_low;
            for _ in 0..yp {
                let hi = lo * ratio;
                inner += gl_integrate(lo, hi, &nodes, |y| {
                    form.abs2(x, y) * y.powi(k as i32 - 2)
                });
                lo = hi;
            }
            inner
        });
    }
    total
}

/// ⟨f, f⟩ = ∬_F |f(x+iy)|² y^{k-2} dx dy for a cusp form given by its
/// q-expansion. The reported bound combines an order-halving quadrature
/// estimate, the y-tail above the cap, and the series-truncation residue.
pub fn petersson_norm_num(f: &QSeries, k: u32, config: &NumericConfig) -> Result<LValueResult> {
    if !f.coeffs()[0].is_zero() {
        return Err(Error::InvalidArgument {
            value: 0,
            reason: "petersson norm is defined for cusp forms (zero constant term)",
        });
    }
    let n_coeffs = f.precision() - 1;
    if n_coeffs < 16 {
        return Err(Error::InsufficientPrecision {
            need: 17,
            have: f.precision(),
        });
    }
    let form = FormEval {
        coeffs: f.coeffs().iter().map(|c| c.to_f64()).collect(),
    };

    let order = config.quad_order.max(6);
    let full = integrate(&form, k, config, order);
    let coarse = integrate(&form, k, config, (order / 2).max(4));
    let quad_err = (full - coarse).abs();

    // tail above y_cap: |f| <= c1 e^{-2πy} with c1 = Σ |a_n| e^{-2π(n-1)y_cap}
    let y_cap = config.petersson_y_cap;
    let c1: f64 = form
        .coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(n, a)| a.abs() * (-2.0 * PI * (n as f64 - 1.0) * y_cap).exp())
        .sum();
    let km2 = k as f64 - 2.0;
    let y_tail = c1 * c1 * y_cap.powf(km2) * (-4.0 * PI * y_cap).exp()
        / (4.0 * PI - km2 / y_cap);

    // series truncation at the domain floor y = sqrt(3)/2, |a_n| <= n^{(k+1)/2}
    let y0 = 3f64.sqrt() / 2.0;
    let m1 = n_coeffs as f64 + 1.0;
    let f_tail = m1.powf((k as f64 + 1.0) / 2.0) * (-2.0 * PI * m1 * y0).exp() * 2.0;
    let f_max: f64 = form.coeffs.iter().map(|a| a.abs()).sum::<f64>();
    let series_err = 2.0 * f_max * f_tail * y_cap.powf(km2 + 1.0);

    Ok(LValueResult {
        value: full,
        abs_error_bound: quad_err + y_tail + series_err + 1e-15 * full.abs(),
        method: Method::Quadrature,
    })
}
