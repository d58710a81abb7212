//! Floating-point evaluation of the L-values and inner products on the
//! spectral side of the pullback identity, with conservative error bounds.
//!
//! All floats are f64; error budgets are tracked additively and reported in
//! every [`LValueResult`], never hidden. Summation orders are fixed, so all
//! results are bit-reproducible for a given configuration.

mod funcs;
mod lvalues;
mod petersson;
mod theorem;

pub use funcs::{gamma, gauss_legendre, gl_integrate, hurwitz_zeta, upper_incomplete_gamma};
pub use lvalues::{
    completed_lambda_num, dirichlet_l_num, dirichlet_l_num_direct, dirichlet_l_num_negative,
    modular_l_num, rankin_l_num, sym2_l_num, zeta_num,
};
pub use petersson::petersson_norm_num;
pub use theorem::{klingen_coef_num, theorem_check_num, NormalizationFlags, TheoremReport};

use serde::Serialize;

/// How a numeric value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    DirectSum,
    FunctionalEquation,
    Quadrature,
}

/// A floating-point value with a conservative absolute error bound: the true
/// error is intended to be at most `abs_error_bound` (analytic tail plus a
/// rounding allowance).
#[derive(Debug, Clone, Serialize)]
pub struct LValueResult {
    pub value: f64,
    pub abs_error_bound: f64,
    pub method: Method,
}

/// Tail-bound regime for the coefficient estimates |a(n)| <= d(n) n^{(k-1)/2}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TailBoundMode {
    /// d(n) <= n: loose but rigorous.
    Rigorous,
}

/// Knobs for the numeric evaluations. Everything is f64 ("64-bit working
/// precision"); the fields control series cutoffs and quadrature depth.
#[derive(Debug, Clone, Serialize)]
pub struct NumericConfig {
    /// Dirichlet-series cutoff for L-function sums.
    pub n_terms: usize,
    /// Gauss-Legendre points per quadrature panel.
    pub quad_order: usize,
    /// Petersson y-integration cap; the tail above it is bounded analytically.
    pub petersson_y_cap: f64,
    /// Number of x panels across [-1/2, 1/2].
    pub petersson_x_panels: usize,
    /// Number of geometric y panels between the domain floor and the cap.
    pub petersson_y_panels: usize,
    /// Coefficient tail-bound regime.
    pub tail_bound: TailBoundMode,
}

impl Default for NumericConfig {
    fn default() -> Self {
        NumericConfig {
            n_terms: 4000,
            quad_order: 24,
            petersson_y_cap: 8.0,
            petersson_x_panels: 8,
            petersson_y_panels: 6,
            tail_bound: TailBoundMode::Rigorous,
        }
    }
}
