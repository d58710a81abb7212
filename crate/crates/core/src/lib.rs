//! Exact arithmetic for the closed-form side of degree-3 Siegel Eisenstein
//! pullbacks — Cohen class numbers, Bernoulli data, q-expansions, the
//! weighted-average constant α_k — plus a floating-point module that
//! evaluates the L-values on the spectral side numerically.
//!
//! Everything outside [`numeric`] is exact rational (or rational × π^e)
//! arithmetic; results are deterministic and safe to share across threads.

pub mod bernoulli;
pub mod exact;
pub mod factor;
pub mod numeric;
pub mod qseries;
pub mod siegel;
pub mod special;

mod error;

pub use error::{Error, Result};
pub use exact::{PiMonomial, Rational};
pub use qseries::QSeries;
pub use siegel::HalfIntegralIndex;
