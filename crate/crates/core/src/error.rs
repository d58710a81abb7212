use thiserror::Error;

/// Crate-wide error type. Every precondition violation is a typed variant;
/// nothing is silently coerced.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("pi-exponent mismatch in sum: pi^{left} + pi^{right}")]
    PiExponentMismatch { left: u32, right: u32 },

    #[error("division by pi would make the exponent negative")]
    PiExponentUnderflow,

    #[error("{0} is not a fundamental discriminant")]
    NonFundamentalDiscriminant(i64),

    #[error("H({r}, {n}) is outside the supported (fundamental or zero) index set")]
    NonFundamentalCohenIndex { r: u32, n: i64 },

    #[error("weight k = {k} rejected: {reason}")]
    InvalidWeight { k: i64, reason: &'static str },

    #[error("argument {value} rejected: {reason}")]
    InvalidArgument { value: i64, reason: &'static str },

    #[error("S_{k} has dimension {dim} >= 2; eigenforms there require algebraic eigenvalues")]
    RequiresAlgebraicEigenvalues { k: u32, dim: usize },

    #[error("index (a, b, c) = ({a}, {b}, {c}) is not positive semidefinite")]
    IndefiniteIndex { a: i64, b: i64, c: i64 },

    #[error("Klingen coefficient unsupported for det(2T) = {det4}")]
    UnsupportedKlingenIndex { det4: i64 },

    #[error("series precision {have} is insufficient (need at least {need})")]
    InsufficientPrecision { need: usize, have: usize },

    #[error("s = {s} is outside the absolutely convergent range (need s > {min_s}); use the completed-lambda route")]
    NotAbsolutelyConvergent { s: f64, min_s: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
