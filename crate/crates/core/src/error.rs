use num_complex::Complex64;
use thiserror::Error;

/// Failures raised by jet arithmetic, map construction, quadrature and the CLI.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by a jet whose value {0} is below the zero threshold")]
    DivisionByZeroJet(Complex64),
    #[error("value {0} lies on the principal branch cut (nonpositive real axis)")]
    BranchCutViolation(Complex64),
    #[error("non-finite value in {0}")]
    NonFinite(&'static str),
    #[error("order alpha = {0} must lie in [0, 1)")]
    InvalidAlpha(f64),
    #[error("parameter p = {0} must lie in [0, 1)")]
    InvalidP(f64),
    #[error("first coefficient must be 1, got {0}")]
    InvalidNormalization(Complex64),
    #[error("|f'| = {modulus:e} at z = {z} is too small")]
    DegenerateDerivative { z: Complex64, modulus: f64 },
    #[error("denominator 2(1-alpha) + z f''/f' vanishes at z = {0}")]
    DegenerateDenominator(Complex64),
    #[error("Mobius map evaluated at its pole z = {0}")]
    PoleAtOne(Complex64),
    #[error("quadrature did not converge after {depth} bisection levels (error estimate {error:e})")]
    NonConvergedQuadrature { depth: u32, error: f64 },
    #[error("point {0} lies outside the unit disk")]
    OutsideDisk(Complex64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("Schwarz function reaches |phi| = {modulus} at z = {z}")]
    NotSelfMap { z: Complex64, modulus: f64 },
    #[error("configuration error: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
