//! Pointwise differential operators: pre-Schwarzian, Schwarzian, the
//! Schwarz function recovered from `f`, and the auxiliary quantities `Φ`
//! and `A` that appear in the refined norm inequality.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::maps::{check_in_disk, AnalyticMap};

/// All operator values at one point of the disk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OperatorSample {
    pub z: Complex64,
    pub pre_schwarzian: Complex64,
    pub schwarzian: Complex64,
    /// `(1-|z|²)² |Sf(z)|`
    pub hyperbolic_schwarzian: f64,
    /// `(1-|z|²) |f''/f'(z)|`
    pub hyperbolic_pre: f64,
}

pub fn sample(f: &dyn AnalyticMap, z: Complex64) -> Result<OperatorSample> {
    check_in_disk(z)?;
    let ld = f.log_derivative(z)?;
    let schwarzian = ld.schwarzian();
    let w = 1.0 - z.norm_sqr();
    Ok(OperatorSample {
        z,
        pre_schwarzian: ld.value,
        schwarzian,
        hyperbolic_schwarzian: w * w * schwarzian.norm(),
        hyperbolic_pre: w * ld.value.norm(),
    })
}

/// `f''/f'` at `z`.
pub fn pre_schwarzian(f: &dyn AnalyticMap, z: Complex64) -> Result<Complex64> {
    check_in_disk(z)?;
    Ok(f.log_derivative(z)?.value)
}

/// `Sf = f'''/f' - (3/2)(f''/f')²` at `z`.
pub fn schwarzian(f: &dyn AnalyticMap, z: Complex64) -> Result<Complex64> {
    check_in_disk(z)?;
    Ok(f.log_derivative(z)?.schwarzian())
}

pub fn hyperbolic_schwarzian(f: &dyn AnalyticMap, z: Complex64) -> Result<f64> {
    Ok(sample(f, z)?.hyperbolic_schwarzian)
}

pub fn hyperbolic_pre_schwarzian(f: &dyn AnalyticMap, z: Complex64) -> Result<f64> {
    Ok(sample(f, z)?.hyperbolic_pre)
}

/// `φ = (f''/f') / (2(1-α) + z f''/f')`, the Schwarz function of a map
/// claimed to be convex of order `α`.
pub fn phi_from_f(f: &dyn AnalyticMap, alpha: f64, z: Complex64) -> Result<Complex64> {
    let q = pre_schwarzian(f, z)?;
    let den = 2.0 * (1.0 - alpha) + z * q;
    if den.norm() < 1e-12 {
        return Err(Error::DegenerateDenominator(z));
    }
    Ok(q / den)
}

/// `Φ(z) = (z̄ - φ(z)) / (1 - z φ(z))`.
pub fn phi_cap(f: &dyn AnalyticMap, alpha: f64, z: Complex64) -> Result<Complex64> {
    let phi = phi_from_f(f, alpha, z)?;
    let den = 1.0 - z * phi;
    if den.norm() < 1e-12 {
        return Err(Error::DegenerateDenominator(z));
    }
    Ok((z.conj() - phi) / den)
}

/// `A = 1 - ((1-|z|²) |f''/f'| / (2(1-α)))²`, signed.
pub fn remark_a(f: &dyn AnalyticMap, alpha: f64, z: Complex64) -> Result<f64> {
    let q = pre_schwarzian(f, z)?;
    let t = (1.0 - z.norm_sqr()) * q.norm() / (2.0 * (1.0 - alpha));
    Ok(1.0 - t * t)
}
