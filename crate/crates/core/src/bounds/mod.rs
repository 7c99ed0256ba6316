//! Closed-form bounds and signed residuals for convex maps of order `α`.
//!
//! Residuals are never clamped: a negative value means the inequality fails
//! at that point, and its size says by how much.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::estimator::radial_quadrature;
use crate::maps::{check_alpha, check_in_disk, AnalyticMap};
use crate::operators::pre_schwarzian;

mod checks;
mod report;

pub use checks::{BoundCheck, CheckRegistry, Member, MemberData, SuiteContext};
pub use report::{BoundReport, ReportBuilder, TheoremId, DEFAULT_RESIDUAL_TOL};

/// Residuals of the two pointwise characterizations of `C_α`:
///
/// * `r_ii  = Re{1 + z f''/f'} - α - (1-|z|²) |f''/f'|² / (4(1-α))`
/// * `r_iii = 2(1-α) - |(1-|z|²) f''/f' - 2(1-α) z̄|`
pub fn theorem1_residuals(f: &dyn AnalyticMap, alpha: f64, z: Complex64) -> Result<(f64, f64)> {
    check_alpha(alpha)?;
    let q = pre_schwarzian(f, z)?;
    let w = 1.0 - z.norm_sqr();
    let k = 1.0 - alpha;
    let r_ii = (1.0 + z * q).re - alpha - w * q.norm_sqr() / (4.0 * k);
    let r_iii = 2.0 * k - (w * q - 2.0 * k * z.conj()).norm();
    Ok((r_ii, r_iii))
}

/// `2|z|(1-α) - (1-|z|²) |f''/f'|`, nonnegative on `C_α⁰`.
pub fn prop3_residual(f: &dyn AnalyticMap, alpha: f64, z: Complex64) -> Result<f64> {
    let q = pre_schwarzian(f, z)?;
    Ok(2.0 * z.norm() * (1.0 - alpha) - (1.0 - z.norm_sqr()) * q.norm())
}

/// `((1+r²)^{α-1}, (1-r²)^{α-1})`: the envelope for `|f'|` on `C_α⁰`.
pub fn distortion_bounds(alpha: f64, r: f64) -> (f64, f64) {
    let r2 = r * r;
    ((1.0 + r2).powf(alpha - 1.0), (1.0 - r2).powf(alpha - 1.0))
}

/// Growth envelope for `|f(z)|` on `C_α⁰` at `|z| = r`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GrowthEnvelope {
    pub alpha: f64,
    pub r: f64,
    /// `∫₀^r (1+t²)^{α-1} dt`
    pub lower: f64,
    /// `∫₀^r (1-t²)^{α-1} dt`
    pub upper: f64,
    pub quadrature_error: f64,
}

pub fn growth_bounds(alpha: f64, r: f64, tol: f64) -> Result<GrowthEnvelope> {
    check_alpha(alpha)?;
    if !(0.0..1.0).contains(&r) {
        return Err(Error::InvalidArgument(format!("radius {r} must lie in [0, 1)")));
    }
    if r == 0.0 {
        return Ok(GrowthEnvelope { alpha, r, lower: 0.0, upper: 0.0, quadrature_error: 0.0 });
    }
    let e = alpha - 1.0;
    let lo = radial_quadrature(|s| Ok(Complex64::new(r * (1.0 + (r * s).powi(2)).powf(e), 0.0)), tol)?;
    let up = radial_quadrature(|s| Ok(Complex64::new(r * (1.0 - (r * s).powi(2)).powf(e), 0.0)), tol)?;
    Ok(GrowthEnvelope {
        alpha,
        r,
        lower: lo.value.re,
        upper: up.value.re,
        quadrature_error: lo.error_estimate.max(up.error_estimate),
    })
}

/// Distortion and growth envelopes valid on all of `C_α`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RobertsonBounds {
    pub f_lower: f64,
    pub f_upper: f64,
    pub fp_lower: f64,
    pub fp_upper: f64,
}

pub fn robertson_bounds(alpha: f64, r: f64) -> RobertsonBounds {
    let k = 2.0 * alpha - 1.0;
    let (f_lower, f_upper) = if alpha == 0.5 {
        ((1.0 + r).ln(), -(1.0 - r).ln())
    } else {
        // ((1+r)^k - 1)/k and (1 - (1-r)^k)/k, written to stay accurate near k = 0
        ((k * r.ln_1p()).exp_m1() / k, -(k * (-r).ln_1p()).exp_m1() / k)
    };
    let e = -2.0 * (1.0 - alpha);
    RobertsonBounds { f_lower, f_upper, fp_lower: (1.0 + r).powf(e), fp_upper: (1.0 - r).powf(e) }
}

/// Sharp norm constants as functions of `α`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SharpNormConstants {
    /// Schwarzian norm bound on all of `C_α`: 2 for `α ≤ 1/2`, `8α(1-α)` above.
    pub theorem_a: f64,
    /// Schwarzian norm bound on `C_α⁰`: `2(1-α²)`.
    pub theorem5: f64,
    /// Pre-Schwarzian norm bound on `C_α`: `4(1-α)`.
    pub yamashita: f64,
}

pub fn theorem_a_constant(alpha: f64) -> f64 {
    if alpha <= 0.5 {
        2.0
    } else {
        8.0 * alpha * (1.0 - alpha)
    }
}

pub fn sharp_norm_constants(alpha: f64) -> SharpNormConstants {
    SharpNormConstants {
        theorem_a: theorem_a_constant(alpha),
        theorem5: 2.0 * (1.0 - alpha * alpha),
        yamashita: 4.0 * (1.0 - alpha),
    }
}

/// `2(1-α)(1 + α(1+p)/(1-p))` with `p = |f''(0)| / (2(1-α))`.
pub fn theorem7_bound(alpha: f64, p: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if !(0.0..1.0).contains(&p) {
        return Err(Error::InvalidP(p));
    }
    Ok(2.0 * (1.0 - alpha) * (1.0 + alpha * (1.0 + p) / (1.0 - p)))
}

/// The value of `p` at which [`theorem7_bound`] meets the whole-class
/// constant, and that constant: `α/(2-α)` against 2 for `α ≤ 1/2`, and
/// `(3α-1)/(5α-1)` against `8α(1-α)` for `α > 1/2`.
pub fn remark9_thresholds(alpha: f64) -> (f64, f64) {
    if alpha <= 0.5 {
        (alpha / (2.0 - alpha), 2.0)
    } else {
        ((3.0 * alpha - 1.0) / (5.0 * alpha - 1.0), 8.0 * alpha * (1.0 - alpha))
    }
}

/// `(p + r)/(1 + p r)`: the bound on `|φ(z)|`, `|z| = r`, for a self-map with `|φ(0)| = p`.
pub fn lemma6_bound(p: f64, r: f64) -> f64 {
    (p + r) / (1.0 + p * r)
}

/// `(1-|a₂|²)/3 - |a₃ - a₂²|` from the jet at the origin.
pub fn trimble_residual(f: &dyn AnalyticMap) -> Result<f64> {
    let j = f.jet(Complex64::new(0.0, 0.0))?;
    let a2 = j.d2 / 2.0;
    let a3 = j.d3 / 6.0;
    Ok((1.0 - a2.norm_sqr()) / 3.0 - (a3 - a2 * a2).norm())
}

/// Below this value of `√(1-t)` the comparison function uses its series.
const CO_SERIES_CUTOFF: f64 = 1e-3;

/// `A(z,t) = (1/s) ((1+z)^s - (1-z)^s) / ((1+z)^s + (1-z)^s)`, `s = √(1-t)`.
///
/// Defined for `t ≤ 1`; negative `t` gives the lower comparison function.
/// At `t = 1` it is `½ log((1+z)/(1-z))`; near there the identity
/// `A = tanh(s·w)/s`, `w = atanh z`, is expanded to fifth order in `s·w`.
pub fn chuaqui_osgood_a(z: Complex64, t: f64) -> Result<Complex64> {
    if (z - 1.0).norm() == 0.0 || (z + 1.0).norm() == 0.0 {
        return Err(Error::BranchCutViolation(z));
    }
    check_in_disk(z)?;
    if !(t <= 1.0) {
        return Err(Error::InvalidArgument(format!("comparison parameter t = {t} must be at most 1")));
    }
    let s = (1.0 - t).sqrt();
    if s < CO_SERIES_CUTOFF {
        let w = 0.5 * ((1.0 + z) / (1.0 - z)).ln();
        let x2 = (s * w) * (s * w);
        return Ok(w * (1.0 - x2 / 3.0 + 2.0 * x2 * x2 / 15.0));
    }
    let sc = Complex64::new(s, 0.0);
    let p = (1.0 + z).powc(sc);
    let m = (1.0 - z).powc(sc);
    Ok((p - m) / (p + m) / s)
}
