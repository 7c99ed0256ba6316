use num_complex::Complex64;

use super::{check_alpha, check_in_disk, AnalyticMap, LogDerivative, MapInfo, MAP_QUAD_TOL};
use crate::error::Result;
use crate::estimator::radial_quadrature;
use crate::jets::Jet3;

/// `f_α(z) = ∫₀^z (1 - ζ²)^{α-1} dζ`, the map attaining the sharp
/// Schwarzian norm `2(1 - α²)` among normalized maps with `f''(0) = 0`.
#[derive(Debug, Clone)]
pub struct ExtremalMap {
    alpha: f64,
    tol: f64,
    info: MapInfo,
}

pub fn extremal_map(alpha: f64) -> Result<ExtremalMap> {
    ExtremalMap::new(alpha)
}

impl ExtremalMap {
    pub fn new(alpha: f64) -> Result<Self> {
        check_alpha(alpha)?;
        Ok(Self {
            alpha,
            tol: MAP_QUAD_TOL,
            info: MapInfo { normalized: true, alpha_tag: Some(alpha), second_deriv_at_zero: Complex64::new(0.0, 0.0) },
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Jet of `f' = (1 - z²)^{α-1}`; `1 - z²` stays in the right half-plane on the disk.
    fn derivative_jet(&self, z: Complex64) -> Result<Jet3> {
        let id = Jet3::identity(z);
        let base = Jet3::constant(Complex64::new(1.0, 0.0)) - id.mul(id);
        base.powc(Complex64::new(self.alpha - 1.0, 0.0))
    }
}

impl AnalyticMap for ExtremalMap {
    fn name(&self) -> &str {
        "extremal"
    }

    fn info(&self) -> &MapInfo {
        &self.info
    }

    fn jet(&self, z: Complex64) -> Result<Jet3> {
        check_in_disk(z)?;
        let fp = self.derivative_jet(z)?;
        let exponent = Complex64::new(self.alpha - 1.0, 0.0);
        let value = if z.norm() == 0.0 {
            Complex64::new(0.0, 0.0)
        } else {
            radial_quadrature(|s| Ok(z * (1.0 - (s * z) * (s * z)).powc(exponent)), self.tol)?.value
        };
        Jet3::new(value, fp.d0, fp.d1, fp.d2)
    }

    /// `f''/f' = 2(1-α) z/(1-z²)`.
    fn log_derivative(&self, z: Complex64) -> Result<LogDerivative> {
        check_in_disk(z)?;
        let k = 2.0 * (1.0 - self.alpha);
        let w = 1.0 - z * z;
        Ok(LogDerivative { value: k * z / w, derivative: k * (1.0 + z * z) / (w * w) })
    }
}
