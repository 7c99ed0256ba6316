use num_complex::Complex64;

use super::{check_alpha, check_in_disk, AnalyticMap, LogDerivative, MapInfo, SchwarzFunction, MAP_QUAD_TOL};
use crate::error::Result;
use crate::estimator::radial_quadrature;
use crate::jets::Jet3;

/// The map with pre-Schwarzian `f''/f' = 2(1-α) φ / (1 - z φ)`, i.e.
/// `1 + z f''/f' = ℓ_α(z φ(z))`. It is convex of order `α` for every Schwarz
/// function `φ`, and has `f''(0) = 0` exactly when `φ(0) = 0`.
#[derive(Debug, Clone)]
pub struct GeneratedMap {
    phi: SchwarzFunction,
    alpha: f64,
    tol: f64,
    info: MapInfo,
}

pub fn map_from_phi(phi: SchwarzFunction, alpha: f64) -> Result<GeneratedMap> {
    GeneratedMap::new(phi, alpha)
}

impl GeneratedMap {
    pub fn new(phi: SchwarzFunction, alpha: f64) -> Result<Self> {
        check_alpha(alpha)?;
        let f2 = 2.0 * (1.0 - alpha) * phi.value(Complex64::new(0.0, 0.0))?;
        Ok(Self {
            phi,
            alpha,
            tol: MAP_QUAD_TOL,
            info: MapInfo { normalized: true, alpha_tag: Some(alpha), second_deriv_at_zero: f2 },
        })
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn phi(&self) -> &SchwarzFunction {
        &self.phi
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Jet of the pre-Schwarzian `Q = 2(1-α) φ / (1 - z φ)`.
    pub fn pre_schwarzian_jet(&self, z: Complex64) -> Result<Jet3> {
        let phi = self.phi.jet(z)?;
        let den = Jet3::constant(Complex64::new(1.0, 0.0)) - Jet3::identity(z).mul(phi);
        Ok(phi.div(den)? * (2.0 * (1.0 - self.alpha)))
    }

    fn q_value(&self, w: Complex64) -> Result<Complex64> {
        let p = self.phi.value(w)?;
        Ok(2.0 * (1.0 - self.alpha) * p / (1.0 - w * p))
    }

    /// `log f'(z) = ∫₀^z Q` along the segment `[0, z]`.
    pub fn log_f_prime(&self, z: Complex64) -> Result<Complex64> {
        if z.norm() == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        Ok(radial_quadrature(|s| Ok(z * self.q_value(s * z)?), self.tol)?.value)
    }
}

impl AnalyticMap for GeneratedMap {
    fn name(&self) -> &str {
        "generated"
    }

    fn info(&self) -> &MapInfo {
        &self.info
    }

    fn jet(&self, z: Complex64) -> Result<Jet3> {
        check_in_disk(z)?;
        let fp = self.log_f_prime(z)?.exp();
        let q = self.pre_schwarzian_jet(z)?;
        let value = if z.norm() == 0.0 {
            Complex64::new(0.0, 0.0)
        } else {
            radial_quadrature(|s| Ok(z * self.log_f_prime(s * z)?.exp()), self.tol)?.value
        };
        Jet3::new(value, fp, q.d0 * fp, (q.d1 + q.d0 * q.d0) * fp)
    }

    fn log_derivative(&self, z: Complex64) -> Result<LogDerivative> {
        check_in_disk(z)?;
        let q = self.pre_schwarzian_jet(z)?;
        Ok(LogDerivative { value: q.d0, derivative: q.d1 })
    }
}
