use num_complex::Complex64;

use super::{check_in_disk, AnalyticMap, MapInfo};
use crate::error::{Error, Result};
use crate::jets::Jet3;

pub const MAX_SERIES_TERMS: usize = 64;

/// `f(z) = Σ_{n=1}^{N} a_n z^n` with `a_1 = 1`.
#[derive(Debug, Clone)]
pub struct PowerSeriesMap {
    coeffs: Vec<Complex64>,
    info: MapInfo,
}

/// Builds a polynomial map from `a_1, ..., a_N`.
pub fn power_series_map(coeffs: Vec<Complex64>) -> Result<PowerSeriesMap> {
    PowerSeriesMap::new(coeffs)
}

/// `z ↦ z`.
pub fn identity_map() -> PowerSeriesMap {
    PowerSeriesMap::new(vec![Complex64::new(1.0, 0.0)]).expect("identity is normalized")
}

/// The Koebe function `z/(1-z)² = Σ n zⁿ`, truncated at `terms`. Not convex;
/// used as a control that the residual checks must reject.
pub fn koebe_function(terms: usize) -> Result<PowerSeriesMap> {
    PowerSeriesMap::new((1..=terms).map(|n| Complex64::new(n as f64, 0.0)).collect())
}

impl PowerSeriesMap {
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() || coeffs.len() > MAX_SERIES_TERMS {
            return Err(Error::InvalidArgument(format!(
                "power series needs 1..={MAX_SERIES_TERMS} coefficients, got {}",
                coeffs.len()
            )));
        }
        if (coeffs[0] - 1.0).norm() > 1e-12 {
            return Err(Error::InvalidNormalization(coeffs[0]));
        }
        let a2 = coeffs.get(1).copied().unwrap_or_default();
        Ok(Self { coeffs, info: MapInfo { normalized: true, alpha_tag: None, second_deriv_at_zero: 2.0 * a2 } })
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }
}

impl AnalyticMap for PowerSeriesMap {
    fn name(&self) -> &str {
        "power-series"
    }

    fn info(&self) -> &MapInfo {
        &self.info
    }

    fn jet(&self, z: Complex64) -> Result<Jet3> {
        check_in_disk(z)?;
        // Horner with derivatives on Σ a_n z^n = z (a_1 + a_2 z + ...)
        let zero = Complex64::new(0.0, 0.0);
        let (mut p0, mut p1, mut p2, mut p3) = (zero, zero, zero, zero);
        for &c in self.coeffs.iter().rev().chain(std::iter::once(&zero)) {
            p3 = p3 * z + 3.0 * p2;
            p2 = p2 * z + 2.0 * p1;
            p1 = p1 * z + p0;
            p0 = p0 * z + c;
        }
        Jet3::new(p0, p1, p2, p3)
    }
}
