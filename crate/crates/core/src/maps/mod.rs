//! Analytic maps on the unit disk and their constructors.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::jets::Jet3;

mod extremal;
mod generated;
mod koebe;
mod mobius;
mod registry;
mod schwarz;
mod series;

pub use extremal::{extremal_map, ExtremalMap};
pub use generated::{map_from_phi, GeneratedMap};
pub use koebe::{koebe_map, koebe_transform, KoebeFunction, KoebeTransform};
pub use mobius::{ell_alpha, Mobius, PostComposed, PreComposed};
pub use registry::{FamilyParams, MapFamily, MapRegistry};
pub use schwarz::{random_schwarz, SchwarzFunction, XorShift64Star, SCHWARZ_ZERO_RADIUS};
pub use series::{identity_map, koebe_function, power_series_map, PowerSeriesMap, MAX_SERIES_TERMS};

/// Default absolute tolerance for the quadratures that produce `f` and `f'`.
pub const MAP_QUAD_TOL: f64 = 1e-12;

/// Below this modulus `f'` is considered degenerate.
pub const DERIVATIVE_EPS: f64 = 1e-12;

/// Normalization metadata carried by every map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MapInfo {
    /// `f(0) = 0` and `f'(0) = 1`.
    pub normalized: bool,
    /// Claimed convexity order, if the constructor guarantees one.
    pub alpha_tag: Option<f64>,
    /// Cached `f''(0)`.
    pub second_deriv_at_zero: Complex64,
}

/// `f''/f'` and its derivative at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogDerivative {
    pub value: Complex64,
    pub derivative: Complex64,
}

impl LogDerivative {
    /// Builds the pair from a full jet of `f`.
    pub fn from_jet(z: Complex64, jet: &Jet3) -> Result<Self> {
        let modulus = jet.d1.norm();
        if !(modulus >= DERIVATIVE_EPS) {
            return Err(Error::DegenerateDerivative { z, modulus });
        }
        let value = jet.d2 / jet.d1;
        Ok(Self { value, derivative: jet.d3 / jet.d1 - value * value })
    }

    /// `(f''/f')' - (f''/f')^2 / 2`.
    pub fn schwarzian(&self) -> Complex64 {
        self.derivative - 0.5 * self.value * self.value
    }
}

/// An analytic function on the unit disk, evaluated as order-3 jets.
pub trait AnalyticMap: Send + Sync + fmt::Debug {
    fn name(&self) -> &str;

    fn info(&self) -> &MapInfo;

    /// `(f, f', f'', f''')` at `z`.
    fn jet(&self, z: Complex64) -> Result<Jet3>;

    /// `f''/f'` and its derivative. Maps that know their pre-Schwarzian
    /// without integrating for `f` override this; the default reads the
    /// full jet.
    fn log_derivative(&self, z: Complex64) -> Result<LogDerivative> {
        LogDerivative::from_jet(z, &self.jet(z)?)
    }
}

pub type SharedMap = Arc<dyn AnalyticMap>;

pub fn check_in_disk(z: Complex64) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() && z.norm_sqr() < 1.0 {
        Ok(())
    } else {
        Err(Error::OutsideDisk(z))
    }
}

pub(crate) fn check_alpha(alpha: f64) -> Result<()> {
    if (0.0..1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::InvalidAlpha(alpha))
    }
}
