use num_complex::Complex64;

use super::{check_in_disk, AnalyticMap, LogDerivative, MapInfo, Mobius, SharedMap, DERIVATIVE_EPS};
use crate::error::{Error, Result};
use crate::jets::Jet3;

/// `f_a(z) = [f((z+a)/(1+āz)) - f(a)] / [(1-|a|²) f'(a)]`.
///
/// For `f` convex of order `α` the transform is convex of order
/// `α (1-|a|)/(1+|a|)`, which is recorded as its alpha tag.
#[derive(Debug, Clone)]
pub struct KoebeTransform {
    f: SharedMap,
    a: Complex64,
    shift: Mobius,
    f_at_a: Complex64,
    denom: Complex64,
    info: MapInfo,
}

pub fn koebe_transform(f: SharedMap, a: Complex64) -> Result<KoebeTransform> {
    KoebeTransform::new(f, a)
}

impl KoebeTransform {
    pub fn new(f: SharedMap, a: Complex64) -> Result<Self> {
        check_in_disk(a)?;
        if !f.info().normalized {
            return Err(Error::InvalidArgument(format!("Koebe transform needs a normalized map, got {}", f.name())));
        }
        let at_a = f.jet(a)?;
        let modulus = at_a.d1.norm();
        if !(modulus >= DERIVATIVE_EPS) {
            return Err(Error::DegenerateDerivative { z: a, modulus });
        }
        let shift = Mobius::disk_automorphism(a, 0.0)?;
        let alpha_tag = f.info().alpha_tag.map(|alpha| alpha * (1.0 - a.norm()) / (1.0 + a.norm()));
        let mut out = Self {
            f,
            a,
            shift,
            f_at_a: at_a.d0,
            denom: (1.0 - a.norm_sqr()) * at_a.d1,
            info: MapInfo { normalized: true, alpha_tag, second_deriv_at_zero: Complex64::new(0.0, 0.0) },
        };
        // f_a'(0) = 1, so f_a''(0) is the pre-Schwarzian at 0
        out.info.second_deriv_at_zero = out.log_derivative(Complex64::new(0.0, 0.0))?.value;
        Ok(out)
    }

    pub fn point(&self) -> Complex64 {
        self.a
    }
}

impl AnalyticMap for KoebeTransform {
    fn name(&self) -> &str {
        "koebe-transform"
    }

    fn info(&self) -> &MapInfo {
        &self.info
    }

    fn jet(&self, z: Complex64) -> Result<Jet3> {
        check_in_disk(z)?;
        let inner = self.shift.mobius_jet(z)?;
        let outer = self.f.jet(inner.d0)?;
        let composed = (outer.compose(inner) - self.f_at_a).scale(self.denom.inv());
        Jet3::new(composed.d0, composed.d1, composed.d2, composed.d3)
    }

    fn log_derivative(&self, z: Complex64) -> Result<LogDerivative> {
        check_in_disk(z)?;
        // the additive and multiplicative constants drop out of f''/f'
        let m = self.shift.mobius_jet(z)?;
        let q = self.f.log_derivative(m.d0)?;
        let m_ratio = m.d2 / m.d1;
        let m_ratio_prime = m.d3 / m.d1 - m_ratio * m_ratio;
        Ok(LogDerivative {
            value: q.value * m.d1 + m_ratio,
            derivative: q.derivative * m.d1 * m.d1 + q.value * m.d2 + m_ratio_prime,
        })
    }
}

/// The Koebe function `k(z) = z/(1-z)²`: starlike, not convex.
#[derive(Debug, Clone)]
pub struct KoebeFunction {
    info: MapInfo,
}

pub fn koebe_map() -> KoebeFunction {
    KoebeFunction {
        info: MapInfo { normalized: true, alpha_tag: None, second_deriv_at_zero: Complex64::new(4.0, 0.0) },
    }
}

impl AnalyticMap for KoebeFunction {
    fn name(&self) -> &str {
        "koebe"
    }

    fn info(&self) -> &MapInfo {
        &self.info
    }

    fn jet(&self, z: Complex64) -> Result<Jet3> {
        check_in_disk(z)?;
        let one = Complex64::new(1.0, 0.0);
        let w = (Jet3::constant(one) - Jet3::identity(z)).powc(Complex64::new(-2.0, 0.0))?;
        let j = Jet3::identity(z).mul(w);
        Jet3::new(j.d0, j.d1, j.d2, j.d3)
    }

    fn log_derivative(&self, z: Complex64) -> Result<LogDerivative> {
        check_in_disk(z)?;
        // k'(z) = (1+z)/(1-z)³
        let (p, m) = (1.0 + z, 1.0 - z);
        Ok(LogDerivative { value: 1.0 / p + 3.0 / m, derivative: -1.0 / (p * p) + 3.0 / (m * m) })
    }
}

