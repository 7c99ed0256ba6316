use num_complex::Complex64;

use super::{AnalyticMap, LogDerivative, MapInfo, SharedMap};
use crate::error::{Error, Result};
use crate::jets::Jet3;

/// Half-plane map `(1 + (1 - 2α) z) / (1 - z)`, sending the disk onto `Re w > α`.
pub fn ell_alpha(alpha: f64, z: Complex64) -> Result<Complex64> {
    let den = 1.0 - z;
    if den.norm() < 1e-300 {
        return Err(Error::PoleAtOne(z));
    }
    Ok((1.0 + (1.0 - 2.0 * alpha) * z) / den)
}

/// `(a z + b) / (c z + d)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mobius {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
    info: MapInfo,
}

impl Mobius {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        let det = a * d - b * c;
        if det.norm() < 1e-14 {
            return Err(Error::InvalidArgument("degenerate Mobius map (ad - bc = 0)".into()));
        }
        let f0 = b / d;
        let info = MapInfo {
            normalized: f0.norm() < 1e-12 && (det / (d * d) - 1.0).norm() < 1e-12,
            alpha_tag: None,
            second_deriv_at_zero: -2.0 * c * det / (d * d * d),
        };
        Ok(Self { a, b, c, d, info })
    }

    /// Disk automorphism `e^{iθ} (z + p) / (1 + p̄ z)`.
    pub fn disk_automorphism(p: Complex64, theta: f64) -> Result<Self> {
        if p.norm() >= 1.0 {
            return Err(Error::OutsideDisk(p));
        }
        let rot = Complex64::from_polar(1.0, theta);
        Self::new(rot, rot * p, p.conj(), Complex64::new(1.0, 0.0))
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        let den = self.c * z + self.d;
        if den.norm() < 1e-300 {
            return Err(Error::DivisionByZeroJet(den));
        }
        Ok((self.a * z + self.b) / den)
    }

    pub fn mobius_jet(&self, z: Complex64) -> Result<Jet3> {
        let den = self.c * z + self.d;
        if den.norm() < 1e-300 {
            return Err(Error::DivisionByZeroJet(den));
        }
        let inv = den.inv();
        let det = self.a * self.d - self.b * self.c;
        let d1 = det * inv * inv;
        Ok(Jet3::from_raw(
            (self.a * z + self.b) * inv,
            d1,
            -2.0 * self.c * d1 * inv,
            6.0 * self.c * self.c * d1 * inv * inv,
        ))
    }
}

impl AnalyticMap for Mobius {
    fn name(&self) -> &str {
        "mobius"
    }

    fn info(&self) -> &MapInfo {
        &self.info
    }

    fn jet(&self, z: Complex64) -> Result<Jet3> {
        self.mobius_jet(z)
    }
}

/// `M ∘ f` for a Möbius `M`.
#[derive(Debug, Clone)]
pub struct PostComposed {
    outer: Mobius,
    inner: SharedMap,
    info: MapInfo,
}

impl PostComposed {
    pub fn new(outer: Mobius, inner: SharedMap) -> Result<Self> {
        let info = MapInfo { normalized: false, alpha_tag: None, second_deriv_at_zero: Complex64::new(0.0, 0.0) };
        let mut out = Self { outer, inner, info };
        out.info.second_deriv_at_zero = out.jet(Complex64::new(0.0, 0.0))?.d2;
        Ok(out)
    }
}

impl AnalyticMap for PostComposed {
    fn name(&self) -> &str {
        "mobius-after"
    }

    fn info(&self) -> &MapInfo {
        &self.info
    }

    fn jet(&self, z: Complex64) -> Result<Jet3> {
        let inner = self.inner.jet(z)?;
        Ok(self.outer.mobius_jet(inner.d0)?.compose(inner))
    }
}

/// `f ∘ M` for a Möbius `M` keeping the sampled region inside the disk.
#[derive(Debug, Clone)]
pub struct PreComposed {
    outer: SharedMap,
    inner: Mobius,
    info: MapInfo,
}

impl PreComposed {
    pub fn new(outer: SharedMap, inner: Mobius) -> Result<Self> {
        let info = MapInfo { normalized: false, alpha_tag: None, second_deriv_at_zero: Complex64::new(0.0, 0.0) };
        let mut out = Self { outer, inner, info };
        out.info.second_deriv_at_zero = out.jet(Complex64::new(0.0, 0.0))?.d2;
        Ok(out)
    }
}

impl AnalyticMap for PreComposed {
    fn name(&self) -> &str {
        "mobius-before"
    }

    fn info(&self) -> &MapInfo {
        &self.info
    }

    fn jet(&self, z: Complex64) -> Result<Jet3> {
        let m = self.inner.mobius_jet(z)?;
        Ok(self.outer.jet(m.d0)?.compose(m))
    }

    fn log_derivative(&self, z: Complex64) -> Result<LogDerivative> {
        // (f∘M)''/(f∘M)' = Q(M) M' + M''/M'
        let m = self.inner.mobius_jet(z)?;
        let q = self.outer.log_derivative(m.d0)?;
        let m_ratio = m.d2 / m.d1;
        let m_ratio_prime = m.d3 / m.d1 - m_ratio * m_ratio;
        Ok(LogDerivative {
            value: q.value * m.d1 + m_ratio,
            derivative: q.derivative * m.d1 * m.d1 + q.value * m.d2 + m_ratio_prime,
        })
    }
}
