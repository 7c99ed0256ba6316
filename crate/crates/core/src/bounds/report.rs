use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// Residuals below `-DEFAULT_RESIDUAL_TOL` count as violations.
pub const DEFAULT_RESIDUAL_TOL: f64 = 1e-9;

/// The inequality a [`BoundReport`] is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremId {
    /// `Re{1+zf''/f'} ≥ α + (1-|z|²)|f''/f'|²/(4(1-α))`
    Theorem1Ii,
    /// `|(1-|z|²) f''/f' - 2(1-α) z̄| ≤ 2(1-α)`
    Theorem1Iii,
    /// Koebe transforms keep order `α(1-|a|)/(1+|a|)`.
    Prop2KoebeOrder,
    Prop3,
    Theorem4Distortion,
    Theorem4Growth,
    TheoremA,
    Theorem5,
    Theorem7,
    Lemma6,
    /// `(1-|z|²)²|Sf| ≤ 2(1-α)[(1+α) - |Φ|² - αA]`
    Remark8Refined,
    /// `A ≥ 0` on `C_α⁰`.
    Remark8ANonneg,
    /// `A ≥ 1 - |φ|` on `C_α⁰`.
    Remark8ASchwarz,
    Remark9,
    Trimble,
    Yamashita,
}

impl TheoremId {
    pub const ALL: [TheoremId; 16] = [
        TheoremId::Theorem1Ii,
        TheoremId::Theorem1Iii,
        TheoremId::Prop2KoebeOrder,
        TheoremId::Prop3,
        TheoremId::Theorem4Distortion,
        TheoremId::Theorem4Growth,
        TheoremId::TheoremA,
        TheoremId::Theorem5,
        TheoremId::Theorem7,
        TheoremId::Lemma6,
        TheoremId::Remark8Refined,
        TheoremId::Remark8ANonneg,
        TheoremId::Remark8ASchwarz,
        TheoremId::Remark9,
        TheoremId::Trimble,
        TheoremId::Yamashita,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::Theorem1Ii => "theorem1_ii",
            TheoremId::Theorem1Iii => "theorem1_iii",
            TheoremId::Prop2KoebeOrder => "prop2_koebe_order",
            TheoremId::Prop3 => "prop3",
            TheoremId::Theorem4Distortion => "theorem4_distortion",
            TheoremId::Theorem4Growth => "theorem4_growth",
            TheoremId::TheoremA => "theorem_a",
            TheoremId::Theorem5 => "theorem5",
            TheoremId::Theorem7 => "theorem7",
            TheoremId::Lemma6 => "lemma6",
            TheoremId::Remark8Refined => "remark8_refined",
            TheoremId::Remark8ANonneg => "remark8_a_nonneg",
            TheoremId::Remark8ASchwarz => "remark8_a_schwarz",
            TheoremId::Remark9 => "remark9",
            TheoremId::Trimble => "trimble",
            TheoremId::Yamashita => "yamashita",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|id| id.as_str() == name)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Residual statistics of one inequality at one `α`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundReport {
    pub theorem_id: TheoremId,
    pub alpha: f64,
    pub sample_count: usize,
    pub min_residual: f64,
    pub argmin_z: Complex64,
    pub violations: usize,
    pub tolerance: f64,
}

impl BoundReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Order-dependent accumulator for a [`BoundReport`]. Pushing the same
/// residuals in the same order always yields the same report.
#[derive(Debug, Clone)]
pub struct ReportBuilder {
    theorem_id: TheoremId,
    alpha: f64,
    tolerance: f64,
    count: usize,
    min: f64,
    argmin: Complex64,
    violations: usize,
}

impl ReportBuilder {
    pub fn new(theorem_id: TheoremId, alpha: f64, tolerance: f64) -> Self {
        Self {
            theorem_id,
            alpha,
            tolerance,
            count: 0,
            min: f64::INFINITY,
            argmin: Complex64::new(0.0, 0.0),
            violations: 0,
        }
    }

    pub fn theorem_id(&self) -> TheoremId {
        self.theorem_id
    }

    pub fn push(&mut self, z: Complex64, residual: f64) {
        self.count += 1;
        if residual.is_nan() {
            self.violations += 1;
            if !self.min.is_nan() {
                self.min = f64::NAN;
                self.argmin = z;
            }
            return;
        }
        if !(residual >= -self.tolerance) {
            self.violations += 1;
        }
        if residual < self.min {
            self.min = residual;
            self.argmin = z;
        }
    }

    /// Appends `other`'s samples after this builder's.
    pub fn merge(&mut self, other: &ReportBuilder) {
        if other.count == 0 {
            return;
        }
        self.count += other.count;
        self.violations += other.violations;
        if other.min.is_nan() {
            if !self.min.is_nan() {
                self.min = f64::NAN;
                self.argmin = other.argmin;
            }
        } else if other.min < self.min {
            self.min = other.min;
            self.argmin = other.argmin;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn finish(self) -> Result<BoundReport> {
        if self.count == 0 {
            return Err(Error::InvalidArgument(format!(
                "no samples for {} at alpha = {}",
                self.theorem_id, self.alpha
            )));
        }
        Ok(BoundReport {
            theorem_id: self.theorem_id,
            alpha: self.alpha,
            sample_count: self.count,
            min_residual: self.min,
            argmin_z: self.argmin,
            violations: self.violations,
            tolerance: self.tolerance,
        })
    }
}
