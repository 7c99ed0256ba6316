//! Order-3 truncated Taylor jets over the complex numbers.
//!
//! A [`Jet3`] carries the value and the first three derivatives of an
//! analytic function at an implicit base point. Derivatives are stored raw
//! (`f'''`, not `f'''/3!`), which is the form the Schwarzian consumes.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Threshold below which a jet value is treated as zero when dividing.
pub const DEFAULT_DIV_EPS: f64 = 1e-300;

const ONE: Complex64 = Complex64::new(1.0, 0.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Checked constructor for a complex scalar; rejects NaN and infinities.
pub fn complex(re: f64, im: f64) -> Result<Complex64> {
    if re.is_finite() && im.is_finite() {
        Ok(Complex64::new(re, im))
    } else {
        Err(Error::NonFinite("complex"))
    }
}

/// `(f, f', f'', f''')` of an analytic function at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet3 {
    pub d0: Complex64,
    pub d1: Complex64,
    pub d2: Complex64,
    pub d3: Complex64,
}

/// Elementary functions available through [`Jet3::elem`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Elementary {
    Exp,
    Log,
    /// Principal power `a^c`.
    Pow(Complex64),
}

impl Jet3 {
    /// Builds a jet, rejecting non-finite components.
    pub fn new(d0: Complex64, d1: Complex64, d2: Complex64, d3: Complex64) -> Result<Self> {
        let jet = Self::from_raw(d0, d1, d2, d3);
        if jet.is_finite() {
            Ok(jet)
        } else {
            Err(Error::NonFinite("jet"))
        }
    }

    /// Unchecked constructor used inside arithmetic.
    #[inline]
    pub const fn from_raw(d0: Complex64, d1: Complex64, d2: Complex64, d3: Complex64) -> Self {
        Self { d0, d1, d2, d3 }
    }

    pub const fn constant(c: Complex64) -> Self {
        Self::from_raw(c, ZERO, ZERO, ZERO)
    }

    /// Jet of `z ↦ z` at `z`.
    pub const fn identity(z: Complex64) -> Self {
        Self::from_raw(z, ONE, ZERO, ZERO)
    }

    pub fn is_finite(&self) -> bool {
        self.components().iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }

    pub fn components(&self) -> [Complex64; 4] {
        [self.d0, self.d1, self.d2, self.d3]
    }

    pub fn scale(self, k: Complex64) -> Self {
        Self::from_raw(self.d0 * k, self.d1 * k, self.d2 * k, self.d3 * k)
    }

    /// Leibniz rule to third order.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, b: Self) -> Self {
        let a = self;
        Self::from_raw(
            a.d0 * b.d0,
            a.d1 * b.d0 + a.d0 * b.d1,
            a.d2 * b.d0 + 2.0 * a.d1 * b.d1 + a.d0 * b.d2,
            a.d3 * b.d0 + 3.0 * a.d2 * b.d1 + 3.0 * a.d1 * b.d2 + a.d0 * b.d3,
        )
    }

    /// Fallible, hence not `std::ops::Div`.
    #[allow(clippy::should_implement_trait)]
    pub fn div(self, b: Self) -> Result<Self> {
        self.div_with_eps(b, DEFAULT_DIV_EPS)
    }

    pub fn div_with_eps(self, b: Self, eps: f64) -> Result<Self> {
        Ok(self.mul(b.recip_with_eps(eps)?))
    }

    pub fn recip(self) -> Result<Self> {
        self.recip_with_eps(DEFAULT_DIV_EPS)
    }

    fn recip_with_eps(self, eps: f64) -> Result<Self> {
        if self.d0.norm() < eps {
            return Err(Error::DivisionByZeroJet(self.d0));
        }
        let inv = self.d0.inv();
        let inv2 = inv * inv;
        let outer = Self::from_raw(inv, -inv2, 2.0 * inv2 * inv, -6.0 * inv2 * inv2);
        Ok(outer.compose(self))
    }

    /// Chain rule (Faà di Bruno) to third order. `self` must be the jet of
    /// the outer function `g` at the point `inner.d0`.
    pub fn compose(self, inner: Self) -> Self {
        let (g, h) = (self, inner);
        let h1sq = h.d1 * h.d1;
        Self::from_raw(
            g.d0,
            g.d1 * h.d1,
            g.d2 * h1sq + g.d1 * h.d2,
            g.d3 * h1sq * h.d1 + 3.0 * g.d2 * h.d1 * h.d2 + g.d1 * h.d3,
        )
    }

    pub fn elem(self, kind: Elementary) -> Result<Self> {
        let a = self.d0;
        let outer = match kind {
            Elementary::Exp => {
                let e = a.exp();
                Self::from_raw(e, e, e, e)
            }
            Elementary::Log => {
                check_branch(a)?;
                let inv = a.inv();
                Self::from_raw(a.ln(), inv, -inv * inv, 2.0 * inv * inv * inv)
            }
            Elementary::Pow(c) => {
                check_branch(a)?;
                let p = a.powc(c);
                let inv = a.inv();
                let c1 = c - 1.0;
                let c2 = c - 2.0;
                Self::from_raw(
                    p,
                    p * c * inv,
                    p * c * c1 * inv * inv,
                    p * c * c1 * c2 * inv * inv * inv,
                )
            }
        };
        Ok(outer.compose(self))
    }

    pub fn exp(self) -> Self {
        // exp has no branch cut
        let e = self.d0.exp();
        Self::from_raw(e, e, e, e).compose(self)
    }

    pub fn ln(self) -> Result<Self> {
        self.elem(Elementary::Log)
    }

    pub fn powc(self, c: Complex64) -> Result<Self> {
        self.elem(Elementary::Pow(c))
    }

    /// Drops the value and shifts derivatives down: the jet of `f'` given
    /// the jet of `f`, with an unknown third derivative supplied by the caller.
    pub fn derivative_with(self, d3: Complex64) -> Self {
        Self::from_raw(self.d1, self.d2, self.d3, d3)
    }
}

fn check_branch(a: Complex64) -> Result<()> {
    if a.im == 0.0 && a.re <= 0.0 {
        Err(Error::BranchCutViolation(a))
    } else {
        Ok(())
    }
}

impl Add for Jet3 {
    type Output = Self;
    fn add(self, b: Self) -> Self {
        Self::from_raw(self.d0 + b.d0, self.d1 + b.d1, self.d2 + b.d2, self.d3 + b.d3)
    }
}

impl Sub for Jet3 {
    type Output = Self;
    fn sub(self, b: Self) -> Self {
        Self::from_raw(self.d0 - b.d0, self.d1 - b.d1, self.d2 - b.d2, self.d3 - b.d3)
    }
}

impl Neg for Jet3 {
    type Output = Self;
    fn neg(self) -> Self {
        Self::from_raw(-self.d0, -self.d1, -self.d2, -self.d3)
    }
}

impl Mul for Jet3 {
    type Output = Self;
    fn mul(self, b: Self) -> Self {
        Jet3::mul(self, b)
    }
}

impl Add<Complex64> for Jet3 {
    type Output = Self;
    fn add(self, c: Complex64) -> Self {
        Self::from_raw(self.d0 + c, self.d1, self.d2, self.d3)
    }
}

impl Sub<Complex64> for Jet3 {
    type Output = Self;
    fn sub(self, c: Complex64) -> Self {
        Self::from_raw(self.d0 - c, self.d1, self.d2, self.d3)
    }
}

impl Mul<Complex64> for Jet3 {
    type Output = Self;
    fn mul(self, k: Complex64) -> Self {
        self.scale(k)
    }
}

impl Mul<f64> for Jet3 {
    type Output = Self;
    fn mul(self, k: f64) -> Self {
        self.scale(Complex64::new(k, 0.0))
    }
}
