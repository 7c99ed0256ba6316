use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::jets::Jet3;

/// Zeros of sampled Blaschke products lie in `|a| < SCHWARZ_ZERO_RADIUS`.
pub const SCHWARZ_ZERO_RADIUS: f64 = 0.9;

const MAX_DEGREE: usize = 8;
const CHECK_GRID: usize = 64;
const CHECK_RADIUS: f64 = 0.999;

type JetFn = dyn Fn(Complex64) -> Result<Jet3> + Send + Sync;

/// The xorshift64* generator (Vigna, 2016) used by [`random_schwarz`].
///
/// The seed is first mixed by one SplitMix64 step; a zero state is replaced
/// by `0x9E37_79B9_7F4A_7C15`. Each output is
///
/// ```text
/// x ^= x >> 12;  x ^= x << 25;  x ^= x >> 27;
/// out = x * 0x2545_F491_4F6C_DD1D   (wrapping)
/// ```
///
/// and uniform reals in `[0, 1)` are `(out >> 11) * 2^-53`. This recurrence
/// is part of the output contract: equal seeds give equal maps everywhere.
#[derive(Debug, Clone)]
pub struct XorShift64Star {
    state: u64,
}

impl XorShift64Star {
    pub fn new(seed: u64) -> Self {
        let mut z = seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^= z >> 31;
        Self { state: if z == 0 { 0x9E37_79B9_7F4A_7C15 } else { z } }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

#[derive(Clone)]
enum Kind {
    /// `scale · Π (z - a_k) / (1 - ā_k z)`
    Blaschke { scale: Complex64, zeros: Vec<Complex64> },
    Custom(Arc<JetFn>),
}

/// An analytic self-map `φ` of the unit disk.
#[derive(Clone)]
pub struct SchwarzFunction {
    kind: Kind,
    vanishes_at_zero: bool,
    p0: f64,
}

impl fmt::Debug for SchwarzFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = f.debug_struct("SchwarzFunction");
        match &self.kind {
            Kind::Blaschke { scale, zeros } => s.field("scale", scale).field("zeros", zeros),
            Kind::Custom(_) => s.field("kind", &"custom"),
        };
        s.field("vanishes_at_zero", &self.vanishes_at_zero).field("p0", &self.p0).finish()
    }
}

impl SchwarzFunction {
    /// `scale` times the finite Blaschke product with the given zeros.
    /// Requires `|scale| ≤ 1` (strictly below 1 when there are no zeros).
    pub fn blaschke(scale: Complex64, zeros: Vec<Complex64>) -> Result<Self> {
        if !(scale.norm() <= 1.0) || (zeros.is_empty() && scale.norm() >= 1.0) {
            return Err(Error::InvalidArgument(format!("Blaschke scale {scale} must satisfy |c| <= 1")));
        }
        if let Some(a) = zeros.iter().find(|a| !(a.norm() < 1.0)) {
            return Err(Error::OutsideDisk(*a));
        }
        let vanishes_at_zero = scale.norm() == 0.0 || zeros.iter().any(|a| a.norm() == 0.0);
        let mut phi = Self { kind: Kind::Blaschke { scale, zeros }, vanishes_at_zero, p0: 0.0 };
        phi.p0 = phi.value(Complex64::new(0.0, 0.0))?.norm();
        Ok(phi)
    }

    /// `φ(z) = z`.
    pub fn identity() -> Self {
        Self::monomial(1)
    }

    /// `φ(z) = z^n`.
    pub fn monomial(n: usize) -> Self {
        Self::blaschke(Complex64::new(1.0, 0.0), vec![Complex64::new(0.0, 0.0); n])
            .expect("monomials are Blaschke products")
    }

    /// Constant `φ ≡ c` with `|c| < 1`.
    pub fn constant(c: Complex64) -> Result<Self> {
        Self::blaschke(c, Vec::new())
    }

    /// A general self-map given by its jets. Membership is checked on a
    /// 64×64 polar grid with `r ≤ 0.999`.
    pub fn from_fn<F>(f: F, vanishes_at_zero: bool) -> Result<Self>
    where
        F: Fn(Complex64) -> Result<Jet3> + Send + Sync + 'static,
    {
        let phi = Self { kind: Kind::Custom(Arc::new(f)), vanishes_at_zero, p0: 0.0 };
        let p0 = phi.value(Complex64::new(0.0, 0.0))?.norm();
        if vanishes_at_zero && p0 >= 1e-12 {
            return Err(Error::InvalidArgument(format!("|phi(0)| = {p0:e} but phi was declared to vanish at 0")));
        }
        for i in 0..=CHECK_GRID {
            let r = CHECK_RADIUS * i as f64 / CHECK_GRID as f64;
            for j in 0..CHECK_GRID {
                let z = Complex64::from_polar(r, std::f64::consts::TAU * j as f64 / CHECK_GRID as f64);
                let modulus = phi.value(z)?.norm();
                if !(modulus < 1.0) {
                    return Err(Error::NotSelfMap { z, modulus });
                }
            }
        }
        Ok(Self { p0, ..phi })
    }

    pub fn vanishes_at_zero(&self) -> bool {
        self.vanishes_at_zero
    }

    /// `|φ(0)|`.
    pub fn p0(&self) -> f64 {
        self.p0
    }

    /// Scale and zeros when `φ` is a scaled Blaschke product.
    pub fn blaschke_data(&self) -> Option<(Complex64, &[Complex64])> {
        match &self.kind {
            Kind::Blaschke { scale, zeros } => Some((*scale, zeros.as_slice())),
            Kind::Custom(_) => None,
        }
    }

    pub fn value(&self, z: Complex64) -> Result<Complex64> {
        match &self.kind {
            Kind::Blaschke { scale, zeros } => {
                let mut acc = *scale;
                for a in zeros {
                    acc *= (z - a) / (1.0 - a.conj() * z);
                }
                Ok(acc)
            }
            Kind::Custom(f) => Ok(f(z)?.d0),
        }
    }

    /// `(φ, φ', φ'', φ''')` at `z`.
    pub fn jet(&self, z: Complex64) -> Result<Jet3> {
        match &self.kind {
            Kind::Blaschke { scale, zeros } => {
                let mut acc = Jet3::constant(*scale);
                for a in zeros {
                    acc = acc.mul(blaschke_factor(*a, z));
                }
                Ok(acc)
            }
            Kind::Custom(f) => f(z),
        }
    }
}

/// Jet of `(z - a) / (1 - ā z)`.
fn blaschke_factor(a: Complex64, z: Complex64) -> Jet3 {
    let ac = a.conj();
    let inv = (1.0 - ac * z).inv();
    let d1 = (1.0 - a.norm_sqr()) * inv * inv;
    let d2 = 2.0 * ac * d1 * inv;
    let d3 = 3.0 * ac * d2 * inv;
    Jet3::from_raw((z - a) * inv, d1, d2, d3)
}

/// A seeded random Schwarz function `c · B(z)`: `B` is a Blaschke product
/// of the given degree with zeros uniform (by area) in `|a| < 0.9`, and
/// `|c|` is uniform in `(0, 1]` with a uniform argument.
///
/// Draw order from [`XorShift64Star`]: for each zero, radius then angle
/// (`r = 0.9 √u`, `θ = 2π v`); when `vanish_at_zero` the first zero is
/// pinned to 0 and consumes no draws. Then `|c| = 1 - u` and `arg c = 2π v`.
pub fn random_schwarz(seed: u64, degree: usize, vanish_at_zero: bool) -> Result<SchwarzFunction> {
    if !(1..=MAX_DEGREE).contains(&degree) {
        return Err(Error::InvalidArgument(format!("degree {degree} outside 1..={MAX_DEGREE}")));
    }
    let mut rng = XorShift64Star::new(seed);
    let mut zeros = Vec::with_capacity(degree);
    for k in 0..degree {
        if vanish_at_zero && k == 0 {
            zeros.push(Complex64::new(0.0, 0.0));
            continue;
        }
        let r = SCHWARZ_ZERO_RADIUS * rng.next_f64().sqrt();
        let theta = std::f64::consts::TAU * rng.next_f64();
        zeros.push(Complex64::from_polar(r, theta));
    }
    let modulus = 1.0 - rng.next_f64();
    let arg = std::f64::consts::TAU * rng.next_f64();
    SchwarzFunction::blaschke(Complex64::from_polar(modulus, arg), zeros)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_points() -> Vec<Complex64> {
        (0..100).map(|k| Complex64::from_polar(0.95 * (k as f64 / 100.0), 2.3 * k as f64)).collect()
    }

    #[test]
    fn xorshift_reference_stream() {
        let mut a = XorShift64Star::new(42);
        let mut b = XorShift64Star::new(42);
        let xs: Vec<u64> = (0..8).map(|_| a.next_u64()).collect();
        let ys: Vec<u64> = (0..8).map(|_| b.next_u64()).collect();
        assert_eq!(xs, ys);
        assert_ne!(XorShift64Star::new(43).next_u64(), xs[0]);
        let mut r = XorShift64Star::new(0);
        for _ in 0..1000 {
            let u = r.next_f64();
            assert!((0.0..1.0).contains(&u));
        }
    }

    #[test]
    fn random_schwarz_is_deterministic() {
        let a = random_schwarz(7, 5, false).unwrap();
        let b = random_schwarz(7, 5, false).unwrap();
        for z in sample_points() {
            assert_eq!(a.value(z).unwrap(), b.value(z).unwrap());
        }
    }

    #[test]
    fn random_schwarz_is_a_self_map() {
        for seed in 0..20 {
            let phi = random_schwarz(seed, 1 + (seed as usize % 8), seed % 2 == 0).unwrap();
            let mut max = 0.0f64;
            for i in 0..=64 {
                for j in 0..64 {
                    let z = Complex64::from_polar(0.999 * i as f64 / 64.0, std::f64::consts::TAU * j as f64 / 64.0);
                    max = max.max(phi.value(z).unwrap().norm());
                }
            }
            assert!(max < 1.0, "seed {seed}: {max}");
            let (_, zeros) = phi.blaschke_data().unwrap();
            assert!(zeros.iter().all(|a| a.norm() < SCHWARZ_ZERO_RADIUS));
        }
    }

    #[test]
    fn pinned_zero() {
        for seed in 0..10 {
            let phi = random_schwarz(seed, 3, true).unwrap();
            assert!(phi.vanishes_at_zero());
            assert!(phi.value(Complex64::new(0.0, 0.0)).unwrap().norm() < 1e-15);
            assert!(phi.p0() < 1e-15);
        }
        let phi = random_schwarz(3, 3, false).unwrap();
        assert!(!phi.vanishes_at_zero());
        assert!(phi.p0() > 0.0 && phi.p0() < 1.0);
    }

    #[test]
    fn degree_limits() {
        assert!(random_schwarz(1, 0, false).is_err());
        assert!(random_schwarz(1, 9, false).is_err());
        assert!(random_schwarz(1, 8, false).is_ok());
    }

    #[test]
    fn blaschke_jet_matches_generic_arithmetic() {
        let phi = random_schwarz(11, 4, false).unwrap();
        let (scale, zeros) = phi.blaschke_data().unwrap();
        let z = Complex64::new(0.3, -0.4);
        let id = Jet3::identity(z);
        let mut expected = Jet3::constant(scale);
        for a in zeros {
            let num = id - *a;
            let den = Jet3::constant(Complex64::new(1.0, 0.0)) - id * a.conj();
            expected = expected.mul(num.div(den).unwrap());
        }
        let got = phi.jet(z).unwrap();
        for (x, y) in got.components().iter().zip(expected.components()) {
            assert!((x - y).norm() < 1e-12 * y.norm().max(1.0));
        }
    }

    #[test]
    fn custom_functions_are_validated() {
        let half_z = SchwarzFunction::from_fn(
            |z| Ok(Jet3::identity(z) * 0.5),
            true,
        )
        .unwrap();
        assert!((half_z.value(Complex64::new(0.5, 0.0)).unwrap().re - 0.25).abs() < 1e-15);
        let too_big = SchwarzFunction::from_fn(|z| Ok(Jet3::identity(z) * 2.0), true);
        assert!(matches!(too_big, Err(Error::NotSelfMap { .. })));
        let not_vanishing = SchwarzFunction::from_fn(|z| Ok(Jet3::identity(z) * 0.5 + Complex64::new(0.1, 0.0)), true);
        assert!(not_vanishing.is_err());
    }

    #[test]
    fn constants_and_monomials() {
        let zero = SchwarzFunction::constant(Complex64::new(0.0, 0.0)).unwrap();
        assert!(zero.vanishes_at_zero());
        assert!(SchwarzFunction::constant(Complex64::new(1.0, 0.0)).is_err());
        let sq = SchwarzFunction::monomial(2);
        let j = sq.jet(Complex64::new(0.5, 0.0)).unwrap();
        assert!((j.d0.re - 0.25).abs() < 1e-15 && (j.d1.re - 1.0).abs() < 1e-15 && (j.d2.re - 2.0).abs() < 1e-15);
    }
}
