//! Adaptive Gauss–Kronrod (G7/K15) quadrature on real intervals with
//! complex-valued integrands.

#![allow(clippy::excessive_precision)]

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};

/// Bisection depth after which a panel is declared non-convergent.
pub const DEFAULT_MAX_DEPTH: u32 = 40;

// Kronrod abscissae on [-1, 1], descending; odd indices are the Gauss nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuadratureResult {
    pub value: Complex64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy)]
pub struct QuadratureOptions {
    pub tol: f64,
    pub max_depth: u32,
}

impl QuadratureOptions {
    pub fn with_tol(tol: f64) -> Self {
        Self { tol, max_depth: DEFAULT_MAX_DEPTH }
    }
}

/// One K15 panel: returns (kronrod estimate, |K15 - G7|).
fn gk15<F>(f: &F, a: f64, b: f64) -> Result<(Complex64, f64)>
where
    F: Fn(f64) -> Result<Complex64>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center)?;
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for (j, (&x, &w)) in XGK.iter().zip(WGK.iter()).take(7).enumerate() {
        let dx = half * x;
        let pair = f(center - dx)? + f(center + dx)?;
        kronrod += pair * w;
        if j % 2 == 1 {
            gauss += pair * WG[j / 2];
        }
    }
    let kronrod = kronrod * half;
    let gauss = gauss * half;
    Ok((kronrod, (kronrod - gauss).norm()))
}

/// Integrates `f` over `[a, b]`, bisecting until every panel's local error
/// estimate is below `tol` scaled by the panel's share of the interval.
pub fn integrate<F>(f: F, a: f64, b: f64, opts: QuadratureOptions) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Result<Complex64>,
{
    if !(opts.tol > 0.0) {
        return Err(Error::InvalidArgument(format!("quadrature tolerance {} must be positive", opts.tol)));
    }
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::NonFinite("quadrature interval"));
    }
    let width = b - a;
    if width == 0.0 {
        return Ok(QuadratureResult { value: Complex64::new(0.0, 0.0), error_estimate: 0.0, evaluations: 0 });
    }
    let mut value = Complex64::new(0.0, 0.0);
    let mut error = 0.0;
    let mut evaluations = 0usize;
    // depth-first, left panel first, so the summation order is fixed
    let mut stack = vec![(a, b, 0u32)];
    while let Some((lo, hi, depth)) = stack.pop() {
        let (panel, err) = gk15(&f, lo, hi)?;
        evaluations += 15;
        if !(panel.re.is_finite() && panel.im.is_finite()) {
            return Err(Error::NonFinite("quadrature panel"));
        }
        if err <= opts.tol * ((hi - lo) / width).abs() {
            value += panel;
            error += err;
        } else if depth >= opts.max_depth {
            return Err(Error::NonConvergedQuadrature { depth, error: err });
        } else {
            let mid = 0.5 * (lo + hi);
            stack.push((mid, hi, depth + 1));
            stack.push((lo, mid, depth + 1));
        }
    }
    Ok(QuadratureResult { value, error_estimate: error, evaluations })
}

/// Integrates a parametrised radial segment `s ∈ [0, 1]`.
pub fn radial_quadrature<F>(integrand: F, tol: f64) -> Result<QuadratureResult>
where
    F: Fn(f64) -> Result<Complex64>,
{
    integrate(integrand, 0.0, 1.0, QuadratureOptions::with_tol(tol))
}
