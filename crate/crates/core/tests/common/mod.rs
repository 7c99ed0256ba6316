#![allow(dead_code)]

use num_complex::Complex64;
use schwarzian::maps::XorShift64Star;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Steps for the first, second and third derivative. Higher orders need
/// larger steps to keep roundoff (which grows like `ε/hⁿ`) below 1e-8.
pub const FD_STEPS: [f64; 3] = [1e-3, 5e-3, 2e-2];

fn richardson(d: impl Fn(f64) -> Complex64, h: f64) -> Complex64 {
    // every stencil below has an even error expansion: two levels remove h² and h⁴
    let (a, b, e) = (d(h), d(h / 2.0), d(h / 4.0));
    let ab = (4.0 * b - a) / 3.0;
    let be = (4.0 * e - b) / 3.0;
    (16.0 * be - ab) / 15.0
}

/// `(f, f', f'', f''')` at `z` from central differences along the real
/// axis, Richardson-extrapolated to `O(h⁶)`. Valid for analytic `f`.
pub fn fd_derivatives(f: impl Fn(Complex64) -> Complex64, z: Complex64) -> [Complex64; 4] {
    let at = |t: f64| f(z + t);
    let d1 = richardson(|h| (at(h) - at(-h)) / (2.0 * h), FD_STEPS[0]);
    let d2 = richardson(|h| (at(h) - 2.0 * at(0.0) + at(-h)) / (h * h), FD_STEPS[1]);
    let d3 =
        richardson(|h| (at(2.0 * h) - 2.0 * at(h) + 2.0 * at(-h) - at(-2.0 * h)) / (2.0 * h * h * h), FD_STEPS[2]);
    [at(0.0), d1, d2, d3]
}

/// `|a - b| / max(|b|, 1)`.
pub fn rel_err(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(1.0)
}

/// Uniform point in the disk `|z| ≤ r`.
pub fn disk_point(rng: &mut XorShift64Star, r: f64) -> Complex64 {
    let rho = r * rng.next_f64().sqrt();
    Complex64::from_polar(rho, std::f64::consts::TAU * rng.next_f64())
}

pub fn disk_points(seed: u64, count: usize, r: f64) -> Vec<Complex64> {
    let mut rng = XorShift64Star::new(seed);
    (0..count).map(|_| disk_point(&mut rng, r)).collect()
}
