use std::f64::consts::TAU;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::maps::AnalyticMap;
use crate::operators;

pub const DEFAULT_R_MAX: f64 = 0.999;

const GOLDEN: f64 = 0.618_033_988_749_894_9;

/// Polar grid `{ r_max·i/n_r · e^{2πi j/n_θ} }`, `i = 0..=n_r`, `j < n_θ`.
/// The origin appears once. Doubling either count yields a superset.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PolarGrid {
    pub r_max: f64,
    pub n_r: usize,
    pub n_theta: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridPoint {
    pub ring: usize,
    pub spoke: usize,
    pub z: Complex64,
}

impl PolarGrid {
    /// Requires `0 < r_max < 1`, `n_r, n_θ ≥ 8` and `n_θ` divisible by 4
    /// so both axes are sampled.
    pub fn new(r_max: f64, n_r: usize, n_theta: usize) -> Result<Self> {
        if !(r_max > 0.0 && r_max < 1.0) {
            return Err(Error::InvalidArgument(format!("search radius {r_max} must lie in (0, 1)")));
        }
        if n_r < 8 || n_theta < 8 || !n_theta.is_multiple_of(4) {
            return Err(Error::InvalidArgument(format!(
                "grid {n_r}x{n_theta} needs n_r >= 8 and n_theta >= 8 divisible by 4"
            )));
        }
        Ok(Self { r_max, n_r, n_theta })
    }

    /// Coarse grid that skips the size checks; used for expensive samples.
    pub fn coarse(r_max: f64, n_r: usize, n_theta: usize) -> Self {
        Self { r_max, n_r: n_r.max(1), n_theta: n_theta.max(1) }
    }

    pub fn radius(&self, ring: usize) -> f64 {
        self.r_max * ring as f64 / self.n_r as f64
    }

    pub fn angle(&self, spoke: usize) -> f64 {
        TAU * spoke as f64 / self.n_theta as f64
    }

    pub fn len(&self) -> usize {
        1 + self.n_r * self.n_theta
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Points ordered by ring, then spoke.
    pub fn points(&self) -> Vec<GridPoint> {
        let mut pts = Vec::with_capacity(self.len());
        pts.push(GridPoint { ring: 0, spoke: 0, z: Complex64::new(0.0, 0.0) });
        for ring in 1..=self.n_r {
            let r = self.radius(ring);
            for spoke in 0..self.n_theta {
                pts.push(GridPoint { ring, spoke, z: Complex64::from_polar(r, self.angle(spoke)) });
            }
        }
        pts
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchOptions {
    /// Alternating (r, θ) golden-section passes.
    pub refine_iters: usize,
    /// Golden-section steps per one-dimensional search.
    pub golden_steps: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { refine_iters: 5, golden_steps: 40 }
    }
}

/// Estimated `sup (1-|z|²)² |Sf(z)|` over `|z| ≤ r_max`. Always a lower
/// bound for the supremum: only sampled values are reported.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NormEstimate {
    pub value: f64,
    pub argmax: Complex64,
    pub r_max: f64,
    pub grid: (usize, usize),
    pub refinement_steps: usize,
    pub is_lower_bound: bool,
}

/// Estimated `inf Re{1 + z f''/f'}` over `|z| ≤ r_max`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OrderCertificate {
    pub inf_value: f64,
    pub argmin: Complex64,
    pub r_max: f64,
    pub grid: (usize, usize),
}

/// Best grid point for `objective` (maximised, or minimised when
/// `maximize` is false). Points are evaluated in parallel; the reduction
/// walks them in grid order and keeps the first strict improvement, so
/// ties go to the smallest radius, then the smallest angle.
pub fn grid_extremum<F>(grid: &PolarGrid, objective: F, maximize: bool) -> Result<(GridPoint, f64)>
where
    F: Fn(Complex64) -> Result<f64> + Sync,
{
    let points = grid.points();
    let values: Vec<Result<f64>> = points.par_iter().map(|p| objective(p.z)).collect();
    let mut best: Option<(GridPoint, f64)> = None;
    for (p, v) in points.into_iter().zip(values) {
        let v = v?;
        let better = match best {
            None => true,
            Some((_, b)) => {
                if maximize {
                    v > b
                } else {
                    v < b
                }
            }
        };
        if better {
            best = Some((p, v));
        }
    }
    Ok(best.expect("grid is never empty"))
}

/// Golden-section search for the maximum of `g` on `[lo, hi]`. Returns the
/// best evaluated point.
fn golden_max<G>(g: G, lo: f64, hi: f64, steps: usize) -> Result<(f64, f64)>
where
    G: Fn(f64) -> Result<f64>,
{
    let (mut a, mut b) = (lo, hi);
    let mut x1 = b - GOLDEN * (b - a);
    let mut x2 = a + GOLDEN * (b - a);
    let mut g1 = g(x1)?;
    let mut g2 = g(x2)?;
    let mut best = if g2 > g1 { (x2, g2) } else { (x1, g1) };
    for _ in 0..steps {
        if g1 >= g2 {
            b = x2;
            x2 = x1;
            g2 = g1;
            x1 = b - GOLDEN * (b - a);
            g1 = g(x1)?;
            if g1 > best.1 {
                best = (x1, g1);
            }
        } else {
            a = x1;
            x1 = x2;
            g1 = g2;
            x2 = a + GOLDEN * (b - a);
            g2 = g(x2)?;
            if g2 > best.1 {
                best = (x2, g2);
            }
        }
    }
    Ok(best)
}

/// Grid search plus alternating golden-section refinement in `(r, θ)` for
/// the maximum of `objective(z)`.
fn refined_max<F>(grid: &PolarGrid, objective: F, opts: SearchOptions) -> Result<(Complex64, f64)>
where
    F: Fn(Complex64) -> Result<f64> + Sync,
{
    let (start, grid_value) = grid_extremum(grid, &objective, true)?;
    let mut best_z = start.z;
    let mut best = grid_value;
    let dr = grid.r_max / grid.n_r as f64;
    let dtheta = TAU / grid.n_theta as f64;
    let r_lo = (grid.radius(start.ring) - dr).max(0.0);
    let r_hi = (grid.radius(start.ring) + dr).min(grid.r_max);
    let mut r = grid.radius(start.ring);
    let mut theta = grid.angle(start.spoke);
    for _ in 0..opts.refine_iters {
        let th = theta;
        let (r_new, v) = golden_max(|s| objective(Complex64::from_polar(s, th)), r_lo, r_hi, opts.golden_steps)?;
        if v > best {
            best = v;
            r = r_new;
            best_z = Complex64::from_polar(r, theta);
        }
        let rr = r;
        let (t_new, v) =
            golden_max(|t| objective(Complex64::from_polar(rr, t)), theta - dtheta, theta + dtheta, opts.golden_steps)?;
        if v > best {
            best = v;
            theta = t_new;
            best_z = Complex64::from_polar(r, theta);
        }
    }
    Ok((best_z, best))
}

pub fn sup_hyperbolic_schwarzian(
    f: &dyn AnalyticMap,
    r_max: f64,
    n_r: usize,
    n_theta: usize,
    refine_iters: usize,
) -> Result<NormEstimate> {
    let grid = PolarGrid::new(r_max, n_r, n_theta)?;
    sup_hyperbolic_schwarzian_with(f, &grid, SearchOptions { refine_iters, ..SearchOptions::default() })
}

pub fn sup_hyperbolic_schwarzian_with(f: &dyn AnalyticMap, grid: &PolarGrid, opts: SearchOptions) -> Result<NormEstimate> {
    let (argmax, value) = refined_max(grid, |z| operators::hyperbolic_schwarzian(f, z), opts)?;
    Ok(NormEstimate {
        value,
        argmax,
        r_max: grid.r_max,
        grid: (grid.n_r, grid.n_theta),
        refinement_steps: opts.refine_iters,
        is_lower_bound: true,
    })
}

/// Same search for `(1-|z|²) |f''/f'|`.
pub fn sup_hyperbolic_pre_schwarzian(f: &dyn AnalyticMap, grid: &PolarGrid, opts: SearchOptions) -> Result<NormEstimate> {
    let (argmax, value) = refined_max(grid, |z| operators::hyperbolic_pre_schwarzian(f, z), opts)?;
    Ok(NormEstimate {
        value,
        argmax,
        r_max: grid.r_max,
        grid: (grid.n_r, grid.n_theta),
        refinement_steps: opts.refine_iters,
        is_lower_bound: true,
    })
}

fn order_objective(f: &dyn AnalyticMap, z: Complex64) -> Result<f64> {
    Ok((1.0 + z * operators::pre_schwarzian(f, z)?).re)
}

pub fn certify_order(f: &dyn AnalyticMap, r_max: f64, n_r: usize, n_theta: usize) -> Result<OrderCertificate> {
    let grid = PolarGrid::new(r_max, n_r, n_theta)?;
    certify_order_with(f, &grid, SearchOptions::default())
}

/// `Re{1 + z f''/f'}` is harmonic, so its minimum over the closed disk
/// `|z| ≤ r_max` sits on the outer circle; refinement searches that circle
/// around the best outer-ring grid point.
pub fn certify_order_with(f: &dyn AnalyticMap, grid: &PolarGrid, opts: SearchOptions) -> Result<OrderCertificate> {
    let (start, grid_value) = grid_extremum(grid, |z| order_objective(f, z).map(|v| -v), true)?;
    let mut inf_value = -grid_value;
    let mut argmin = start.z;

    let ring = grid.n_r;
    let spokes: Vec<usize> = (0..grid.n_theta).collect();
    let ring_values: Vec<Result<f64>> = spokes
        .par_iter()
        .map(|&j| order_objective(f, Complex64::from_polar(grid.radius(ring), grid.angle(j))))
        .collect();
    let mut best_spoke = 0;
    let mut best_ring_value = f64::INFINITY;
    for (j, v) in ring_values.into_iter().enumerate() {
        let v = v?;
        if v < best_ring_value {
            best_ring_value = v;
            best_spoke = j;
        }
    }
    let dtheta = TAU / grid.n_theta as f64;
    let mut centre = grid.angle(best_spoke);
    for _ in 0..opts.refine_iters.max(1) {
        let (t, v) = golden_max(
            |t| order_objective(f, Complex64::from_polar(grid.r_max, t)).map(|v| -v),
            centre - dtheta,
            centre + dtheta,
            opts.golden_steps,
        )?;
        if -v < inf_value {
            inf_value = -v;
            argmin = Complex64::from_polar(grid.r_max, t);
            centre = t;
        }
    }
    Ok(OrderCertificate { inf_value, argmin, r_max: grid.r_max, grid: (grid.n_r, grid.n_theta) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::{extremal_map, identity_map, koebe_function};

    #[test]
    fn grid_layout() {
        let g = PolarGrid::new(0.9, 8, 8).unwrap();
        let pts = g.points();
        assert_eq!(pts.len(), 65);
        assert_eq!(pts[0].z, Complex64::new(0.0, 0.0));
        assert!((pts.last().unwrap().z.norm() - 0.9).abs() < 1e-15);
        // spoke 2 of 8 lies on the imaginary axis
        assert!(pts[3].z.re.abs() < 1e-15);
        assert!(PolarGrid::new(0.9, 8, 10).is_err());
        assert!(PolarGrid::new(1.0, 8, 8).is_err());
        assert!(PolarGrid::new(0.9, 4, 8).is_err());
    }

    #[test]
    fn refined_grid_contains_coarse_grid() {
        let coarse = PolarGrid::new(0.99, 16, 16).unwrap();
        let fine = PolarGrid::new(0.99, 32, 32).unwrap();
        for p in coarse.points() {
            assert!(fine.points().iter().any(|q| (q.z - p.z).norm() < 1e-15));
        }
    }

    #[test]
    fn golden_section_finds_parabola_peak() {
        let (x, v) = golden_max(|x| Ok(-(x - 0.3) * (x - 0.3)), 0.0, 1.0, 60).unwrap();
        assert!((x - 0.3).abs() < 1e-7);
        assert!(v <= 0.0 && v > -1e-13);
    }

    #[test]
    fn ties_go_to_smallest_radius() {
        let g = PolarGrid::new(0.5, 8, 8).unwrap();
        let (p, v) = grid_extremum(&g, |_| Ok(1.0), true).unwrap();
        assert_eq!((p.ring, p.spoke, v), (0, 0, 1.0));
    }

    #[test]
    fn identity_norm_is_zero() {
        let est = sup_hyperbolic_schwarzian(&identity_map(), 0.9, 8, 8, 2).unwrap();
        assert_eq!(est.value, 0.0);
        assert!(est.is_lower_bound);
    }

    #[test]
    fn extremal_alpha_zero_norm_is_two() {
        let f = extremal_map(0.0).unwrap();
        let est = sup_hyperbolic_schwarzian(&f, 0.9, 16, 16, 2).unwrap();
        assert!((est.value - 2.0).abs() < 1e-9, "{}", est.value);
        assert!(est.argmax.norm() <= 0.9 + 1e-15);
    }

    #[test]
    fn order_of_identity_and_koebe() {
        let cert = certify_order(&identity_map(), 0.9, 8, 8).unwrap();
        assert_eq!(cert.inf_value, 1.0);
        let cert = certify_order(&koebe_function(64).unwrap(), 0.9, 16, 16).unwrap();
        assert!(cert.inf_value < 0.0);
    }
}
