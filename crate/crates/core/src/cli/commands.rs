use num_complex::Complex64;
use rayon::prelude::*;

use super::config::RunConfig;
use super::output::{Cell, Table};
use super::suite::{member_degree, member_phi, member_seed, member_vanishes};
use crate::bounds::{
    chuaqui_osgood_a, growth_bounds, remark9_thresholds, robertson_bounds, sharp_norm_constants, theorem7_bound,
};
use crate::error::Result;
use crate::estimator::sup_hyperbolic_schwarzian_with;
use crate::maps::{extremal_map, map_from_phi, AnalyticMap, FamilyParams, MapRegistry};

/// Norm estimate for one map from the family registry.
pub fn norm_table(config: &RunConfig) -> Result<Table> {
    let alpha = config.single_alpha();
    let params = FamilyParams { alpha, seed: config.seed, degree: config.degree, vanish_at_zero: true };
    let map = MapRegistry::with_defaults().build(&config.family, &params)?;
    let est = sup_hyperbolic_schwarzian_with(map.as_ref(), &config.polar_grid()?, config.search())?;
    let c = sharp_norm_constants(alpha);
    let mut t = Table::new(&[
        "family",
        "alpha",
        "seed",
        "degree",
        "norm",
        "argmax_re",
        "argmax_im",
        "r_max",
        "n_r",
        "n_theta",
        "refinement_steps",
        "is_lower_bound",
        "theorem5_bound",
        "theorem_a_bound",
    ]);
    t.push(vec![
        Cell::Text(config.family.clone()),
        Cell::Float(alpha),
        Cell::Int(config.seed),
        Cell::Int(config.degree as u64),
        Cell::Float(est.value),
        Cell::Float(est.argmax.re),
        Cell::Float(est.argmax.im),
        Cell::Float(est.r_max),
        Cell::Int(est.grid.0 as u64),
        Cell::Int(est.grid.1 as u64),
        Cell::Int(est.refinement_steps as u64),
        Cell::Bool(est.is_lower_bound),
        Cell::Float(c.theorem5),
        Cell::Float(c.theorem_a),
    ]);
    Ok(t)
}

/// Growth envelopes at `r = i/(r_steps+1)`, `i = 1..=r_steps`, next to the
/// general-class envelopes and the comparison function at `t = 1 - α²`.
pub fn growth_table(config: &RunConfig) -> Result<Table> {
    let alpha = config.single_alpha();
    let t = 1.0 - alpha * alpha;
    let mut table =
        Table::new(&["r", "lower", "upper", "robertson_lower", "robertson_upper", "co_lower", "co_upper"]);
    for i in 1..=config.r_steps {
        let r = i as f64 / (config.r_steps + 1) as f64;
        let env = growth_bounds(alpha, r, config.tol)?;
        let rob = robertson_bounds(alpha, r);
        let z = Complex64::new(r, 0.0);
        table.push(vec![
            Cell::Float(r),
            Cell::Float(env.lower),
            Cell::Float(env.upper),
            Cell::Float(rob.f_lower),
            Cell::Float(rob.f_upper),
            Cell::Float(chuaqui_osgood_a(z, -t)?.re),
            Cell::Float(chuaqui_osgood_a(z, t)?.re),
        ]);
    }
    Ok(table)
}

/// The seeded members `verify` would check at this α, with their norms.
pub fn generate_table(config: &RunConfig) -> Result<Table> {
    let alpha = config.single_alpha();
    let grid = config.polar_grid()?;
    let rows = (0..config.sample_count)
        .into_par_iter()
        .map(|k| {
            let f = map_from_phi(member_phi(config.seed, alpha, k)?, alpha)?;
            let f2 = f.info().second_deriv_at_zero;
            let est = sup_hyperbolic_schwarzian_with(&f, &grid, config.search())?;
            Ok(vec![
                Cell::Int(k as u64),
                Cell::Int(member_seed(config.seed, alpha, k)),
                Cell::Int(member_degree(k) as u64),
                Cell::Bool(member_vanishes(k)),
                Cell::Float(f.phi().p0()),
                Cell::Float(f2.re),
                Cell::Float(f2.im),
                Cell::Float(est.value),
                Cell::Float(est.argmax.re),
                Cell::Float(est.argmax.im),
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    let mut table = Table::new(&[
        "index",
        "seed",
        "degree",
        "vanish_at_zero",
        "p",
        "f2_re",
        "f2_im",
        "norm",
        "argmax_re",
        "argmax_im",
    ]);
    for row in rows {
        table.push(row);
    }
    Ok(table)
}

/// Sharp constants per α, the crossover point between the two general
/// bounds, and the estimated norm of the extremal map.
pub fn constants_table(config: &RunConfig) -> Result<Table> {
    let grid = config.polar_grid()?;
    let mut table = Table::new(&[
        "alpha",
        "theorem5",
        "theorem_a",
        "yamashita",
        "p_star",
        "theorem7_at_p_star",
        "extremal_norm",
    ]);
    for alpha in config.alphas() {
        let c = sharp_norm_constants(alpha);
        let (p_star, _) = remark9_thresholds(alpha);
        let est = sup_hyperbolic_schwarzian_with(&extremal_map(alpha)?, &grid, config.search())?;
        table.push(vec![
            Cell::Float(alpha),
            Cell::Float(c.theorem5),
            Cell::Float(c.theorem_a),
            Cell::Float(c.yamashita),
            Cell::Float(p_star),
            Cell::Float(theorem7_bound(alpha, p_star)?),
            Cell::Float(est.value),
        ]);
    }
    Ok(table)
}
