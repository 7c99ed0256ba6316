use std::f64::consts::PI;
use std::sync::Arc;

use num_complex::Complex64;
use rayon::prelude::*;

use super::config::RunConfig;
use crate::bounds::{BoundReport, CheckRegistry, Member, MemberData, ReportBuilder, SuiteContext, TheoremId};
use crate::error::Result;
use crate::estimator::PolarGrid;
use crate::maps::{koebe_map, random_schwarz, SchwarzFunction};

/// Radius of the points at which Koebe transforms are taken.
pub const KOEBE_POINT_RADIUS: f64 = 0.5;

/// Rings and spokes of the grid used for checks that need `f` itself.
pub const GROWTH_GRID: (usize, usize) = (4, 8);

const SEED_STRIDE: u64 = 0x9E37_79B9_7F4A_7C15;

/// Seed of member `k` at `alpha`; distinct α get unrelated streams.
pub fn member_seed(seed: u64, alpha: f64, k: usize) -> u64 {
    seed.wrapping_add(k as u64).wrapping_add(alpha.to_bits().wrapping_mul(SEED_STRIDE))
}

/// Blaschke degree of member `k`: cycles through 1..=8.
pub fn member_degree(k: usize) -> usize {
    1 + k % 8
}

/// Even-indexed members have `φ(0) = 0`.
pub fn member_vanishes(k: usize) -> bool {
    k.is_multiple_of(2)
}

/// `0.5 e^{i k γ}` with `γ` the golden angle.
pub fn koebe_point(k: usize) -> Complex64 {
    let golden_angle = PI * (3.0 - 5f64.sqrt());
    Complex64::from_polar(KOEBE_POINT_RADIUS, golden_angle * k as f64)
}

pub fn member_phi(seed: u64, alpha: f64, k: usize) -> Result<SchwarzFunction> {
    random_schwarz(member_seed(seed, alpha, k), member_degree(k), member_vanishes(k))
}

/// The `count` seeded members the suite checks at `alpha`.
pub fn generate_members(alpha: f64, seed: u64, count: usize) -> Result<Vec<Member>> {
    (0..count)
        .map(|k| Member::generated(format!("member-{k}"), member_phi(seed, alpha, k)?, alpha, koebe_point(k)))
        .collect()
}

/// The Koebe function falsely claimed to be convex of order `alpha`.
pub fn koebe_control(alpha: f64) -> Member {
    Member::claimed("koebe-control", Arc::new(koebe_map()), alpha, Complex64::new(KOEBE_POINT_RADIUS, 0.0))
}

fn growth_grid(r_max: f64) -> PolarGrid {
    PolarGrid::coarse(r_max, GROWTH_GRID.0, GROWTH_GRID.1)
}

pub fn suite_context(config: &RunConfig, alpha: f64) -> Result<SuiteContext> {
    SuiteContext::new(
        alpha,
        config.polar_grid()?,
        config.search(),
        growth_grid(config.r_max),
        config.residual_tol,
        config.tol,
    )
}

/// Runs the configured checks over every α and returns one report per
/// (check, α) pair that received samples.
pub fn run_verification_suite(config: &RunConfig) -> Result<Vec<BoundReport>> {
    let registry = CheckRegistry::with_defaults().select(&config.checks);
    run_suite_with(config, &registry)
}

pub fn run_suite_with(config: &RunConfig, registry: &CheckRegistry) -> Result<Vec<BoundReport>> {
    config.validate()?;
    let mut reports = Vec::new();
    for alpha in config.alphas() {
        let ctx = suite_context(config, alpha)?;
        let mut members = generate_members(alpha, config.seed, config.sample_count)?;
        if config.inject_koebe {
            members.push(koebe_control(alpha));
        }
        reports.extend(run_alpha(registry, &members, &ctx)?);
    }
    reports.sort_by(|a, b| a.theorem_id.as_str().cmp(b.theorem_id.as_str()).then(a.alpha.total_cmp(&b.alpha)));
    Ok(reports)
}

/// Members are processed in parallel; their builders are merged in member
/// order, so the result does not depend on scheduling.
pub fn run_alpha(registry: &CheckRegistry, members: &[Member], ctx: &SuiteContext) -> Result<Vec<BoundReport>> {
    let per_member: Vec<Vec<Option<ReportBuilder>>> = members
        .par_iter()
        .map(|member| {
            let data = MemberData::compute(member, ctx)?;
            registry
                .iter()
                .map(|check| {
                    if !check.applies_to(member) {
                        return Ok(None);
                    }
                    let mut b = ReportBuilder::new(check.id(), ctx.alpha, ctx.residual_tol);
                    check.evaluate_member(&data, ctx, &mut b)?;
                    Ok(Some(b))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    let mut reports = Vec::with_capacity(registry.len());
    for (i, check) in registry.iter().enumerate() {
        let mut total = ReportBuilder::new(check.id(), ctx.alpha, ctx.residual_tol);
        for builders in &per_member {
            if let Some(b) = &builders[i] {
                total.merge(b);
            }
        }
        check.evaluate_alpha(ctx, &mut total)?;
        if !total.is_empty() {
            reports.push(total.finish()?);
        }
    }
    Ok(reports)
}

/// Total violations across `reports`.
pub fn violation_count(reports: &[BoundReport]) -> usize {
    reports.iter().map(|r| r.violations).sum()
}

/// The report for `id` at `alpha`, if present.
pub fn find_report(reports: &[BoundReport], id: TheoremId, alpha: f64) -> Option<&BoundReport> {
    reports.iter().find(|r| r.theorem_id == id && r.alpha == alpha)
}
