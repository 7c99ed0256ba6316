//! Residual checks as interchangeable strategies, keyed by [`TheoremId`].

use num_complex::Complex64;

use super::report::{ReportBuilder, TheoremId};
use super::{
    distortion_bounds, growth_bounds, lemma6_bound, remark9_thresholds, sharp_norm_constants, theorem7_bound,
    trimble_residual, GrowthEnvelope,
};
use crate::error::Result;
use crate::estimator::{certify_order_with, sup_hyperbolic_schwarzian_with, NormEstimate, PolarGrid, SearchOptions};
use crate::maps::{koebe_transform, map_from_phi, SchwarzFunction, SharedMap};
use crate::operators::{self, OperatorSample};

/// A map under test together with what is claimed about it.
#[derive(Debug, Clone)]
pub struct Member {
    pub label: String,
    pub map: SharedMap,
    /// Claimed convexity order.
    pub alpha: f64,
    /// `|f''(0)| / (2(1-α))`, which equals `|φ(0)|` for generated maps.
    pub p: f64,
    /// `f''(0) = 0`, i.e. the member is claimed to be in `C_α⁰`.
    pub vanishes_at_zero: bool,
    /// Point used for the Koebe-transform order check.
    pub koebe_point: Complex64,
}

impl Member {
    /// A map generated from `phi`; a member of `C_α` by construction.
    pub fn generated(label: impl Into<String>, phi: SchwarzFunction, alpha: f64, koebe_point: Complex64) -> Result<Self> {
        let map = map_from_phi(phi, alpha)?;
        Ok(Self::claimed(label, std::sync::Arc::new(map), alpha, koebe_point))
    }

    /// Any normalized map together with a claimed order (used for controls).
    pub fn claimed(label: impl Into<String>, map: SharedMap, alpha: f64, koebe_point: Complex64) -> Self {
        let f2 = map.info().second_deriv_at_zero;
        Self {
            label: label.into(),
            p: f2.norm() / (2.0 * (1.0 - alpha)),
            vanishes_at_zero: f2.norm() < 1e-12,
            map,
            alpha,
            koebe_point,
        }
    }
}

/// Settings shared by all checks at one `α`.
#[derive(Debug, Clone)]
pub struct SuiteContext {
    pub alpha: f64,
    pub grid: PolarGrid,
    pub search: SearchOptions,
    /// Coarser grid for checks that need `f` itself (nested quadrature).
    pub growth_grid: PolarGrid,
    pub residual_tol: f64,
    pub quad_tol: f64,
    envelopes: Vec<(f64, (f64, f64), GrowthEnvelope)>,
}

impl SuiteContext {
    pub fn new(
        alpha: f64,
        grid: PolarGrid,
        search: SearchOptions,
        growth_grid: PolarGrid,
        residual_tol: f64,
        quad_tol: f64,
    ) -> Result<Self> {
        let envelopes = (0..=growth_grid.n_r)
            .map(|ring| {
                let r = growth_grid.radius(ring);
                Ok((r, distortion_bounds(alpha, r), growth_bounds(alpha, r, quad_tol)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { alpha, grid, search, growth_grid, residual_tol, quad_tol, envelopes })
    }

    fn envelope(&self, ring: usize) -> &(f64, (f64, f64), GrowthEnvelope) {
        &self.envelopes[ring]
    }
}

/// Per-member values computed once and shared by every check.
#[derive(Debug, Clone)]
pub struct MemberData<'a> {
    pub member: &'a Member,
    pub samples: Vec<OperatorSample>,
    pub norm: NormEstimate,
}

impl<'a> MemberData<'a> {
    pub fn compute(member: &'a Member, ctx: &SuiteContext) -> Result<Self> {
        let samples = ctx
            .grid
            .points()
            .into_iter()
            .map(|p| operators::sample(member.map.as_ref(), p.z))
            .collect::<Result<Vec<_>>>()?;
        let norm = sup_hyperbolic_schwarzian_with(member.map.as_ref(), &ctx.grid, ctx.search)?;
        Ok(Self { member, samples, norm })
    }
}

/// One inequality, checked either per member or once per `α`.
pub trait BoundCheck: Send + Sync {
    fn id(&self) -> TheoremId;

    fn applies_to(&self, _member: &Member) -> bool {
        true
    }

    fn evaluate_member(&self, _data: &MemberData<'_>, _ctx: &SuiteContext, _out: &mut ReportBuilder) -> Result<()> {
        Ok(())
    }

    fn evaluate_alpha(&self, _ctx: &SuiteContext, _out: &mut ReportBuilder) -> Result<()> {
        Ok(())
    }
}

fn phi_of(alpha: f64, s: &OperatorSample) -> f64 {
    let den = 2.0 * (1.0 - alpha) + s.z * s.pre_schwarzian;
    (s.pre_schwarzian / den).norm()
}

fn remark_a_of(alpha: f64, s: &OperatorSample) -> f64 {
    let t = s.hyperbolic_pre / (2.0 * (1.0 - alpha));
    1.0 - t * t
}

struct Theorem1Ii;
impl BoundCheck for Theorem1Ii {
    fn id(&self) -> TheoremId {
        TheoremId::Theorem1Ii
    }
    fn evaluate_member(&self, data: &MemberData<'_>, ctx: &SuiteContext, out: &mut ReportBuilder) -> Result<()> {
        let a = ctx.alpha;
        for s in &data.samples {
            let q = s.pre_schwarzian;
            let r = (1.0 + s.z * q).re - a - (1.0 - s.z.norm_sqr()) * q.norm_sqr() / (4.0 * (1.0 - a));
            out.push(s.z, r);
        }
        Ok(())
    }
}

struct Theorem1Iii;
impl BoundCheck for Theorem1Iii {
    fn id(&self) -> TheoremId {
        TheoremId::Theorem1Iii
    }
    fn evaluate_member(&self, data: &MemberData<'_>, ctx: &SuiteContext, out: &mut ReportBuilder) -> Result<()> {
        let k = 1.0 - ctx.alpha;
        for s in &data.samples {
            let r = 2.0 * k - ((1.0 - s.z.norm_sqr()) * s.pre_schwarzian - 2.0 * k * s.z.conj()).norm();
            out.push(s.z, r);
        }
        Ok(())
    }
}

struct Prop2KoebeOrder;
impl BoundCheck for Prop2KoebeOrder {
    fn id(&self) -> TheoremId {
        TheoremId::Prop2KoebeOrder
    }
    fn evaluate_member(&self, data: &MemberData<'_>, ctx: &SuiteContext, out: &mut ReportBuilder) -> Result<()> {
        let m = data.member;
        let a = m.koebe_point;
        let beta = ctx.alpha * (1.0 - a.norm()) / (1.0 + a.norm());
        let transformed = koebe_transform(m.map.clone(), a)?;
        let cert = certify_order_with(&transformed, &ctx.grid, ctx.search)?;
        out.push(cert.argmin, cert.inf_value - beta);
        Ok(())
    }
}

struct Prop3;
impl BoundCheck for Prop3 {
    fn id(&self) -> TheoremId {
        TheoremId::Prop3
    }
    fn applies_to(&self, m: &Member) -> bool {
        m.vanishes_at_zero
    }
    fn evaluate_member(&self, data: &MemberData<'_>, ctx: &SuiteContext, out: &mut ReportBuilder) -> Result<()> {
        for s in &data.samples {
            out.push(s.z, 2.0 * s.z.norm() * (1.0 - ctx.alpha) - s.hyperbolic_pre);
        }
        Ok(())
    }
}

struct Theorem4Distortion;
impl BoundCheck for Theorem4Distortion {
    fn id(&self) -> TheoremId {
        TheoremId::Theorem4Distortion
    }
    fn applies_to(&self, m: &Member) -> bool {
        m.vanishes_at_zero
    }
    fn evaluate_member(&self, data: &MemberData<'_>, ctx: &SuiteContext, out: &mut ReportBuilder) -> Result<()> {
        for p in ctx.growth_grid.points() {
            let (_, (lo, up), _) = ctx.envelope(p.ring);
            let modulus = data.member.map.jet(p.z)?.d1.norm();
            out.push(p.z, (modulus - lo).min(up - modulus));
        }
        Ok(())
    }
}

struct Theorem4Growth;
impl BoundCheck for Theorem4Growth {
    fn id(&self) -> TheoremId {
        TheoremId::Theorem4Growth
    }
    fn applies_to(&self, m: &Member) -> bool {
        m.vanishes_at_zero
    }
    fn evaluate_member(&self, data: &MemberData<'_>, ctx: &SuiteContext, out: &mut ReportBuilder) -> Result<()> {
        for p in ctx.growth_grid.points() {
            let (_, _, env) = ctx.envelope(p.ring);
            let modulus = data.member.map.jet(p.z)?.d0.norm();
            out.push(p.z, (modulus - env.lower).min(env.upper - modulus));
        }
        Ok(())
    }
}

struct TheoremA;
impl BoundCheck for TheoremA {
    fn id(&self) -> TheoremId {
        TheoremId::TheoremA
    }
    fn evaluate_member(&self, data: &MemberData<'_>, ctx: &SuiteContext, out: &mut ReportBuilder) -> Result<()> {
        out.push(data.norm.argmax, sharp_norm_constants(ctx.alpha).theorem_a - data.norm.value);
        Ok(())
    }
}

struct Theorem5;
impl BoundCheck for Theorem5 {
    fn id(&self) -> TheoremId {
        TheoremId::Theorem5
    }
    fn applies_to(&self, m: &Member) -> bool {
        m.vanishes_at_zero
    }
    fn evaluate_member(&self, data: &MemberData<'_>, ctx: &SuiteContext, out: &mut ReportBuilder) -> Result<()> {
        out.push(data.norm.argmax, sharp_norm_constants(ctx.alpha).theorem5 - data.norm.value);
        Ok(())
    }
}

struct Theorem7;
impl BoundCheck for Theorem7 {
    fn id(&self) -> TheoremId {
        TheoremId::Theorem7
    }
    fn applies_to(&self, m: &Member) -> bool {
        m.p < 1.0
    }
    fn evaluate_member(&self, data: &MemberData<'_>, ctx: &SuiteContext, out: &mut ReportBuilder) -> Result<()> {
        let bound = theorem7_bound(ctx.alpha, data.member.p)?;
        out.push(data.norm.argmax, bound - data.norm.value);
        Ok(())
    }
}

struct Lemma6;
impl BoundCheck for Lemma6 {
    fn id(&self) -> TheoremId {
        TheoremId::Lemma6
    }
    fn applies_to(&self, m: &Member) -> bool {
        m.p < 1.0
    }
    fn evaluate_member(&self, data: &MemberData<'_>, ctx: &SuiteContext, out: &mut ReportBuilder) -> Result<()> {
        for s in &data.samples {
            out.push(s.z, lemma6_bound(data.member.p, s.z.norm()) - phi_of(ctx.alpha, s));
        }
        Ok(())
    }
}

struct Remark8Refined;
impl BoundCheck for Remark8Refined {
    fn id(&self) -> TheoremId {
        TheoremId::Remark8Refined
    }
    fn evaluate_member(&self, data: &MemberData<'_>, ctx: &SuiteContext, out: &mut ReportBuilder) -> Result<()> {
        let a = ctx.alpha;
        for s in &data.samples {
            let q = s.pre_schwarzian;
            let phi = q / (2.0 * (1.0 - a) + s.z * q);
            let cap = (s.z.conj() - phi) / (1.0 - s.z * phi);
            let rhs = 2.0 * (1.0 - a) * ((1.0 + a) - cap.norm_sqr() - a * remark_a_of(a, s));
            out.push(s.z, rhs - s.hyperbolic_schwarzian);
        }
        Ok(())
    }
}

struct Remark8ANonneg;
impl BoundCheck for Remark8ANonneg {
    fn id(&self) -> TheoremId {
        TheoremId::Remark8ANonneg
    }
    fn applies_to(&self, m: &Member) -> bool {
        m.vanishes_at_zero
    }
    fn evaluate_member(&self, data: &MemberData<'_>, ctx: &SuiteContext, out: &mut ReportBuilder) -> Result<()> {
        for s in &data.samples {
            out.push(s.z, remark_a_of(ctx.alpha, s));
        }
        Ok(())
    }
}

struct Remark8ASchwarz;
impl BoundCheck for Remark8ASchwarz {
    fn id(&self) -> TheoremId {
        TheoremId::Remark8ASchwarz
    }
    fn applies_to(&self, m: &Member) -> bool {
        m.vanishes_at_zero
    }
    fn evaluate_member(&self, data: &MemberData<'_>, ctx: &SuiteContext, out: &mut ReportBuilder) -> Result<()> {
        for s in &data.samples {
            out.push(s.z, remark_a_of(ctx.alpha, s) - (1.0 - phi_of(ctx.alpha, s)));
        }
        Ok(())
    }
}

struct Remark9;
impl BoundCheck for Remark9 {
    fn id(&self) -> TheoremId {
        TheoremId::Remark9
    }
    fn applies_to(&self, _: &Member) -> bool {
        false
    }
    fn evaluate_alpha(&self, ctx: &SuiteContext, out: &mut ReportBuilder) -> Result<()> {
        let (p_star, beats) = remark9_thresholds(ctx.alpha);
        out.push(Complex64::new(p_star, 0.0), beats - theorem7_bound(ctx.alpha, p_star)?);
        Ok(())
    }
}

struct Trimble;
impl BoundCheck for Trimble {
    fn id(&self) -> TheoremId {
        TheoremId::Trimble
    }
    fn evaluate_member(&self, data: &MemberData<'_>, _: &SuiteContext, out: &mut ReportBuilder) -> Result<()> {
        out.push(Complex64::new(0.0, 0.0), trimble_residual(data.member.map.as_ref())?);
        Ok(())
    }
}

struct Yamashita;
impl BoundCheck for Yamashita {
    fn id(&self) -> TheoremId {
        TheoremId::Yamashita
    }
    fn evaluate_member(&self, data: &MemberData<'_>, ctx: &SuiteContext, out: &mut ReportBuilder) -> Result<()> {
        let bound = sharp_norm_constants(ctx.alpha).yamashita;
        for s in &data.samples {
            out.push(s.z, bound - s.hyperbolic_pre);
        }
        Ok(())
    }
}

/// Ordered set of checks, one per [`TheoremId`].
pub struct CheckRegistry {
    checks: Vec<Box<dyn BoundCheck>>,
}

impl CheckRegistry {
    pub fn empty() -> Self {
        Self { checks: Vec::new() }
    }

    pub fn with_defaults() -> Self {
        let mut reg = Self::empty();
        let all: Vec<Box<dyn BoundCheck>> = vec![
            Box::new(Theorem1Ii),
            Box::new(Theorem1Iii),
            Box::new(Prop2KoebeOrder),
            Box::new(Prop3),
            Box::new(Theorem4Distortion),
            Box::new(Theorem4Growth),
            Box::new(TheoremA),
            Box::new(Theorem5),
            Box::new(Theorem7),
            Box::new(Lemma6),
            Box::new(Remark8Refined),
            Box::new(Remark8ANonneg),
            Box::new(Remark8ASchwarz),
            Box::new(Remark9),
            Box::new(Trimble),
            Box::new(Yamashita),
        ];
        for check in all {
            reg.register(check);
        }
        reg
    }

    /// Adds a check, replacing any registered under the same id.
    pub fn register(&mut self, check: Box<dyn BoundCheck>) {
        match self.checks.iter().position(|c| c.id() == check.id()) {
            Some(i) => self.checks[i] = check,
            None => self.checks.push(check),
        }
    }

    /// Keeps only the listed ids (all of them when `ids` is empty).
    pub fn select(mut self, ids: &[TheoremId]) -> Self {
        if !ids.is_empty() {
            self.checks.retain(|c| ids.contains(&c.id()));
        }
        self
    }

    pub fn get(&self, id: TheoremId) -> Option<&dyn BoundCheck> {
        self.checks.iter().find(|c| c.id() == id).map(|c| c.as_ref())
    }

    pub fn ids(&self) -> Vec<TheoremId> {
        self.checks.iter().map(|c| c.id()).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = &dyn BoundCheck> {
        self.checks.iter().map(|c| c.as_ref())
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }
}

impl Default for CheckRegistry {
    fn default() -> Self {
        Self::with_defaults()
    }
}
