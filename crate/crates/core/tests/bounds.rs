mod common;

use std::sync::Arc;

use common::{c, disk_points};
use proptest::prelude::*;
use schwarzian::bounds::{
    chuaqui_osgood_a, distortion_bounds, growth_bounds, lemma6_bound, prop3_residual, remark9_thresholds,
    robertson_bounds, sharp_norm_constants, theorem1_residuals, theorem7_bound, theorem_a_constant, trimble_residual,
    BoundCheck, CheckRegistry, Member, MemberData, ReportBuilder, SuiteContext, TheoremId,
};
use schwarzian::cli::{run_alpha, suite_context, RunConfig};
use schwarzian::maps::{identity_map, koebe_map, map_from_phi, random_schwarz, SchwarzFunction};
use schwarzian::operators::phi_from_f;
use schwarzian::{Error, Result};

const RADII: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];

#[test]
fn growth_envelopes_match_closed_forms() {
    for r in RADII {
        let e0 = growth_bounds(0.0, r, 1e-12).unwrap();
        assert!((e0.lower - r.atan()).abs() < 1e-12);
        assert!((e0.upper - 0.5 * ((1.0 + r) / (1.0 - r)).ln()).abs() < 1e-12);
        let eh = growth_bounds(0.5, r, 1e-12).unwrap();
        assert!((eh.lower - r.asinh()).abs() < 1e-12);
        assert!((eh.upper - r.asin()).abs() < 1e-12);
        assert!(eh.quadrature_error < 1e-12);
    }
    let zero = growth_bounds(0.3, 0.0, 1e-10).unwrap();
    assert_eq!((zero.lower, zero.upper), (0.0, 0.0));
    assert!(growth_bounds(0.3, 1.0, 1e-10).is_err());
    assert!(matches!(growth_bounds(1.0, 0.5, 1e-10), Err(Error::InvalidAlpha(_))));
}

#[test]
fn robertson_closed_forms_at_one_half() {
    let b = robertson_bounds(0.5, 0.6);
    assert!((b.f_lower - 1.6f64.ln()).abs() < 1e-15);
    assert!((b.f_upper + 0.4f64.ln()).abs() < 1e-15);
    // the series form near α = ½ joins the logarithms continuously
    let near = robertson_bounds(0.5 + 1e-9, 0.6);
    assert!((near.f_lower - b.f_lower).abs() < 1e-8 && (near.f_upper - b.f_upper).abs() < 1e-8);
}

#[test]
fn sharp_constants() {
    for (alpha, a, t5, y) in [(0.0, 2.0, 2.0, 4.0), (0.5, 2.0, 1.5, 2.0), (0.75, 1.5, 0.875, 1.0)] {
        let k = sharp_norm_constants(alpha);
        assert_eq!((k.theorem_a, k.theorem5, k.yamashita), (a, t5, y));
    }
    assert_eq!(theorem_a_constant(0.6), 8.0 * 0.6 * 0.4);
}

#[test]
fn theorem7_bound_reduces_and_rejects() {
    for alpha in [0.0, 0.3, 0.9] {
        assert!((theorem7_bound(alpha, 0.0).unwrap() - 2.0 * (1.0 - alpha * alpha)).abs() < 1e-15);
    }
    assert!(matches!(theorem7_bound(0.5, 1.0), Err(Error::InvalidP(_))));
    assert!(matches!(theorem7_bound(0.5, -0.1), Err(Error::InvalidP(_))));
}

#[test]
fn crossover_points() {
    for alpha in [0.0, 0.2, 0.5, 0.6, 0.8] {
        let (p, beats) = remark9_thresholds(alpha);
        assert!((theorem7_bound(alpha, p).unwrap() - beats).abs() < 1e-12, "alpha {alpha}");
        assert_eq!(beats, theorem_a_constant(alpha));
    }
}

#[test]
fn comparison_function_brackets() {
    for r in RADII {
        let z = c(r, 0.0);
        let up = growth_bounds(0.0, r, 1e-12).unwrap().upper;
        assert!((chuaqui_osgood_a(z, 1.0).unwrap().re - up).abs() < 1e-12);
        let t = 0.75;
        assert!(chuaqui_osgood_a(z, -t).unwrap().re <= r.asinh());
        assert!(r.asin() <= chuaqui_osgood_a(z, t).unwrap().re);
    }
    assert!(chuaqui_osgood_a(c(0.5, 0.0), 1.5).is_err());
}

#[test]
fn koebe_fails_the_characterizations() {
    // Re{1 + z k''/k'} = -1 at z = -1/2
    let (r_ii, r_iii) = theorem1_residuals(&koebe_map(), 0.0, c(-0.5, 0.0)).unwrap();
    assert!(r_ii < -1.0 && r_iii < 0.0);
    assert!((trimble_residual(&koebe_map()).unwrap() + 2.0).abs() < 1e-12);
    assert!((trimble_residual(&identity_map()).unwrap() - 1.0 / 3.0).abs() < 1e-15);
}

#[test]
fn identity_residuals() {
    for z in disk_points(1, 20, 0.99) {
        let (r_ii, r_iii) = theorem1_residuals(&identity_map(), 0.0, z).unwrap();
        assert!((r_ii - 1.0).abs() < 1e-15);
        assert!((r_iii - 2.0 * (1.0 - z.norm())).abs() < 1e-14);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn generated_members_satisfy_pointwise_bounds(seed in any::<u64>(), alpha in 0.0f64..0.95, vanish in any::<bool>()) {
        let phi = random_schwarz(seed, 1 + (seed % 8) as usize, vanish).unwrap();
        let p = phi.p0();
        let f = map_from_phi(phi, alpha).unwrap();
        prop_assert!(trimble_residual(&f).unwrap() >= -1e-9);
        for z in disk_points(seed, 64, 0.999) {
            let (r_ii, r_iii) = theorem1_residuals(&f, alpha, z).unwrap();
            prop_assert!(r_ii >= -1e-9 && r_iii >= -1e-9);
            let phi_mod = phi_from_f(&f, alpha, z).unwrap().norm();
            prop_assert!(lemma6_bound(p, z.norm()) - phi_mod >= -1e-9);
            if vanish {
                prop_assert!(prop3_residual(&f, alpha, z).unwrap() >= -1e-9);
            }
        }
    }

    #[test]
    fn envelopes_are_ordered_and_nested(alpha in 0.0f64..0.99, r in 0.0f64..0.99) {
        let e = growth_bounds(alpha, r, 1e-12).unwrap();
        prop_assert!(e.lower <= r + 1e-15 && r <= e.upper + 1e-15);
        let rob = robertson_bounds(alpha, r);
        prop_assert!(rob.f_lower <= e.lower + 1e-12 && e.upper <= rob.f_upper + 1e-12);
        let (lo, up) = distortion_bounds(alpha, r);
        prop_assert!(rob.fp_lower <= lo + 1e-15 && up <= rob.fp_upper + 1e-12);
        let wider = growth_bounds(alpha, (r + 0.005).min(0.995), 1e-12).unwrap();
        prop_assert!(wider.lower >= e.lower && wider.upper >= e.upper);
    }

    #[test]
    fn theorem7_is_increasing_in_p(alpha in 0.0f64..0.99, p in 0.0f64..0.98) {
        prop_assert!(theorem7_bound(alpha, p + 0.01).unwrap() >= theorem7_bound(alpha, p).unwrap());
    }

    #[test]
    fn report_violations_match_minimum(values in proptest::collection::vec(-1e-6f64..1.0, 1..50)) {
        let mut b = ReportBuilder::new(TheoremId::Theorem5, 0.0, 1e-9);
        for (k, v) in values.iter().enumerate() {
            b.push(c(k as f64 * 1e-3, 0.0), *v);
        }
        let r = b.finish().unwrap();
        prop_assert_eq!(r.violations == 0, r.min_residual >= -1e-9);
        prop_assert_eq!(r.sample_count, values.len());
    }
}

#[test]
fn registry_holds_one_check_per_id() {
    let reg = CheckRegistry::with_defaults();
    assert_eq!(reg.ids(), TheoremId::ALL.to_vec());
    let some = CheckRegistry::with_defaults().select(&[TheoremId::Theorem5, TheoremId::Trimble]);
    assert_eq!(some.ids(), vec![TheoremId::Theorem5, TheoremId::Trimble]);
    assert!(reg.get(TheoremId::Lemma6).is_some());
    assert!(CheckRegistry::empty().is_empty());
}

/// A plug-in check: `|f'(0)| = 1` for every member.
struct UnitDerivative;

impl BoundCheck for UnitDerivative {
    fn id(&self) -> TheoremId {
        TheoremId::Trimble
    }
    fn evaluate_member(&self, data: &MemberData<'_>, _: &SuiteContext, out: &mut ReportBuilder) -> Result<()> {
        let d1 = data.member.map.jet(c(0.0, 0.0))?.d1;
        out.push(c(0.0, 0.0), -(d1.norm() - 1.0).abs());
        Ok(())
    }
}

#[test]
fn custom_checks_replace_defaults_and_run() {
    let mut reg = CheckRegistry::with_defaults().select(&[TheoremId::Trimble, TheoremId::Theorem1Ii]);
    reg.register(Box::new(UnitDerivative));
    assert_eq!(reg.len(), 2);
    let config = RunConfig { grid: (8, 8), r_max: 0.9, ..RunConfig::default() };
    let ctx = suite_context(&config, 0.5).unwrap();
    let members: Vec<Member> = (0..4)
        .map(|k| Member::generated(format!("m{k}"), random_schwarz(k, 2, true).unwrap(), 0.5, c(0.5, 0.0)).unwrap())
        .collect();
    let reports = run_alpha(&reg, &members, &ctx).unwrap();
    let trimble = reports.iter().find(|r| r.theorem_id == TheoremId::Trimble).unwrap();
    assert_eq!(trimble.sample_count, 4);
    assert!(trimble.min_residual.abs() < 1e-12);
    assert!(reports.iter().all(|r| r.passed()));
}

#[test]
fn checks_skip_members_they_do_not_apply_to() {
    let reg = CheckRegistry::with_defaults();
    let vanishing = Member::generated("v", SchwarzFunction::identity(), 0.25, c(0.5, 0.0)).unwrap();
    let general = Member::generated("g", SchwarzFunction::constant(c(0.5, 0.0)).unwrap(), 0.25, c(0.5, 0.0)).unwrap();
    assert!(vanishing.vanishes_at_zero && !general.vanishes_at_zero);
    assert!((general.p - 0.5).abs() < 1e-15);
    let prop3 = reg.get(TheoremId::Prop3).unwrap();
    assert!(prop3.applies_to(&vanishing) && !prop3.applies_to(&general));
    let control = Member::claimed("k", Arc::new(koebe_map()), 0.0, c(0.5, 0.0));
    assert!(!reg.get(TheoremId::Theorem7).unwrap().applies_to(&control));
    assert!(!reg.get(TheoremId::Remark9).unwrap().applies_to(&control));
}
