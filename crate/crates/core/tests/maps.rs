mod common;

use std::sync::Arc;

use common::{c, disk_points, fd_derivatives, rel_err};
use num_complex::Complex64;
use proptest::prelude::*;
use schwarzian::maps::{
    ell_alpha, extremal_map, identity_map, koebe_function, koebe_map, koebe_transform, map_from_phi,
    power_series_map, random_schwarz, AnalyticMap, FamilyParams, LogDerivative, MapRegistry, Mobius, PreComposed,
    SchwarzFunction, SharedMap,
};
use schwarzian::Error;

fn assert_jet_matches_fd(f: &dyn AnalyticMap, z: Complex64, tol: f64) {
    let jet = f.jet(z).unwrap().components();
    let fd = fd_derivatives(|w| f.jet(w).unwrap().d0, z);
    for k in 0..4 {
        let e = rel_err(jet[k], fd[k]);
        assert!(e < tol, "{} order {k} at {z}: rel err {e:e}", f.name());
    }
}

fn assert_fast_path_matches_jet(f: &dyn AnalyticMap, z: Complex64) {
    let fast = f.log_derivative(z).unwrap();
    let slow = LogDerivative::from_jet(z, &f.jet(z).unwrap()).unwrap();
    assert!(rel_err(fast.value, slow.value) < 1e-9, "{} Q at {z}", f.name());
    assert!(rel_err(fast.derivative, slow.derivative) < 1e-8, "{} Q' at {z}", f.name());
}

#[test]
fn generated_maps_match_finite_differences() {
    for seed in 0..6u64 {
        let phi = random_schwarz(seed, 1 + seed as usize % 4, seed % 2 == 0).unwrap();
        let f = map_from_phi(phi, 0.1 * seed as f64).unwrap();
        for z in disk_points(100 + seed, 4, 0.6) {
            assert_jet_matches_fd(&f, z, 1e-6);
        }
    }
}

#[test]
fn extremal_maps_match_finite_differences() {
    for alpha in [0.0, 0.25, 0.5, 0.75] {
        let f = extremal_map(alpha).unwrap();
        for z in disk_points(7, 5, 0.7) {
            assert_jet_matches_fd(&f, z, 1e-6);
        }
        let j0 = f.jet(c(0.0, 0.0)).unwrap();
        assert_eq!(j0.d0, c(0.0, 0.0));
        assert!((j0.d1 - 1.0).norm() < 1e-15 && j0.d2.norm() < 1e-15);
        assert!((j0.d3 - 2.0 * (1.0 - alpha)).norm() < 1e-14);
    }
}

#[test]
fn extremal_growth_matches_closed_forms() {
    // α = 0: ½ log((1+r)/(1-r)); α = ½: asin r
    for r in [0.1, 0.5, 0.9] {
        let z = c(r, 0.0);
        let f0 = extremal_map(0.0).unwrap().jet(z).unwrap().d0;
        assert!((f0.re - 0.5 * ((1.0 + r) / (1.0 - r)).ln()).abs() < 1e-10 && f0.im.abs() < 1e-15);
        let fh = extremal_map(0.5).unwrap().jet(z).unwrap().d0;
        assert!((fh.re - r.asin()).abs() < 1e-10);
    }
}

#[test]
fn fast_paths_agree_with_full_jets() {
    let phi = random_schwarz(3, 3, false).unwrap();
    let g: SharedMap = Arc::new(map_from_phi(phi, 0.3).unwrap());
    let maps: Vec<SharedMap> = vec![
        Arc::new(extremal_map(0.4).unwrap()),
        g.clone(),
        Arc::new(koebe_map()),
        Arc::new(koebe_transform(g.clone(), c(0.2, -0.4)).unwrap()),
        Arc::new(koebe_transform(Arc::new(extremal_map(0.6).unwrap()), c(-0.5, 0.1)).unwrap()),
        Arc::new(PreComposed::new(g, Mobius::disk_automorphism(c(0.1, 0.3), 0.7).unwrap()).unwrap()),
    ];
    for f in &maps {
        for z in disk_points(5, 6, 0.8) {
            assert_fast_path_matches_jet(f.as_ref(), z);
        }
    }
}

#[test]
fn koebe_closed_form_matches_truncated_series() {
    let exact = koebe_map();
    let series = koebe_function(64).unwrap();
    let z = c(0.25, 0.0);
    assert!((exact.jet(z).unwrap().d0 - 0.25 / 0.5625).norm() < 1e-12);
    assert!((series.jet(z).unwrap().d0 - 0.25 / 0.5625).norm() < 1e-10);
    for z in disk_points(9, 10, 0.3) {
        let (a, b) = (exact.jet(z).unwrap(), series.jet(z).unwrap());
        for (x, y) in a.components().iter().zip(b.components()) {
            assert!(rel_err(*x, y) < 1e-9);
        }
    }
    assert_eq!(exact.info().second_deriv_at_zero, c(4.0, 0.0));
}

#[test]
fn koebe_transforms_are_normalized_and_tagged() {
    let f: SharedMap = Arc::new(extremal_map(0.5).unwrap());
    for a in [c(0.3, 0.0), c(0.5, 0.0), c(0.0, 0.7)] {
        let t = koebe_transform(f.clone(), a).unwrap();
        let j = t.jet(c(0.0, 0.0)).unwrap();
        assert!(j.d0.norm() < 1e-14 && (j.d1 - 1.0).norm() < 1e-12);
        assert!((t.info().second_deriv_at_zero - j.d2).norm() < 1e-10);
        let beta = 0.5 * (1.0 - a.norm()) / (1.0 + a.norm());
        assert!((t.info().alpha_tag.unwrap() - beta).abs() < 1e-15);
    }
    // the identity's transform is the Möbius map z/(1+āz)
    let id: SharedMap = Arc::new(identity_map());
    let a = c(0.4, -0.2);
    let t = koebe_transform(id, a).unwrap();
    for z in disk_points(4, 5, 0.9) {
        assert!((t.jet(z).unwrap().d0 - z / (1.0 + a.conj() * z)).norm() < 1e-13);
    }
}

#[test]
fn koebe_transform_rejects_unnormalized_maps() {
    let m: SharedMap = Arc::new(Mobius::new(c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)).unwrap());
    assert!(matches!(koebe_transform(m, c(0.1, 0.0)), Err(Error::InvalidArgument(_))));
    let f: SharedMap = Arc::new(identity_map());
    assert!(matches!(koebe_transform(f, c(1.0, 0.0)), Err(Error::OutsideDisk(_))));
}

#[test]
fn generated_map_records_second_derivative_at_zero() {
    let phi = SchwarzFunction::constant(c(0.3, 0.4)).unwrap();
    let f = map_from_phi(phi, 0.25).unwrap();
    let expected = 2.0 * 0.75 * c(0.3, 0.4);
    assert!((f.info().second_deriv_at_zero - expected).norm() < 1e-15);
    assert!((f.jet(c(0.0, 0.0)).unwrap().d2 - expected).norm() < 1e-14);
    // φ(z) = z gives back the extremal map
    let g = map_from_phi(SchwarzFunction::identity(), 0.25).unwrap();
    let e = extremal_map(0.25).unwrap();
    for z in disk_points(8, 5, 0.8) {
        let (a, b) = (g.jet(z).unwrap(), e.jet(z).unwrap());
        for (x, y) in a.components().iter().zip(b.components()) {
            assert!(rel_err(*x, y) < 1e-10);
        }
    }
}

#[test]
fn half_plane_map_covers_the_half_plane() {
    for alpha in [0.0, 0.3, 0.9] {
        assert!((ell_alpha(alpha, c(0.0, 0.0)).unwrap() - 1.0).norm() < 1e-15);
        for z in disk_points(2, 50, 0.999) {
            assert!(ell_alpha(alpha, z).unwrap().re > alpha);
        }
        // the unit circle lands on the line Re w = α
        let w = ell_alpha(alpha, Complex64::from_polar(1.0, 2.0)).unwrap();
        assert!((w.re - alpha).abs() < 1e-12);
    }
    assert!(matches!(ell_alpha(0.5, c(1.0, 0.0)), Err(Error::PoleAtOne(_))));
}

#[test]
fn power_series_normalization_is_enforced() {
    assert!(matches!(power_series_map(vec![c(2.0, 0.0)]), Err(Error::InvalidNormalization(_))));
    assert!(power_series_map(vec![c(1.0, 0.0); 65]).is_err());
    let f = power_series_map(vec![c(1.0, 0.0), c(0.5, 0.0), c(0.0, 0.25)]).unwrap();
    let j = f.jet(c(0.0, 0.0)).unwrap();
    assert_eq!(j.d2, c(1.0, 0.0));
    assert_eq!(j.d3, c(0.0, 1.5));
}

#[test]
fn every_registered_family_builds_normalized_maps() {
    let reg = MapRegistry::with_defaults();
    for name in reg.names() {
        let params = FamilyParams { alpha: 0.5, seed: 9, degree: 5, vanish_at_zero: false };
        let f = reg.build(name, &params).unwrap();
        assert!(f.info().normalized, "{name}");
        assert!(!reg.get(name).unwrap().description().is_empty());
    }
    assert!(matches!(reg.get("cardioid"), Err(Error::Config(_))));
}

#[test]
fn custom_schwarz_functions_are_checked() {
    let half = SchwarzFunction::from_fn(|z| Ok(schwarzian::Jet3::from_raw(0.5 * z * z, z, c(1.0, 0.0), c(0.0, 0.0))), true);
    assert!(half.is_ok());
    let too_big = SchwarzFunction::from_fn(|z| Ok(schwarzian::Jet3::constant(2.0 * z)), true);
    assert!(matches!(too_big, Err(Error::NotSelfMap { .. })));
    let wrong_zero = SchwarzFunction::from_fn(|_| Ok(schwarzian::Jet3::constant(c(0.5, 0.0))), true);
    assert!(matches!(wrong_zero, Err(Error::InvalidArgument(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_schwarz_functions_are_self_maps(seed in any::<u64>(), degree in 1usize..=8, vanish in any::<bool>()) {
        let phi = random_schwarz(seed, degree, vanish).unwrap();
        prop_assert_eq!(phi.vanishes_at_zero(), vanish);
        if vanish {
            prop_assert!(phi.value(c(0.0, 0.0)).unwrap().norm() == 0.0);
        }
        prop_assert!(phi.p0() < 1.0);
        for z in disk_points(seed ^ 0x5555, 32, 0.999) {
            prop_assert!(phi.value(z).unwrap().norm() < 1.0);
        }
        let again = random_schwarz(seed, degree, vanish).unwrap();
        let z = c(0.3, -0.2);
        prop_assert_eq!(phi.value(z).unwrap(), again.value(z).unwrap());
    }

    #[test]
    fn disk_automorphisms_preserve_the_disk(px in -0.6f64..0.6, py in -0.6f64..0.6, theta in 0.0f64..std::f64::consts::TAU) {
        let m = Mobius::disk_automorphism(c(px, py), theta).unwrap();
        for z in disk_points(1, 16, 0.99) {
            prop_assert!(m.eval(z).unwrap().norm() < 1.0);
        }
        let on_circle = m.eval(Complex64::from_polar(1.0, 1.0)).unwrap();
        prop_assert!((on_circle.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn mobius_jets_match_finite_differences(v in proptest::array::uniform8(-1.0f64..1.0), z in (0.0f64..0.5, 0.0f64..std::f64::consts::TAU)) {
        let (a, b, cc, d) = (c(v[0], v[1]), c(v[2], v[3]), c(v[4], v[5]), c(2.0 + v[6], v[7]));
        prop_assume!((a * d - b * cc).norm() > 0.1);
        let m = Mobius::new(a, b, cc, d).unwrap();
        let z = Complex64::from_polar(z.0, z.1);
        let jet = m.mobius_jet(z).unwrap().components();
        let fd = fd_derivatives(|w| m.eval(w).unwrap(), z);
        for k in 0..4 {
            prop_assert!(rel_err(jet[k], fd[k]) < 1e-6);
        }
    }
}
