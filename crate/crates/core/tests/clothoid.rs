mod common;

use std::f64::consts::{FRAC_PI_3, FRAC_PI_6, PI};

use clothoid_fit::fitter::{build_clothoid, FitConfig, HermiteData};
use clothoid_fit::{ClothoidCurve, Error};
use common::{angle_diff, integrate};
use proptest::prelude::*;

fn curve(theta0: f64, kappa: f64, kappa_prime: f64, length: f64) -> ClothoidCurve {
    ClothoidCurve::new(1.5, -2.0, theta0, kappa, kappa_prime, length).unwrap()
}

/// Position by integrating the tangent direction over `[0, s]`.
fn point_quad(c: &ClothoidCurve, s: f64) -> (f64, f64) {
    let x = integrate(|t| c.angle_at(t).cos(), 0.0, s);
    let y = integrate(|t| c.angle_at(t).sin(), 0.0, s);
    (c.x0 + x, c.y0 + y)
}

#[test]
fn constructor_validates() {
    assert!(matches!(
        ClothoidCurve::new(0.0, 0.0, 0.0, 0.0, 0.0, 0.0),
        Err(Error::Domain(_))
    ));
    assert!(matches!(
        ClothoidCurve::new(0.0, f64::NAN, 0.0, 0.0, 0.0, 1.0),
        Err(Error::NonFinite(_))
    ));
}

#[test]
fn point_examples() {
    let c = curve(0.4, 0.3, -0.1, 5.0);
    assert_eq!(c.point_at(0.0).unwrap(), (1.5, -2.0));

    let line = curve(0.4, 0.0, 0.0, 5.0);
    let (x, y) = line.point_at(2.0).unwrap();
    assert!((x - (1.5 + 2.0 * 0.4f64.cos())).abs() < 1e-15);
    assert!((y - (-2.0 + 2.0 * 0.4f64.sin())).abs() < 1e-15);

    let circle = ClothoidCurve::new(0.0, 0.0, 0.0, 1.0, 0.0, 2.0 * PI).unwrap();
    let (x, y) = circle.point_at(PI).unwrap();
    assert!(x.abs() < 1e-15 && (y - 2.0).abs() < 1e-15);

    assert!(matches!(c.point_at(f64::INFINITY), Err(Error::NonFinite(_))));
}

#[test]
fn angle_and_curvature_examples() {
    let c = curve(0.0, 0.5, 0.25, 3.0);
    assert_eq!((c.angle_at(0.0), c.curvature_at(0.0)), (0.0, 0.5));
    assert_eq!((c.angle_at(2.0), c.curvature_at(2.0)), (1.5, 1.0));

    let data = HermiteData::new(5.0, 4.0, FRAC_PI_3, 5.0, 6.0, 7.0 * FRAC_PI_6);
    let fit = build_clothoid(&data, &FitConfig::default()).unwrap();
    let end = fit.curve.angle_at(fit.curve.length);
    assert!(angle_diff(end, data.theta1).abs() < 1e-10);
}

#[test]
fn sample_examples() {
    let line = curve(0.4, 0.0, 0.0, 5.0);
    let rows = line.sample(2).unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!((rows[0].x, rows[0].y, rows[0].theta, rows[0].kappa), (1.5, -2.0, 0.4, 0.0));
    assert!((rows[1].x - (1.5 + 5.0 * 0.4f64.cos())).abs() < 1e-14);
    assert!((rows[1].y - (-2.0 + 5.0 * 0.4f64.sin())).abs() < 1e-14);
    assert_eq!((rows[1].s, rows[1].theta, rows[1].kappa), (5.0, 0.4, 0.0));

    let c = curve(-1.0, 0.7, -0.3, 4.0);
    let rows = c.sample(2).unwrap();
    assert_eq!((rows[0].x, rows[0].y), c.point_at(0.0).unwrap());
    assert_eq!((rows[1].x, rows[1].y), c.point_at(4.0).unwrap());

    // unit circle through the origin heading along +x has its center at (0, 1)
    let circle = ClothoidCurve::new(0.0, 0.0, 0.0, 1.0, 0.0, 2.0 * PI).unwrap();
    for r in circle.sample(101).unwrap() {
        assert!((r.x.hypot(r.y - 1.0) - 1.0).abs() < 1e-10);
    }

    assert!(matches!(c.sample(1), Err(Error::TooFewSamples(1))));
}

#[test]
fn residual_examples() {
    let cfg = FitConfig::default();
    let line = HermiteData::new(0.0, 0.0, 0.0, 3.0, 0.0, 0.0);
    let f = build_clothoid(&line, &cfg).unwrap();
    assert!(f.curve.endpoint_residual(&line).unwrap() <= 1e-15);

    let t1 = HermiteData::new(5.0, 4.0, FRAC_PI_3, 5.0, 6.0, 7.0 * FRAC_PI_6);
    let f = build_clothoid(&t1, &cfg).unwrap();
    assert!(f.curve.endpoint_residual(&t1).unwrap() <= 1e-12);

    let t7 = HermiteData::new(0.0, 0.0, 0.005, 100.0, 0.0, -0.01);
    let f = build_clothoid(&t7, &cfg).unwrap();
    assert!(f.curve.endpoint_residual(&t7).unwrap() <= 1e-12);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn unit_speed(
        theta0 in -PI..PI, kappa in -2.0f64..2.0, kappa_prime in -1.0f64..1.0, s in 0.0f64..5.0,
    ) {
        let c = curve(theta0, kappa, kappa_prime, 5.0);
        let h = 1e-6;
        let (xa, ya) = c.point_at(s).unwrap();
        let (xb, yb) = c.point_at(s + h).unwrap();
        let t = c.angle_at(s);
        prop_assert!(((xb - xa) / h - t.cos()).abs() < 1e-5);
        prop_assert!(((yb - ya) / h - t.sin()).abs() < 1e-5);
    }

    #[test]
    fn matches_quadrature(
        theta0 in -PI..PI, kappa in -3.0f64..3.0, kappa_prime in -2.0f64..2.0, s in 0.0f64..10.0,
    ) {
        let c = curve(theta0, kappa, kappa_prime, 10.0);
        let (x, y) = c.point_at(s).unwrap();
        let (xq, yq) = point_quad(&c, s);
        let tol = 1e-11 * s.max(1.0);
        prop_assert!((x - xq).abs() < tol && (y - yq).abs() < tol, "({}, {}) vs ({}, {})", x, y, xq, yq);
    }

    #[test]
    fn curvature_is_affine(kappa in -3.0f64..3.0, kappa_prime in -2.0f64..2.0, s in 0.0f64..10.0) {
        let c = curve(0.0, kappa, kappa_prime, 10.0);
        let mid = c.curvature_at(0.5 * s);
        prop_assert!((mid - 0.5 * (c.curvature_at(0.0) + c.curvature_at(s))).abs() < 1e-14);
        prop_assert_eq!(c.angle_at(0.0), 0.0);
    }
}
