//! Least-squares fits checked against an exact rational recomputation.

use darl::regression::{fit_ols, SamplePoint};
use num::{BigRational, ToPrimitive, Zero};
use proptest::prelude::*;

struct ExactFit {
    alpha: f64,
    beta: f64,
    r_squared: f64,
}

/// Closed form in exact rational arithmetic.
fn exact_fit(points: &[SamplePoint]) -> ExactFit {
    let q = |v: f64| BigRational::from_float(v).unwrap();
    let n = BigRational::from_integer(points.len().into());
    let xs: Vec<BigRational> = points.iter().map(|p| q(p.x)).collect();
    let ys: Vec<BigRational> = points.iter().map(|p| q(p.y)).collect();
    let x_mean = xs.iter().fold(BigRational::zero(), |a, b| a + b) / &n;
    let y_mean = ys.iter().fold(BigRational::zero(), |a, b| a + b) / &n;
    let (mut sxx, mut sxy, mut syy) = (BigRational::zero(), BigRational::zero(), BigRational::zero());
    for (x, y) in xs.iter().zip(&ys) {
        let dx = x - &x_mean;
        let dy = y - &y_mean;
        sxx += &dx * &dx;
        sxy += &dx * &dy;
        syy += &dy * &dy;
    }
    let beta = &sxy / &sxx;
    let alpha = &y_mean - &beta * &x_mean;
    let r2 = (&sxy * &sxy) / (&sxx * &syy);
    ExactFit {
        alpha: alpha.to_f64().unwrap(),
        beta: beta.to_f64().unwrap(),
        r_squared: r2.to_f64().unwrap(),
    }
}

fn hundredths() -> impl Strategy<Value = f64> {
    (-10_000i32..=10_000).prop_map(|k| k as f64 / 100.0)
}

fn instance() -> impl Strategy<Value = Vec<SamplePoint>> {
    prop::collection::vec((hundredths(), hundredths()), 2..=50)
        .prop_map(|v| v.into_iter().map(|(x, y)| SamplePoint::new(x, y)).collect::<Vec<_>>())
        .prop_filter("non-degenerate", |p: &Vec<SamplePoint>| {
            p.iter().any(|q| q.x != p[0].x) && p.iter().any(|q| q.y != p[0].y)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn matches_exact_closed_form(points in instance()) {
        let fit = fit_ols(&points).unwrap();
        let exact = exact_fit(&points);
        let scale = 1.0f64.max(exact.beta.abs());
        prop_assert!((fit.beta - exact.beta).abs() <= 1e-9 * scale, "{} vs {}", fit.beta, exact.beta);
        prop_assert!((fit.alpha - exact.alpha).abs() <= 1e-9 * scale * 100.0, "{} vs {}", fit.alpha, exact.alpha);
        prop_assert!((fit.r_squared - exact.r_squared).abs() <= 1e-9);
    }

    #[test]
    fn r_squared_in_unit_interval_and_sums_decompose(points in instance()) {
        let fit = fit_ols(&points).unwrap();
        prop_assert!((0.0..=1.0).contains(&fit.r_squared));
        let n = points.len() as f64;
        let y_mean = points.iter().map(|p| p.y).sum::<f64>() / n;
        let sst: f64 = points.iter().map(|p| (p.y - y_mean).powi(2)).sum();
        let sse: f64 = points.iter().map(|p| (p.y - fit.predict_at(p.x)).powi(2)).sum();
        let ssr: f64 = points.iter().map(|p| (fit.predict_at(p.x) - y_mean).powi(2)).sum();
        prop_assert!((sst - (ssr + sse)).abs() <= 1e-8 * sst.max(1.0));
    }

    #[test]
    fn shift_invariance(points in instance(), c in -100.0f64..100.0) {
        let base = fit_ols(&points).unwrap();
        let shifted: Vec<_> = points.iter().map(|p| SamplePoint::new(p.x, p.y + c)).collect();
        let fit = fit_ols(&shifted).unwrap();
        prop_assert!((fit.alpha - (base.alpha + c)).abs() <= 1e-9 * (1.0 + base.beta.abs()) * 100.0);
        prop_assert!((fit.beta - base.beta).abs() <= 1e-9 * (1.0 + base.beta.abs()));
        prop_assert!((fit.r_squared - base.r_squared).abs() <= 1e-9);
    }

    #[test]
    fn scale_covariance(points in instance(), k in prop_oneof![-10.0f64..-0.1, 0.1f64..10.0]) {
        let base = fit_ols(&points).unwrap();
        let scaled: Vec<_> = points.iter().map(|p| SamplePoint::new(p.x, p.y * k)).collect();
        let fit = fit_ols(&scaled).unwrap();
        let tol = 1e-9 * (1.0 + base.beta.abs()) * 100.0 * k.abs();
        prop_assert!((fit.alpha - k * base.alpha).abs() <= tol);
        prop_assert!((fit.beta - k * base.beta).abs() <= tol);
        prop_assert!((fit.r_squared - base.r_squared).abs() <= 1e-9);
    }
}

#[test]
fn worked_examples_exact() {
    let line: Vec<_> = (0..10).map(|i| SamplePoint::new(i as f64, 2.0 * i as f64 + 1.0)).collect();
    let e = exact_fit(&line);
    assert_eq!((e.alpha, e.beta, e.r_squared), (1.0, 2.0, 1.0));

    let three = [SamplePoint::new(0.0, 1.0), SamplePoint::new(1.0, 2.0), SamplePoint::new(2.0, 2.0)];
    let e = exact_fit(&three);
    assert!((e.alpha - 7.0 / 6.0).abs() < 1e-15);
    assert_eq!(e.beta, 0.5);
    assert_eq!(e.r_squared, 0.75);
    let fit = fit_ols(&three).unwrap();
    assert!((fit.alpha - e.alpha).abs() < 1e-12);
    assert!((fit.beta - e.beta).abs() < 1e-12);
    assert!((fit.r_squared - e.r_squared).abs() < 1e-12);
}
