use darl::prng::{seed_generator, uniform_series, SeedValue, SortOrder, FERMAT_PRIMES};
use darl::stats::{quartile_summary, rmse, shapiro_wilk};
use proptest::prelude::*;
use serde::Deserialize;

#[derive(Deserialize)]
struct SwFixture {
    values: Vec<f64>,
    w: f64,
    p: f64,
}

#[test]
fn shapiro_wilk_twenty_point_reference() {
    let fx: SwFixture = serde_json::from_str(include_str!("../fixtures/v1/shapiro_wilk_20.json")).unwrap();
    let r = shapiro_wilk(&fx.values).unwrap();
    assert_eq!(r.n, 20);
    assert!((r.w_statistic - fx.w).abs() < 1e-3, "W {} vs {}", r.w_statistic, fx.w);
    assert!((r.p_value - fx.p).abs() < 1e-3, "p {} vs {}", r.p_value, fx.p);
    assert!(r.rejected());
}

#[test]
fn uniform_series_rejected_for_every_fermat_seed() {
    for p in FERMAT_PRIMES {
        let s = uniform_series(SeedValue(p), 538, 25.81, 31.01, SortOrder::Ascending).unwrap();
        let r = shapiro_wilk(&s.values).unwrap();
        assert!(r.p_value < 0.05, "seed {p}: p = {}", r.p_value);
    }
}

fn pseudo_normal(seed: u32, n: usize) -> Vec<f64> {
    let mut state = seed_generator(SeedValue(seed));
    (0..n)
        .map(|_| (0..12).map(|_| state.next_unit()).sum::<f64>() - 6.0)
        .collect()
}

#[test]
fn pseudo_normal_mostly_accepted() {
    let accepted = (1..=100)
        .filter(|&s| shapiro_wilk(&pseudo_normal(s, 1000)).unwrap().p_value >= 0.05)
        .count();
    assert!(accepted >= 90, "accepted {accepted}/100");
}

#[test]
fn uniform_538_almost_always_rejected() {
    let rejected = (1..=100)
        .filter(|&s| {
            let u = uniform_series(SeedValue(s), 538, 0.0, 1.0, SortOrder::Ascending).unwrap();
            shapiro_wilk(&u.values).unwrap().p_value < 0.05
        })
        .count();
    assert!(rejected >= 99, "rejected {rejected}/100");
}

fn vec_pair() -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
    (1usize..40).prop_flat_map(|n| {
        (
            prop::collection::vec(-100.0f64..100.0, n),
            prop::collection::vec(-10.0f64..10.0, n),
        )
    })
}

proptest! {
    #[test]
    fn rmse_properties((a, r) in vec_pair(), k in -5.0f64..5.0) {
        prop_assert_eq!(rmse(&a, &a).unwrap(), 0.0);
        let b: Vec<f64> = a.iter().zip(&r).map(|(x, d)| x + d).collect();
        let c: Vec<f64> = a.iter().zip(&r).map(|(x, d)| x - d).collect();
        let base = rmse(&a, &b).unwrap();
        prop_assert!(base >= 0.0);
        prop_assert!((base - rmse(&a, &c).unwrap()).abs() <= 1e-12);
        prop_assert!((base - rmse(&b, &a).unwrap()).abs() <= 1e-12);
        // Residual scaling, computed on residuals directly to avoid
        // cancellation from the large offsets.
        let zeros = vec![0.0; r.len()];
        let kr: Vec<f64> = r.iter().map(|d| k * d).collect();
        prop_assert!((rmse(&zeros, &kr).unwrap() - k.abs() * rmse(&zeros, &r).unwrap()).abs() <= 1e-12);
    }

    #[test]
    fn quartiles_ordered(values in prop::collection::vec(-1e3f64..1e3, 1..200)) {
        let q = quartile_summary(&values).unwrap();
        prop_assert!(q.q1 <= q.q2 && q.q2 <= q.q3);
        prop_assert!(q.iqr >= 0.0);
        prop_assert_eq!(q.iqr, q.q3 - q.q1);
    }
}
