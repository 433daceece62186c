use std::fmt::Write;

use darl::ingest::{builtin_fixtures, fixture_names, load_config, parse_sensor_csv, serialize_config, summarize_channel, CHANNELS};
use darl::model::{DarlMode, ExperimentConfig};
use darl::prng::{SeedValue, SortOrder, FERMAT_PRIMES};
use darl::stats::relative_error;
use proptest::prelude::*;

/// Log at 7 s cadence over `minutes`, groundwater alternating around 24.28.
fn synthetic_log(minutes: u32, tw_sd: f64) -> String {
    let rows = (minutes * 60 / 7 + 1) as usize;
    // Alternating ±d has sample sd d * sqrt(n / (n - 1)) for even n.
    let n = rows as f64;
    let d = if rows.is_multiple_of(2) { tw_sd * ((n - 1.0) / n).sqrt() } else { 0.0 };
    let mut s = String::from("timestamp_s,T_in,S1,S2,S3,S4,S7,T_w\n");
    for i in 0..rows {
        let tw = if i % 2 == 0 { 24.28 + d } else { 24.28 - d };
        writeln!(s, "{},31.01,28.80,27.37,26.67,25.81,24.54,{tw}", i * 7).unwrap();
    }
    s
}

#[test]
fn three_hundred_minutes_at_seven_seconds() {
    let log = parse_sensor_csv(synthetic_log(300, 0.0).as_bytes()).unwrap();
    assert_eq!(log.len(), 2572);
    for c in CHANNELS {
        assert_eq!(log.channel(c).unwrap().len(), 2572);
    }
    assert_eq!(log.sensor_uncertainty, 0.05);
}

#[test]
fn groundwater_mean_and_spread() {
    // 2572 rows is even, so the alternating construction applies.
    let log = parse_sensor_csv(synthetic_log(300, 0.09).as_bytes()).unwrap();
    let s = summarize_channel(&log, "T_w").unwrap();
    assert!((s.mean - 24.28).abs() < 1e-6, "{}", s.mean);
    assert!((s.std - 0.09).abs() < 1e-6, "{}", s.std);
    assert_eq!(s.count, 2572);
}

#[test]
fn fixture_error_column_self_consistent() {
    for name in fixture_names() {
        let fx = builtin_fixtures(name).unwrap();
        for row in &fx.published.rows {
            let obs = fx.reference.iter().find(|r| r.length_m == row.length_m).unwrap().t_obs_c;
            for sim in [obs + row.delta_t_c, obs - row.delta_t_c] {
                let e = relative_error(obs, sim).unwrap();
                assert!(
                    (e - row.relative_error_pct).abs() <= 0.01,
                    "{name} {} m: {e} vs {}",
                    row.length_m,
                    row.relative_error_pct
                );
            }
        }
    }
}

#[test]
fn experiment_a_document() {
    let doc = r#"{
        "t_in_c": 31.01, "t_end_c": 25.81, "t_w_c": 24.28, "t_w_uncertainty_c": 0.09,
        "total_length_m": 5.40, "target_lengths_m": [2.50, 3.40, 4.40],
        "seeds": [3, 5, 17, 257, 65537], "sort_order": "descending", "darl_mode": "as-printed"
    }"#;
    let cfg = load_config(doc.as_bytes()).unwrap();
    assert_eq!(cfg, builtin_fixtures("experiment-a").unwrap().config);
}

fn config_strategy() -> impl Strategy<Value = ExperimentConfig> {
    (
        10.0f64..40.0,
        0.1f64..10.0,
        0.0f64..30.0,
        0.5f64..20.0,
        prop::collection::vec(0.01f64..0.99, 1..6),
        prop::sample::subsequence(FERMAT_PRIMES.to_vec(), 1..=5),
        prop::option::of(2usize..5000),
        any::<bool>(),
        any::<bool>(),
    )
        .prop_map(|(t_end, dt, t_w, length, fractions, seeds, n_override, asc, variant)| ExperimentConfig {
            t_in: t_end + dt,
            t_end,
            t_w,
            t_w_uncertainty: 0.09,
            total_length: length,
            target_lengths: fractions.into_iter().map(|f| f * length).collect(),
            seeds: seeds.into_iter().map(SeedValue).collect(),
            n_override,
            sort_order: if asc { SortOrder::Ascending } else { SortOrder::Descending },
            darl_mode: if variant { DarlMode::PhiR2Bracket } else { DarlMode::AsPrinted },
        })
}

proptest! {
    #[test]
    fn config_round_trip(cfg in config_strategy()) {
        prop_assert!(cfg.validate().is_ok());
        let text = serialize_config(&cfg);
        prop_assert_eq!(load_config(text.as_bytes()).unwrap(), cfg);
    }
}
