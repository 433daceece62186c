//! Parse a sensor log, summarize channels and derive boundary conditions.
//!
//! Without an argument a synthetic 300-minute log at 7 s cadence is used.
//!
//! ```bash
//! cargo run -p darl --example sensor_log [log.csv]
//! ```

use std::fmt::Write;

use darl::ingest::{parse_sensor_csv, summarize_channel, CHANNELS};
use darl::model::ExperimentConfig;
use darl::prng::{seed_generator, SeedValue, FERMAT_PRIMES};

fn synthetic_log() -> String {
    let base = [31.01, 28.80, 27.37, 26.67, 25.81, 24.54, 24.28];
    let mut noise = seed_generator(SeedValue(65537));
    let mut s = String::from("timestamp_s,T_in,S1,S2,S3,S4,S7,T_w\n");
    for i in 0..=(300 * 60 / 7) {
        write!(s, "{}", i * 7).unwrap();
        for b in base {
            write!(s, ",{:.3}", b + (noise.next_unit() - 0.5) * 0.3).unwrap();
        }
        s.push('\n');
    }
    s
}

fn main() -> darl::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("read log"),
        None => synthetic_log(),
    };
    let log = parse_sensor_csv(text.as_bytes())?;
    println!("{} rows, sensor uncertainty ±{} °C", log.len(), log.sensor_uncertainty);
    for c in CHANNELS {
        let s = summarize_channel(&log, c)?;
        println!("{c:>5}: {:.2} ± {:.2} °C  (n = {})", s.mean, s.std, s.count);
    }

    let t_in = summarize_channel(&log, "T_in")?;
    let s4 = summarize_channel(&log, "S4")?;
    let tw = summarize_channel(&log, "T_w")?;
    let config = ExperimentConfig {
        t_in: t_in.mean,
        t_end: s4.mean,
        t_w: tw.mean,
        t_w_uncertainty: tw.std,
        total_length: 5.40,
        target_lengths: vec![2.50, 3.40, 4.40],
        seeds: FERMAT_PRIMES.iter().copied().map(SeedValue).collect(),
        n_override: None,
        sort_order: Default::default(),
        darl_mode: Default::default(),
    };
    config.validate()?;
    println!("{}", darl::ingest::serialize_config(&config));
    Ok(())
}
