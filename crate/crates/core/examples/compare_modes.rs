//! Evaluate the correlation under every registered reading, next to the
//! bare regression temperature, for one seed.
//!
//! ```bash
//! cargo run -p darl --example compare_modes
//! ```

use darl::ingest::builtin_fixtures;
use darl::model::{darl_temperature_with, run_configuration, DarlMode};
use darl::stats::relative_error;
use darl::SeedValue;

fn main() -> darl::Result<()> {
    for name in ["experiment-a", "experiment-b"] {
        let fixture = builtin_fixtures(name)?;
        let mut config = fixture.config.clone();
        config.seeds = vec![SeedValue(5)];
        let run = run_configuration(&config);
        println!("{name}, seed 5");
        println!("{:>7} {:>8} {:>10} {:>10} {:>16}", "x_m", "T_obs", "T_phi", "as-printed", "phi-r2-bracket");
        for rec in run.records() {
            let obs = fixture
                .reference
                .iter()
                .find(|r| (r.length_m - rec.target_length).abs() < 1e-9)
                .expect("reference for every target")
                .t_obs_c;
            let mut line = format!("{:>7.2} {:>8.2} {:>10.3}", rec.target_length, obs, rec.t_phi);
            for mode in DarlMode::ALL {
                let out = darl_temperature_with(mode, config.t_in, config.t_end, config.t_w, rec.t_phi, rec.r_squared)?;
                let err = relative_error(obs, out.t_sim)?;
                line.push_str(&format!(" {:>8.3} ({:>5.1}%)", out.t_sim, err));
            }
            println!("{line}");
        }
        println!();
    }
    Ok(())
}
