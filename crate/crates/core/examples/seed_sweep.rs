//! Rank the Fermat seeds by mean relative error for each experiment.
//!
//! ```bash
//! cargo run -p darl --example seed_sweep
//! ```

use darl::ingest::{builtin_fixtures, fixture_names};
use darl::model::{compare_with_reference, rank_seeds, run_configuration, DarlMode};

fn main() -> darl::Result<()> {
    for name in fixture_names() {
        let fixture = builtin_fixtures(name)?;
        for mode in DarlMode::ALL {
            let mut config = fixture.config.clone();
            config.darl_mode = mode;
            let records = run_configuration(&config).records();
            let cmp = compare_with_reference(&records, &fixture.reference)?;
            let ranking = rank_seeds(&cmp.rows)?;
            let order: Vec<String> = ranking
                .iter()
                .map(|r| format!("{} ({:.2}%)", r.seed, r.mean_relative_error_pct))
                .collect();
            println!("{name} [{mode}]: {}", order.join(" < "));
        }
    }
    Ok(())
}
