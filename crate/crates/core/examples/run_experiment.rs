//! Run a built-in experiment end to end and compare with observations.
//!
//! ```bash
//! cargo run -p darl --example run_experiment [experiment-a|experiment-b]
//! ```

use darl::ingest::builtin_fixtures;
use darl::model::{compare_with_reference, run_configuration};

fn main() -> darl::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "experiment-a".into());
    let fixture = builtin_fixtures(&name)?;
    let run = run_configuration(&fixture.config);
    for failure in &run.failures {
        eprintln!("seed {} skipped: {}", failure.seed, failure.reason);
    }

    let records = run.records();
    let cmp = compare_with_reference(&records, &fixture.reference)?;
    println!("{name}: {}", fixture.description);
    println!("{:>6} {:>7} {:>9} {:>9} {:>8} {:>8}", "seed", "x_m", "T_phi", "T_sim", "T_obs", "err_%");
    for (p, c) in records.iter().zip(&cmp.rows) {
        println!(
            "{:>6} {:>7.2} {:>9.3} {:>9.3} {:>8.2} {:>8.2}{}",
            p.seed.0,
            p.target_length,
            p.t_phi,
            p.t_sim,
            c.t_obs,
            c.relative_error_pct,
            if p.out_of_range_flag { "  (outside boundary range)" } else { "" }
        );
    }
    for r in &cmp.rmse_by_seed {
        println!("RMSE seed {}: {:.4} °C", r.seed, r.rmse);
    }
    println!("published RMSE: {:.4} °C", fixture.published.rmse_c);
    Ok(())
}
