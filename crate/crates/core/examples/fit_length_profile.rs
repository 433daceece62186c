//! Fit a synthetic series against pipe length and read off regression
//! temperatures at the sensor positions.
//!
//! ```bash
//! cargo run -p darl --example fit_length_profile
//! ```

use darl::ingest::builtin_fixtures;
use darl::model::build_series;
use darl::regression::fit_series;
use darl::SeedValue;

fn main() -> darl::Result<()> {
    let config = builtin_fixtures("experiment-a")?.config;
    let (grid, series) = build_series(&config, SeedValue(5))?;
    let fit = fit_series(&grid, &series.values)?;

    println!(
        "n = {}, grid 0..{} m, order {:?}",
        series.len(),
        config.total_length,
        config.sort_order
    );
    println!(
        "T_phi(x) = {:.4} + ({:.4}) x    R² = {:.5}",
        fit.alpha, fit.beta, fit.r_squared
    );
    for x in &config.target_lengths {
        println!("  x = {x:.2} m  ->  T_phi = {:.3} °C", fit.predict_at(*x));
    }
    Ok(())
}
