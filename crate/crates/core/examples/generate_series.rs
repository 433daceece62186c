//! Generate a sorted uniform temperature series and print a summary.
//!
//! Mirrors the reference generation step: 538 draws in [25.81, 31.01]
//! with seed 3, sorted ascending, exported as a single-column CSV.
//!
//! ```bash
//! cargo run -p darl --example generate_series [out.csv]
//! ```

use darl::cli::series_csv;
use darl::prng::{uniform_series, SeedValue, SortOrder};
use darl::stats::{mean_and_sd, quartile_summary};

fn main() -> darl::Result<()> {
    let series = uniform_series(SeedValue(3), 538, 25.81, 31.01, SortOrder::Ascending)?;

    println!("--- first rows ---");
    for (i, v) in series.values.iter().take(6).enumerate() {
        println!("{:>4} {v:.6}", i + 1);
    }

    let q = quartile_summary(&series.values)?;
    let (mean, sd) = mean_and_sd(&series.values)?;
    println!("--- summary ---");
    println!("Min.    {:.4}", series.values[0]);
    println!("1st Qu. {:.4}", q.q1);
    println!("Median  {:.4}", q.q2);
    println!("Mean    {mean:.4}  (sd {sd:.4})");
    println!("3rd Qu. {:.4}", q.q3);
    println!("Max.    {:.4}", series.values[series.len() - 1]);
    println!("--- structure ---");
    println!("{} obs. of 1 variable: Ordered_Value (num)", series.len());

    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, series_csv(&series.values)).expect("write csv");
        println!("wrote {path}");
    }
    Ok(())
}
