//! Shapiro–Wilk and quartiles for a uniform series versus a
//! sum-of-uniforms pseudo-normal sample.
//!
//! ```bash
//! cargo run -p darl --example normality_check
//! ```

use darl::prng::{seed_generator, uniform_series, SeedValue, SortOrder, FERMAT_PRIMES};
use darl::stats::{quartile_summary, shapiro_wilk};

fn main() -> darl::Result<()> {
    println!("{:>6} {:>9} {:>11}  verdict", "seed", "W", "p");
    for seed in FERMAT_PRIMES {
        let s = uniform_series(SeedValue(seed), 538, 25.81, 31.01, SortOrder::Ascending)?;
        let r = shapiro_wilk(&s.values)?;
        let verdict = if r.rejected() { "not normal" } else { "normal" };
        println!("{seed:>6} {:>9.5} {:>11.3e}  {verdict}", r.w_statistic, r.p_value);
    }

    let mut state = seed_generator(SeedValue(17));
    let normal: Vec<f64> = (0..1000)
        .map(|_| (0..12).map(|_| state.next_unit()).sum::<f64>() - 6.0)
        .collect();
    let r = shapiro_wilk(&normal)?;
    println!("pseudo-normal n=1000: W = {:.5}, p = {:.4}", r.w_statistic, r.p_value);

    // Non-normal samples are better described by position measures.
    let s = uniform_series(SeedValue(5), 538, 25.81, 31.01, SortOrder::Ascending)?;
    let q = quartile_summary(&s.values)?;
    println!("seed 5 quartiles: Q1 {:.3}  Q2 {:.3}  Q3 {:.3}  IQR {:.3}", q.q1, q.q2, q.q3, q.iqr);
    Ok(())
}
