//! Plug a different seeding scheme into series generation.
//!
//! The default policy uses the single-word initialization recurrence.
//! Here the seed is instead expanded through the array initializer.
//!
//! ```bash
//! cargo run -p darl --example custom_seeding
//! ```

use darl::prng::{uniform_series_with, GeneratorState, ReferenceInit, SeedValue, SeedingPolicy, SortOrder};

struct ArrayInit;

impl SeedingPolicy for ArrayInit {
    fn seed(&self, seed: SeedValue) -> GeneratorState {
        GeneratorState::from_key(&[seed.0])
    }
}

fn main() -> darl::Result<()> {
    for seed in [3, 5, 17] {
        let a = uniform_series_with(&ReferenceInit, SeedValue(seed), 5, 25.81, 31.01, SortOrder::Ascending)?;
        let b = uniform_series_with(&ArrayInit, SeedValue(seed), 5, 25.81, 31.01, SortOrder::Ascending)?;
        println!("seed {seed:>2} reference: {:.3?}", a.values);
        println!("        array:     {:.3?}", b.values);
    }
    Ok(())
}
