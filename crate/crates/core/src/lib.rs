//! Air-temperature prediction for earth-air-water heat exchangers.
//!
//! The pipeline draws a sorted, bounded MT19937 series for each seed,
//! fits it against pipe length by least squares, evaluates the
//! temperature correlation at the requested lengths and compares the
//! result with observations.
//!
//! ```
//! use darl::ingest::builtin_fixtures;
//! use darl::model::{compare_with_reference, run_configuration};
//!
//! let fixture = builtin_fixtures("experiment-a").unwrap();
//! let run = run_configuration(&fixture.config);
//! let cmp = compare_with_reference(&run.records(), &fixture.reference).unwrap();
//! assert_eq!(cmp.rows.len(), 15);
//! ```

// Negated comparisons such as `!(a > b)` are used on purpose so that NaN
// inputs fail validation instead of slipping through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod error;
pub mod ingest;
pub mod model;
pub mod prng;
pub mod regression;
pub mod stats;

pub use error::{Error, Result};
pub use model::{DarlMode, ExperimentConfig, PredictionRecord};
pub use prng::{GeneratorState, SeedValue, SortOrder};
pub use regression::LinearFit;
