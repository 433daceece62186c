use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("insufficient samples: got {given}, need at least {needed}")]
    InsufficientSamples { given: usize, needed: usize },

    #[error("invalid bounds: min {min} is greater than max {max}")]
    InvalidBounds { min: f64, max: f64 },

    #[error("all abscissa values are equal; slope is undefined")]
    DegenerateAbscissa,

    #[error("sample has zero variance")]
    DegenerateVariance,

    #[error("sample size {0} outside the supported range 3..=5000")]
    UnsupportedSampleSize(usize),

    #[error("length mismatch: {left} observed vs {right} simulated")]
    ShapeMismatch { left: usize, right: usize },

    #[error("division by zero: observed value is 0")]
    DivisionByZero,

    #[error("singular model: regression temperature {t_phi} equals groundwater temperature")]
    Singularity { t_phi: f64 },

    #[error("invalid coefficient of determination {0}; must lie in (0, 1]")]
    InvalidCoefficient(f64),

    #[error("no reference observation for target length {0} m")]
    MissingReference(f64),

    #[error("schema error: {0}")]
    Schema(String),

    #[error("ordering error: timestamp at row {row} does not increase")]
    Ordering { row: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("validation error: {0}")]
    Validation(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("unknown model mode `{0}`")]
    UnknownMode(String),

    #[error("no seed produced predictions: {detail}")]
    NoUsableSeed { detail: String, code: i32 },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code: 2 usage/validation, 3 I/O, 4 numerical degeneracy.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io { .. } => 3,
            Error::NoUsableSeed { code, .. } => *code,
            Error::DegenerateAbscissa
            | Error::DegenerateVariance
            | Error::DivisionByZero
            | Error::Singularity { .. }
            | Error::InvalidCoefficient(_) => 4,
            _ => 2,
        }
    }
}
