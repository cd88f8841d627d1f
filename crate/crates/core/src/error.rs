use std::path::PathBuf;

use thiserror::Error;

/// Errors produced anywhere in the estimation toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dataset file not found: {}", .0.display())]
    FileNotFound(PathBuf),

    #[error("failed to read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("missing column `{0}` in header")]
    MissingColumn(String),

    #[error("row {row}: malformed record: {message}")]
    MalformedRow { row: usize, message: String },

    #[error("row {row}: invalid {field} `{value}`: {reason}")]
    InvalidValue {
        row: usize,
        field: &'static str,
        value: String,
        reason: &'static str,
    },

    #[error("duplicate project id {id} at row {row}")]
    DuplicateId { id: u32, row: usize },

    #[error("dataset is empty")]
    EmptyDataset,

    #[error("no values to fit")]
    EmptyInput,

    #[error("degenerate range: min-max bounds [{lo}, {hi}] have zero or negative width")]
    DegenerateRange { lo: f64, hi: f64 },

    #[error("logarithm undefined for non-positive value {0}")]
    NonPositiveLog(f64),

    #[error("invalid padding {0}: must be finite and >= 0")]
    InvalidPad(f64),

    #[error("invalid COCOMO coefficients a={a}, b={b}: both must be finite and > 0")]
    InvalidCoefficients { a: f64, b: f64 },

    #[error("size must be finite and >= 0, got {0}")]
    InvalidSize(f64),

    #[error("calibration needs at least 2 distinct sizes, got {0}")]
    Underdetermined(usize),

    #[error("calibration requires positive values; project {id} has size {size}, effort {effort}")]
    NonPositiveCalibration { id: u32, size: f64, effort: f64 },

    #[error("actual effort must be finite and > 0, got {0}")]
    InvalidActual(f64),

    #[error("estimated effort must be finite and >= 0, got {0}")]
    InvalidEstimate(f64),

    #[error("threshold must lie in (0, 1), got {0}")]
    InvalidThreshold(f64),

    #[error("no techniques given")]
    NoTechniques,

    #[error("technique `{technique}`: {source}")]
    Technique {
        technique: String,
        #[source]
        source: Box<Error>,
    },

    #[error("invalid token `{token}`: {reason}")]
    InvalidToken { token: String, reason: String },

    #[error("{0}")]
    Usage(String),

    #[error("failed to write output: {0}")]
    Output(#[from] std::io::Error),

    #[error("serialization failed: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Whether this error stems from bad input or usage (as opposed to an
    /// environment or internal failure).
    pub fn is_usage(&self) -> bool {
        match self {
            Error::Output(_) | Error::Json(_) => false,
            Error::Technique { source, .. } => source.is_usage(),
            _ => true,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
