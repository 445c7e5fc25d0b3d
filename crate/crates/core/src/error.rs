use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid dimensions {width}x{height} for {len} pixels")]
    InvalidDimensions {
        width: usize,
        height: usize,
        len: usize,
    },

    #[error(
        "{what}: expected {expected_width}x{expected_height}, found {found_width}x{found_height}"
    )]
    DimensionMismatch {
        what: String,
        expected_width: usize,
        expected_height: usize,
        found_width: usize,
        found_height: usize,
    },

    #[error("eta must be in 1..=8, got {0}")]
    InvalidEta(u32),

    #[error("frequency must be at least 1, got {0}")]
    FrequencyOutOfDomain(u64),

    #[error("expected {expected} {what}, got {found}")]
    Arity {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("invalid manifest: {0}")]
    Manifest(String),

    #[error("corrupted carriers: reconstructed value {value} at row {row}, column {col} is outside 0..=255")]
    Corruption { row: usize, col: usize, value: i32 },

    #[error("operation count {count} exceeds complexity bound {bound} for {side}x{side}")]
    ComplexityBound { side: usize, count: u64, bound: u64 },

    #[error("{path}: {reason}")]
    Format { path: PathBuf, reason: String },

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

    pub(crate) fn format(path: impl Into<PathBuf>, reason: impl Into<String>) -> Self {
        Error::Format {
            path: path.into(),
            reason: reason.into(),
        }
    }
}
