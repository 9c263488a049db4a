use std::io;

use thiserror::Error;

/// Errors produced anywhere in the cipher, codec and analysis layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid key: {0}")]
    InvalidKey(String),

    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    #[error("non-finite value at ({row}, {col})")]
    NonFinite { row: usize, col: usize },

    #[error("position ({row}, {col}) out of bounds for {rows}x{cols} matrix")]
    OutOfBounds {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension mismatch: expected {expected:?}, found {found:?}")]
    DimensionMismatch {
        expected: (usize, usize),
        found: (usize, usize),
    },

    /// Decryption produced a result that cannot be a valid plaintext. Wrong
    /// key, corrupted cipher and mismatched repeat factor all land here.
    #[error("integrity check failed: {0}")]
    Integrity(String),

    #[error("pixel value {0} outside [0, 255]")]
    PixelRange(f64),

    #[error("correlation undefined: zero variance")]
    UndefinedCorrelation,

    #[error("format error: {0}")]
    Format(String),

    #[error("unsupported image: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
