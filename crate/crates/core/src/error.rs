//! Error type shared by every engine.

use thiserror::Error;

/// Failures reported by the engines and the command-line frontend.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KlrError {
    #[error("rank must satisfy ell >= 2, got {0}")]
    InvalidRank(usize),

    #[error("vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("index {index} out of range 0..={ell}")]
    IndexOutOfRange { index: usize, ell: usize },

    #[error("negative entry {value} at position {index}")]
    NegativeEntry { index: usize, value: i64 },

    #[error("weight has level 0; a positive level is required")]
    ZeroLevel,

    #[error("weights are not equivalent: {0}")]
    NotEquivalent(String),

    #[error("move {label} does not apply: {reason}")]
    InvalidMove { label: String, reason: String },

    #[error("residue content mismatch: {0}")]
    ContentMismatch(String),

    #[error("charge list mismatch: {0}")]
    ChargeMismatch(String),

    #[error("{what} = {got} exceeds the limit {limit}")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("unknown output format {0:?}")]
    UnknownFormat(String),

    #[error("{0}")]
    Invalid(String),
}

impl KlrError {
    /// Process exit status used by the command-line frontend.
    pub fn exit_code(&self) -> i32 {
        match self {
            KlrError::GuardExceeded { .. } => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, KlrError>;
