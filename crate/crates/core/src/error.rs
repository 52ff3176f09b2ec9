use thiserror::Error;

/// Largest endpoint-enumeration depth accepted by the brute-force method
/// (2^20 points in the last level).
pub const BRUTE_FORCE_CAP: usize = 20;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid interval [{lo}, {hi}]: lower endpoint exceeds upper endpoint")]
    ReversedInterval { lo: f64, hi: f64 },

    #[error("non-finite value {value} where a finite number is required")]
    NonFinite { value: f64 },

    #[error("square root of interval [{lo}, {hi}] is undefined: lower endpoint is negative")]
    SqrtDomain { lo: f64, hi: f64 },

    #[error("signal must contain at least one sample")]
    EmptySignal,

    #[error("point set must contain at least one point")]
    EmptyPointSet,

    #[error("precision must be finite and non-negative, got {0}")]
    InvalidPrecision(f64),

    #[error("frequency index {k} out of range for signal length {len} (max {max})")]
    FrequencyOutOfRange { k: usize, len: usize, max: usize },

    #[error("sample index {n} out of range for signal length {len}")]
    SampleOutOfRange { n: usize, len: usize },

    #[error("brute-force depth {requested} exceeds the hard cap of {cap} (2^{cap} endpoint combinations)")]
    ResourceCap { requested: usize, cap: usize },

    #[error("iteration limit {limit} must be between 1 and the signal length {len}")]
    InvalidLimit { limit: usize, len: usize },

    #[error("expected a signal of length {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
