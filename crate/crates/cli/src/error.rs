use std::path::PathBuf;
use std::process::ExitCode;

use interval_dft::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Input { path: PathBuf, message: String },
    #[error("{path}, line {line}: {message}")]
    Row {
        path: PathBuf,
        line: u64,
        message: String,
    },
    #[error("{0}")]
    Core(#[from] CoreError),
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("verification failed\n{0}")]
    Invariant(String),
}

impl CliError {
    /// 1 for bad input, 2 for a resource-cap refusal, 3 for a broken
    /// internal invariant.
    pub fn exit_code(&self) -> ExitCode {
        let code = match self {
            CliError::Usage(_) | CliError::Input { .. } | CliError::Row { .. } | CliError::Write { .. } => 1,
            CliError::Core(e) => match e {
                CoreError::ResourceCap { .. } => 2,
                CoreError::ReversedInterval { .. }
                | CoreError::NonFinite { .. }
                | CoreError::EmptySignal
                | CoreError::InvalidPrecision(_)
                | CoreError::FrequencyOutOfRange { .. }
                | CoreError::InvalidLimit { .. } => 1,
                _ => 3,
            },
            CliError::Invariant(_) => 3,
        };
        ExitCode::from(code)
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
