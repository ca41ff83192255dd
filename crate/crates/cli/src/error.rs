use std::path::Path;

use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const FAILURE: u8 = 1;
    pub const VIOLATION: u8 = 2;
    pub const NON_GENERIC: u8 = 3;
    pub const RESOURCE_CAP: u8 = 4;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] bps_core::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.display().to_string(),
            source,
        }
    }

    /// The reader of our output went away, e.g. `bps ... | head`.
    pub fn is_broken_pipe(&self) -> bool {
        let kind = match self {
            CliError::Io { source, .. } => Some(source.kind()),
            CliError::Json(e) => e.io_error_kind(),
            CliError::Csv(e) => match e.kind() {
                csv::ErrorKind::Io(io) => Some(io.kind()),
                _ => None,
            },
            _ => None,
        };
        kind == Some(std::io::ErrorKind::BrokenPipe)
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) => core_exit_code(e),
            _ => exit::FAILURE,
        }
    }
}

pub fn core_exit_code(e: &bps_core::Error) -> u8 {
    use bps_core::Error::*;
    match e {
        NonGeneric { .. } => exit::NON_GENERIC,
        DegreeCapExceeded { .. } | PairLimitExceeded(_) | Timeout => exit::RESOURCE_CAP,
        _ => exit::FAILURE,
    }
}
