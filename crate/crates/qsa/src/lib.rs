//! JSON formats, relation tables, verification suites and the `qsa`
//! command line on top of `qsa-core`.

pub mod cli;
pub mod json;
pub mod relations;
pub mod verify;

pub use qsa_core;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Core(#[from] qsa_core::Error),
}

impl CliError {
    /// 1 property failure, 2 usage or parse error, 3 guard exceeded.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) | CliError::Io(_) => 2,
            CliError::Core(e) => match e {
                qsa_core::Error::GuardExceeded { .. } => 3,
                qsa_core::Error::NonExact(_) | qsa_core::Error::Internal(_) => 1,
                _ => 2,
            },
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Parse(e.to_string())
    }
}
