use kfin_core::GroupError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("{0}")]
    Io(String),
    #[error("serialization failed: {0}")]
    Json(#[from] serde_json::Error),
    #[error("thread pool: {0}")]
    Pool(String),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

/// Verification failed.
pub const EXIT_VERIFY_FAILED: i32 = 1;
/// Unparseable spec, element or parameter.
pub const EXIT_PARSE: i32 = 2;
/// A resource cap was hit.
pub const EXIT_CAP: i32 = 3;
pub const EXIT_OTHER: i32 = 4;

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Group(
                GroupError::Syntax { .. }
                | GroupError::InvalidParameter(_)
                | GroupError::InvalidTable(_)
                | GroupError::ElementMismatch(_),
            ) => EXIT_PARSE,
            CliError::Group(GroupError::CapExceeded { .. } | GroupError::AboveCap { .. }) => EXIT_CAP,
            _ => EXIT_OTHER,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
