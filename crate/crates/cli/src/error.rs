use frametheory::FrameError;
use serde_json::json;
use thiserror::Error;

use crate::envelope::TOOL_VERSION;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 1 for failed mathematical preconditions, 2 for usage and I/O problems.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Frame(
                FrameError::BadParams(_)
                | FrameError::Format(_)
                | FrameError::DimensionMismatch { .. }
                | FrameError::IndexOutOfRange { .. },
            ) => 2,
            CliError::Frame(_) => 1,
            CliError::Io(_) | CliError::Usage(_) => 2,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Frame(e) => e.kind(),
            CliError::Io(_) => "IoError",
            CliError::Usage(_) => "UsageError",
        }
    }

    pub fn to_json(&self, command: &str) -> String {
        let doc = json!({
            "tool_version": TOOL_VERSION,
            "command": command,
            "error": { "kind": self.kind(), "message": self.to_string() },
        });
        serde_json::to_string_pretty(&doc).expect("error object serializes")
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
