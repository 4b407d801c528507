use std::fmt;

use partgraph::Error as CoreError;
use serde::Serialize;

/// Failure categories, each with its own process exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorKind {
    Usage,
    PartitionSyntax,
    NOutOfRange,
    UnknownRefset,
    StartNotAVertex,
    VerificationFailed,
    Io,
    Config,
    Other,
}

impl ErrorKind {
    pub fn exit_code(self) -> i32 {
        match self {
            ErrorKind::Other => 1,
            ErrorKind::Usage => 2,
            ErrorKind::PartitionSyntax => 3,
            ErrorKind::NOutOfRange => 4,
            ErrorKind::UnknownRefset => 5,
            ErrorKind::StartNotAVertex => 6,
            ErrorKind::VerificationFailed => 7,
            ErrorKind::Io => 8,
            ErrorKind::Config => 9,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CliError {
    pub kind: ErrorKind,
    pub message: String,
}

impl CliError {
    pub fn new(kind: ErrorKind, message: impl Into<String>) -> Self {
        CliError {
            kind,
            message: message.into(),
        }
    }

    /// One-line JSON record for stderr.
    pub fn record(&self) -> String {
        serde_json::json!({
            "error": self.kind,
            "code": self.kind.exit_code(),
            "message": self.message,
        })
        .to_string()
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        let kind = match &e {
            CoreError::ZeroN | CoreError::NAboveCap { .. } | CoreError::NoSelfConjugate { .. } => {
                ErrorKind::NOutOfRange
            }
            CoreError::PartitionSyntax { .. } | CoreError::InvalidPartition(_) => {
                ErrorKind::PartitionSyntax
            }
            CoreError::NotAVertex { .. } | CoreError::MismatchedN { .. } => {
                ErrorKind::StartNotAVertex
            }
            CoreError::UnknownReferenceSet(_)
            | CoreError::EmptyReferenceSet
            | CoreError::RefSetFile(_) => ErrorKind::UnknownRefset,
            _ => ErrorKind::Other,
        };
        CliError::new(kind, e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::new(ErrorKind::Io, e.to_string())
    }
}
