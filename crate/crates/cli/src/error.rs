//! Pipeline error type and the process exit-code mapping.

use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 1;
pub const EXIT_IO: i32 = 2;

/// Everything that can go wrong between the command line and the core
/// logic. Validation failures (well-formed input breaking a semantic rule)
/// exit with 1; I/O trouble and malformed files exit with 2.
#[derive(Debug, thiserror::Error)]
pub enum PipelineError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{context}: {message}")]
    Parse { path: PathBuf, context: String, message: String },
    #[error("{path}:{context}: {message}")]
    Validation { path: PathBuf, context: String, message: String },
}

impl PipelineError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        PipelineError::Io { path: path.into(), source }
    }

    /// `context` locates the failure inside the file: a line number for
    /// line-oriented formats, a field path otherwise.
    pub fn parse(
        path: impl Into<PathBuf>,
        context: impl Into<String>,
        message: impl Into<String>,
    ) -> Self {
        PipelineError::Parse {
            path: path.into(),
            context: context.into(),
            message: message.into(),
        }
    }

    pub fn validation(
        path: impl Into<PathBuf>,
        context: impl Into<String>,
        message: impl Into<String>,
    ) -> Self {
        PipelineError::Validation {
            path: path.into(),
            context: context.into(),
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            PipelineError::Io { .. } | PipelineError::Parse { .. } => EXIT_IO,
            PipelineError::Validation { .. } => EXIT_VALIDATION,
        }
    }
}
