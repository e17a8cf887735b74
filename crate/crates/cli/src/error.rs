use thiserror::Error;

/// Failures of one expression, each tied to a byte offset in its line.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CliError {
    #[error("parse error at column {}: {msg}", pos + 1)]
    Parse { pos: usize, msg: String },
    #[error("error at column {}: {err}", pos + 1)]
    Math { pos: usize, err: surreal_core::Error },
    #[error("type error at column {}: {msg}", pos + 1)]
    Type { pos: usize, msg: String },
    #[error("cannot render: {0}")]
    Render(String),
}

impl CliError {
    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        CliError::Parse { pos, msg: msg.into() }
    }

    pub fn math(pos: usize, err: surreal_core::Error) -> Self {
        CliError::Math { pos, err }
    }

    pub fn ty(pos: usize, msg: impl Into<String>) -> Self {
        CliError::Type { pos, msg: msg.into() }
    }

    /// Process exit code: 2 for syntax, 4 for exhausted budgets, 3 for any
    /// other mathematical failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Type { .. } => 2,
            CliError::Math { err, .. } if err.is_budget() => 4,
            CliError::Math { .. } | CliError::Render(_) => 3,
        }
    }
}
