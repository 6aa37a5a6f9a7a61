use std::fmt;
use std::io;

use dlab_core::Error;

/// Everything the front end can fail with, mapped onto exit codes.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    /// 1-based position in a text input.
    Parse { line: usize, column: usize, message: String },
    /// A JSON document with the wrong shape; `field` names the offending key.
    Schema { field: String, message: String },
    Io(io::Error),
    Core(Error),
}

impl CliError {
    pub fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        CliError::Parse { line, column, message: message.into() }
    }

    pub fn schema(field: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Schema { field: field.into(), message: message.into() }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::BudgetExceeded { .. }) => 3,
            CliError::Core(Error::Defect(_)) | CliError::Io(_) => 1,
            _ => 2,
        }
    }

    /// Short tag used in reports.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Parse { .. } => "parse",
            CliError::Schema { .. } => "schema",
            CliError::Io(_) => "io",
            CliError::Core(e) => match e {
                Error::InvalidGraph(_) => "invalid-graph",
                Error::MalformedEmbedding(_) => "malformed-embedding",
                Error::Disconnected => "disconnected",
                Error::Precondition(_) => "precondition",
                Error::BudgetExceeded { .. } => "budget-exceeded",
                Error::Defect(_) => "defect",
                Error::Usage(_) => "usage",
            },
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage: {m}"),
            CliError::Parse { line, column, message } => write!(f, "line {line}, column {column}: {message}"),
            CliError::Schema { field, message } => write!(f, "field {field:?}: {message}"),
            CliError::Io(e) => write!(f, "io: {e}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            CliError::Io(e) => Some(e),
            CliError::Core(e) => Some(e),
            _ => None,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

pub type CliResult<T> = Result<T, CliError>;
