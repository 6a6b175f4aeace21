use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A configuration value is missing, malformed or out of range.
    #[error("invalid value for `{field}`: {message}")]
    Config { field: String, message: String },

    /// The config document is not valid JSON.
    #[error("config parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// The adjacency matrix has no doubly stochastic scaling (no total support).
    #[error("graph {graph} is not scalable to a doubly stochastic matrix: max deviation {residual:e} after {iterations} iterations")]
    NotScalable {
        graph: String,
        iterations: usize,
        residual: f64,
    },

    /// Array shapes disagree; always a programming error on the caller's side.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("I/O error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn config(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            field: field.into(),
            message: message.into(),
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code used by the command line: 2 for I/O, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io { .. } => 2,
            _ => 1,
        }
    }
}
