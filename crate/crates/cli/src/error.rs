use std::path::PathBuf;

use iasl_core::Error as CoreError;

/// Errors raised while reading inputs or running a command.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("PARSE_ERROR: {source_name}:{line}: {message}")]
    Parse {
        source_name: String,
        line: usize,
        message: String,
    },
    /// A library error pinned to an input line.
    #[error("{source_name}:{line}: {error}")]
    AtLine {
        source_name: String,
        line: usize,
        error: CoreError,
    },
    #[error("LABEL_OUTSIDE_UNIVERSE: {source_name}:{line}: `{vertex}` has element {element} > universe_max {universe_max}")]
    OutsideUniverse {
        source_name: String,
        line: usize,
        vertex: String,
        element: u64,
        universe_max: u64,
    },
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("IO_ERROR: {}: {error}", path.display())]
    Io {
        path: PathBuf,
        error: std::io::Error,
    },
}

impl CliError {
    /// Process exit status: 3 for exhausted bounds, 2 for every other input problem.
    pub fn exit_code(&self) -> u8 {
        let core = match self {
            CliError::Core(e) | CliError::AtLine { error: e, .. } => Some(e),
            _ => None,
        };
        match core {
            Some(CoreError::BoundExceeded { .. }) => 3,
            _ => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
