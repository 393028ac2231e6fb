use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failed(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Library(#[from] strongcol::Error),
}

impl CliError {
    /// 1 for a failed verification or optimality check, 2 for bad input.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Library(
                strongcol::Error::InvalidColoring { .. } | strongcol::Error::SearchFailed { .. },
            ) => 1,
            CliError::Usage(_) | CliError::Io { .. } | CliError::Library(_) => 2,
        }
    }
}
