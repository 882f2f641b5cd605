use colored_eulerian::Error as CoreError;

/// Process exit codes.
pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_CAP: u8 = 2;
pub const EXIT_VERIFY: u8 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("schema: {0}")]
    Schema(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(CoreError::CapExceeded { .. }) => EXIT_CAP,
            CliError::Core(CoreError::Verification(_) | CoreError::ClosureNotEstablished(_)) => EXIT_VERIFY,
            _ => EXIT_USAGE,
        }
    }
}
