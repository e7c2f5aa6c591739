use anharmonic_core::Error as CoreError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_TOLERANCE: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("tolerance not reached: {0}")]
    Tolerance(String),
    #[error("invalid input: {0}")]
    Core(CoreError),
    #[error("numerical failure: {0}")]
    Numerical(CoreError),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Domain(_) | CoreError::Inadmissible { .. } => CliError::Core(e),
            _ => CliError::Numerical(e),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Tolerance(_) | CliError::Numerical(_) => EXIT_TOLERANCE,
            _ => EXIT_INVALID_INPUT,
        }
    }
}
