use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] ghk_core::error::Error),
    #[error("{0}: {1}")]
    Io(String, #[source] std::io::Error),
    #[error("{failed} of {total} checks failed")]
    VerifyFailed { failed: usize, total: usize },
}

impl CliError {
    /// 1 for rejected input, 2 for broken guarantees and failed verification.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_contract_violation() => 2,
            CliError::VerifyFailed { .. } => 2,
            _ => 1,
        }
    }
}
