use maxmatch_core::{ExtremalError, FamilyError, OracleError, TreeError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    CapExceeded(String),
    #[error("cannot write output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    pub const INPUT: u8 = 2;
    pub const CAP_EXCEEDED: u8 = 3;
    pub const VERIFICATION_FAILED: u8 = 4;

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => Self::INPUT,
            CliError::CapExceeded(_) => Self::CAP_EXCEEDED,
            CliError::Output(_) => 1,
        }
    }
}

impl From<TreeError> for CliError {
    fn from(e: TreeError) -> Self {
        match e {
            TreeError::AboveCap { .. } => CliError::CapExceeded(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::CapExceeded { .. } => CliError::CapExceeded(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

impl From<ExtremalError> for CliError {
    fn from(e: ExtremalError) -> Self {
        match e {
            ExtremalError::Tree(t) => t.into(),
            other => CliError::Input(other.to_string()),
        }
    }
}
