use thiserror::Error;

/// Exit status for a verification that ran but found the table invalid.
pub const EXIT_INVALID: u8 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),

    #[error("{0}")]
    Limit(String),

    #[error("{0}")]
    Internal(String),

    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) | CliError::Io { .. } => 2,
            CliError::Limit(_) => 3,
            CliError::Internal(_) => 4,
        }
    }
}

impl From<mlaw::Error> for CliError {
    fn from(e: mlaw::Error) -> Self {
        use mlaw::Error as E;
        let msg = e.to_string();
        match e {
            E::OrderTooLarge { .. } | E::CosetLimit { .. } | E::TooManyGenerators(_) => CliError::Limit(msg),
            E::Invariant(_) | E::IncompleteTable => CliError::Internal(msg),
            _ => CliError::Input(msg),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Input(format!("malformed JSON: {e}"))
    }
}
