use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;
/// The command ran but its verdict is negative.
pub const EXIT_FALSE: i32 = 5;
pub const EXIT_INTERNAL: i32 = 6;

#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable input, malformed JSON, or a malformed command line.
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    Resource(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Parse(_) => "parse",
            CliError::Validation(_) => "validation",
            CliError::Precondition(_) => "precondition",
            CliError::Resource(_) => "resource",
            CliError::Internal(_) => "internal",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Validation(_) => EXIT_VALIDATION,
            CliError::Precondition(_) => EXIT_PRECONDITION,
            CliError::Resource(_) => EXIT_RESOURCE,
            CliError::Internal(_) => EXIT_INTERNAL,
        }
    }
}

impl From<bicolim::Error> for CliError {
    fn from(e: bicolim::Error) -> Self {
        use bicolim::Error as E;
        let msg = e.to_string();
        match e {
            E::Precondition(_) => CliError::Precondition(msg),
            E::Resource(_) => CliError::Resource(msg),
            E::Internal(_) => CliError::Internal(msg),
            E::TwoCategory(_) | E::Validation(_) | E::Boundary(_) | E::WellDefinedness(_) => {
                CliError::Validation(msg)
            }
        }
    }
}
