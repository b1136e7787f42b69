use std::fmt;

use mixsing_core::Error as CoreError;

/// Front-end failure, mapped onto the process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags, unreadable files, unsupported format combinations.
    Usage(String),
    /// The polynomial or a parameter value does not parse.
    Parse(String),
    /// Parsed fine but mathematically out of domain (zero polynomial, …).
    Math(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Math(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Math(m) => write!(f, "math-domain error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Syntax { .. } | CoreError::UnboundParameter(_) | CoreError::NegativeExponent(_) => {
                CliError::Parse(e.to_string())
            }
            _ => CliError::Math(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}
