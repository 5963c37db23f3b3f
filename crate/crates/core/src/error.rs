use thiserror::Error;

use crate::pinch::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("inconsistent configuration: {0}")]
    InconsistentConfiguration(String),

    #[error("incomplete configuration: {0}")]
    IncompleteConfiguration(String),

    #[error("theorem not applicable: {0}")]
    TheoremNotApplicable(String),

    #[error("invalid chain: {0}")]
    InvalidChain(String),

    #[error("oracle too large: {what} needs {needed}, cap is {cap}")]
    OracleTooLarge { what: String, needed: String, cap: u64 },

    #[error("oracle not applicable: {0}")]
    OracleNotApplicable(String),

    #[error("parse error at line {line}, column {column} (at `{path}`): {message}")]
    Parse {
        line: usize,
        column: usize,
        path: String,
        message: String,
    },

    #[error("schema error at `{path}`: {message}")]
    Schema { path: String, message: String },

    #[error("config error: {}", format_violations(.0))]
    Config(Vec<Violation>),

    #[error("{0}")]
    Io(String),
}

impl Error {
    /// Stable machine-readable error class.
    pub fn class(&self) -> &'static str {
        match self {
            Error::InvalidArgument(_) => "invalid-argument",
            Error::InconsistentConfiguration(_) => "inconsistent-configuration",
            Error::IncompleteConfiguration(_) => "incomplete-configuration",
            Error::TheoremNotApplicable(_) => "theorem-not-applicable",
            Error::InvalidChain(_) => "invalid-chain",
            Error::OracleTooLarge { .. } => "oracle-too-large",
            Error::OracleNotApplicable(_) => "oracle-not-applicable",
            Error::Parse { .. } => "parse-error",
            Error::Schema { .. } => "schema-error",
            Error::Config(_) => "config-error",
            Error::Io(_) => "io-error",
        }
    }
}

fn format_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|v| format!("[{}] {}", v.code, v.message))
        .collect::<Vec<_>>()
        .join("; ")
}
