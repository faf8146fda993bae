use langlands_core::Error;
use serde::{Deserialize, Serialize};

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DATA: i32 = 3;
pub const EXIT_NUMERIC: i32 = 4;

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io { path: String, message: String },
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

/// What goes to stderr when a command fails.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorRecord {
    pub kind: String,
    pub message: String,
    pub exit_code: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub level: Option<usize>,
}

pub fn core_kind(e: &Error) -> &'static str {
    match e.root_cause() {
        Error::Pole { .. } => "pole",
        Error::Overflow { .. } => "overflow",
        Error::Domain(_) => "domain",
        Error::Divergence(_) => "divergence",
        Error::NoConvergence(_) => "no-convergence",
        Error::Resource(_) => "resource",
        Error::InvalidType(_) => "invalid-type",
        Error::Parse { .. } => "parse",
        Error::Level { .. } => unreachable!("root_cause strips levels"),
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io { .. } => EXIT_DATA,
            CliError::Core(e) => match e.root_cause() {
                Error::Domain(_) | Error::Divergence(_) | Error::InvalidType(_) => EXIT_USAGE,
                Error::Parse { .. } => EXIT_DATA,
                _ => EXIT_NUMERIC,
            },
        }
    }

    pub fn record(&self) -> ErrorRecord {
        let exit_code = self.exit_code();
        match self {
            CliError::Usage(m) => ErrorRecord {
                kind: "usage".into(),
                message: m.clone(),
                exit_code,
                line: None,
                level: None,
            },
            CliError::Io { path, message } => ErrorRecord {
                kind: "io".into(),
                message: format!("{path}: {message}"),
                exit_code,
                line: None,
                level: None,
            },
            CliError::Core(e) => ErrorRecord {
                kind: core_kind(e).into(),
                message: e.to_string(),
                exit_code,
                line: match e.root_cause() {
                    Error::Parse { line, .. } => Some(*line),
                    _ => None,
                },
                level: match e {
                    Error::Level { index, .. } => Some(*index),
                    _ => None,
                },
            },
        }
    }
}
