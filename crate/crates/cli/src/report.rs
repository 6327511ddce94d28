use std::io::Write;

use modenum_core::Error;
use serde_json::Value;

/// What a subcommand prints: a text rendering and a JSON value.
#[derive(Debug)]
pub struct Report {
    pub text: String,
    pub json: Value,
}

impl Report {
    pub fn new(text: impl Into<String>, json: Value) -> Self {
        Self { text: text.into(), json }
    }

    /// Writes to stdout; a closed pipe is not an error.
    pub fn print(&self, json: bool) {
        let body = if json {
            serde_json::to_string_pretty(&self.json).expect("json value serializes")
        } else {
            self.text.clone()
        };
        let _ = writeln!(std::io::stdout().lock(), "{body}");
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error("oracle mismatch: {detail}")]
    Mismatch { detail: String, report: Option<Report> },
}

impl CliError {
    pub fn mismatch(detail: impl Into<String>) -> Self {
        CliError::Mismatch { detail: detail.into(), report: None }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Core(Error::Parse(_)) => 2,
            CliError::Mismatch { .. } => 3,
            CliError::Core(_) => 4,
        }
    }
}
