use std::fmt;

use serde_json::json;

/// Process exit codes. Stable, scripts depend on them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Success = 0,
    Usage = 1,
    Precondition = 2,
    Overflow = 3,
    Mismatch = 4,
}

impl ExitCode {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub exit: ExitCode,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { exit: ExitCode::Usage, message: message.into() }
    }

    pub fn precondition(message: impl Into<String>) -> Self {
        Self { exit: ExitCode::Precondition, message: message.into() }
    }

    pub fn kind(&self) -> &'static str {
        match self.exit {
            ExitCode::Success => "none",
            ExitCode::Usage => "usage",
            ExitCode::Precondition => "precondition",
            ExitCode::Overflow => "overflow",
            ExitCode::Mismatch => "mismatch",
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "error": { "kind": self.kind(), "message": self.message, "exit_code": self.exit.code() } })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<frobenius::Error> for CliError {
    fn from(e: frobenius::Error) -> Self {
        let exit = match e {
            frobenius::Error::Overflow => ExitCode::Overflow,
            _ => ExitCode::Precondition,
        };
        Self { exit, message: e.to_string() }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        Self::usage(format!("i/o error: {e}"))
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
