//! Implementation of the `fracwave` command-line tool.
//!
//! Exit code contract: 0 on success, 2 on invalid configuration or unusable
//! paths, 3 on numeric/domain failures. All file output is deterministic:
//! rerunning a command with identical flags produces byte-identical files.

pub mod args;
pub mod commands;
pub mod csvfmt;
pub mod svg;

use std::fmt;

/// Errors mapped onto the exit-code contract.
#[derive(Debug)]
pub enum CliError {
    /// invalid configuration: exit 2
    Usage(String),
    /// numeric or domain failure: exit 3
    Numeric(String),
    /// filesystem problem: exit 2 (the configuration named an unusable path)
    Io(String),
}

impl CliError {
    /// The process exit code for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Numeric(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "invalid configuration: {m}"),
            CliError::Numeric(m) => write!(f, "numeric failure: {m}"),
            CliError::Io(m) => write!(f, "io failure: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}
