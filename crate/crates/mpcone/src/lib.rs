//! Front end for `mpcone-core`: run configuration, the `PolyJSON` format,
//! the on-disk polynomial cache, a rayon executor, verification suites and
//! moment reports.

pub mod cache;
pub mod config;
pub mod eval;
pub mod exec;
pub mod moments;
pub mod polyjson;
pub mod report;
pub mod verify;

use std::fmt;

/// CLI-level failure, carrying its exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad flags, unparseable values, parameters outside the domain (exit 2).
    Input(String),
    /// A check or tolerance failed (exit 1).
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Failure(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "invalid input: {m}"),
            CliError::Failure(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<mpcone_core::Error> for CliError {
    fn from(e: mpcone_core::Error) -> Self {
        use mpcone_core::Error as E;
        match e {
            E::Quadrature(_) | E::Internal(_) => CliError::Failure(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
