//! Library surface of the verifier: expression reports, check suites and
//! the minimiser scan. The binary in `main.rs` is a thin wrapper so that
//! everything here stays benchable and testable in-process.

pub mod report;
pub mod scan;
pub mod suites;

use std::fmt;

use polyface::error::Error;

/// Errors at the command layer, split by exit code: usage problems exit
/// with 2, failed claims with 1.
#[derive(Debug)]
pub enum CliError {
    UnknownSuite(String),
    Core(Error),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::UnknownSuite(name) => {
                write!(f, "unknown suite {name:?}; available: ")?;
                for (i, s) in suites::SUITES.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{s}")?;
                }
                write!(f, ", all")
            }
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    /// Exit code of the process when this error reaches `main`: parse and
    /// usage problems are 2, everything else 1.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::UnknownSuite(_) => 2,
            CliError::Core(Error::Parse(_))
            | CliError::Core(Error::DomainError(_))
            | CliError::Core(Error::DimensionMismatch(_)) => 2,
            _ => 1,
        }
    }
}
