//! Library side of the `perfover` command-line tool: subcommand logic, output
//! records and the verification suites, kept separate from argument parsing so
//! that they can be tested in-process.

pub mod bfile;
pub mod checks;
pub mod commands;
pub mod record;
pub mod reference;

use std::io;

/// Everything that ends a run with a nonzero exit status.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Malformed or out-of-domain arguments.
    #[error("usage: {0}")]
    Usage(String),
    /// `--xcheck` found computation paths that disagree.
    #[error("cross-check mismatch: {0}")]
    Mismatch(String),
    /// One or more `verify` checks failed.
    #[error("{0} check(s) failed")]
    ChecksFailed(usize),
    /// An enumeration would exceed the stream size limit.
    #[error("size guard: {0}")]
    Guard(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl CliError {
    pub const EXIT_USAGE: i32 = 2;
    pub const EXIT_MISMATCH: i32 = 3;
    pub const EXIT_GUARD: i32 = 4;
    /// Reserved for I/O failures such as a closed output pipe.
    pub const EXIT_IO: i32 = 1;

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => Self::EXIT_USAGE,
            CliError::Mismatch(_) | CliError::ChecksFailed(_) => Self::EXIT_MISMATCH,
            CliError::Guard(_) => Self::EXIT_GUARD,
            CliError::Io(_) => Self::EXIT_IO,
        }
    }
}

impl From<perfover::Error> for CliError {
    fn from(e: perfover::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}
