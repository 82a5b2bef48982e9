//! Command line companion to `dimerlab-core`: file formats for tilings and
//! monomial models, a small catalog of builtin fixtures, and report types
//! that serialize to JSON or render as plain text.

use std::fmt;

pub mod fixtures;
pub mod format;
pub mod pipeline;
pub mod render;
pub mod report;

/// Failure modes of a CLI run, split by exit code.
///
/// `Usage` covers bad invocations (unknown fixture, wrong input kind for a
/// command, out-of-range flags) and exits 2, matching clap's own convention
/// for argument errors. `Validation` covers inputs that parse but fail a
/// check, and computations that exceed their search budget; it exits 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Validation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Validation(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Validation(m) => m,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Validation(m) => write!(f, "error: {m}"),
        }
    }
}
