//! The `equipart` command-line tool.
//!
//! Command logic lives here so the integration tests can drive it without
//! spawning processes; `main` is a thin wrapper.

pub mod args;
pub mod bench;
pub mod render;
pub mod run;

use equipart::PartSizes;
use thiserror::Error;

pub use args::{Cli, Command, Format};
pub use run::{run, Outcome, EXIT_DISAGREEMENT, EXIT_INFEASIBLE, EXIT_OK, EXIT_USAGE};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("parts list is empty")]
    Empty,
    #[error("invalid part size {token:?}")]
    BadToken { token: String },
    #[error(transparent)]
    Invalid(#[from] equipart::Error),
}

/// Parses a comma-separated list of positive part sizes; whitespace
/// around commas is tolerated.
pub fn parse_parts(input: &str) -> Result<PartSizes, ParseError> {
    if input.trim().is_empty() {
        return Err(ParseError::Empty);
    }
    let mut sizes = Vec::new();
    for token in input.split(',') {
        let token = token.trim();
        let size: u64 = token.parse().map_err(|_| ParseError::BadToken {
            token: token.to_string(),
        })?;
        sizes.push(size);
    }
    Ok(PartSizes::new(sizes)?)
}
