//! Command-line front end for `monoidp-core`: input parsing, text and JSON
//! output, and threaded enumeration.

pub mod cli;
pub mod commands;
pub mod error;
pub mod output;
pub mod parallel;
pub mod parse;

pub use cli::Cli;
pub use error::{CliError, CliResult};
pub use output::Output;
