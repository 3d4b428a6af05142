//! Command-line front end: subcommand drivers, report rendering, the result
//! cache and the verification corpus.

pub mod cache;
pub mod commands;
pub mod error;
pub mod reports;
pub mod verify;

pub use error::{CliError, CliResult};
