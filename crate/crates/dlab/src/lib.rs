//! File formats, reports and the command-line front end for `dlab-core`.

pub mod cli;
pub mod error;
pub mod hunt;
pub mod io;
pub mod lists;
pub mod report;

pub use error::{CliError, CliResult};
