//! File formats, reports and the `iasl` command-line front end for
//! [`iasl_core`].

pub mod app;
pub mod error;
pub mod formats;
pub mod report;

pub use app::{main_with, run, Cli, RunOutput};
pub use error::{CliError, CliResult};
