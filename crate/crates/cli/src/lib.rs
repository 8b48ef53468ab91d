//! Command-line front end over the Mockingbird lattice and rewriting crates.
//!
//! The library half exposes the subcommand implementations and the
//! fourteen-criterion verification suite so integration tests can drive them
//! directly; the binary only adds argument parsing and exit-code mapping
//! (0 success, 1 usage, 2 verification failure, 3 resource limit).

pub mod commands;
pub mod criteria;
pub mod error;
pub mod rules_file;

pub use commands::{execute, Cli, Command, LatticeFormat};
pub use criteria::{criteria, run_report, Criterion, Suite};
pub use error::CliError;
