//! Command-line front end: argument definitions and the commands behind them.

pub mod args;
pub mod cache;
pub mod commands;

pub use args::Cli;
pub use commands::{run, run_with_cache, Outcome, Status};
