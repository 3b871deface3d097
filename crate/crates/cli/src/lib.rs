//! File formats and command implementations behind the `listhom` binary.

pub mod commands;
pub mod formats;
pub mod selftest;

pub use commands::CliError;
