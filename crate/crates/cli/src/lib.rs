//! Command-line front end for `frametheory`: every command prints a JSON
//! envelope (or, with `--quiet`, its summary line).

pub mod args;
pub mod commands;
pub mod envelope;
pub mod error;
pub mod input;
pub mod suites;

use std::ffi::OsString;

use clap::Parser;

pub use commands::Output;

/// Parses `argv` and runs it. Usage errors from the argument parser come back
/// as clap's own message with exit code 2 (0 for `--help` / `--version`).
pub fn run<I, S>(argv: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match args::Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let exit_code = if e.use_stderr() { 2 } else { 0 };
            return Output {
                stdout: e.render().to_string(),
                exit_code,
            };
        }
    };
    let name = commands::command_name(&cli.command);
    commands::execute(&cli.command).unwrap_or_else(|e| Output {
        stdout: e.to_json(name),
        exit_code: e.exit_code(),
    })
}
