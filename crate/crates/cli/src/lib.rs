//! Front end for the type C inverse Chevalley checker: sweeps, the
//! conjecture scan, subset tables, graph export and single expansions.

pub mod checks;
pub mod cli;
pub mod commands;
pub mod config;
pub mod parse;
pub mod pool;

pub use cli::Cli;
pub use config::{Config, Settings};

/// Runs a parsed command line; `Ok(true)` iff everything requested passed.
pub fn run(cli: &Cli) -> anyhow::Result<bool> {
    let settings = Settings::resolve(&cli.global)?;
    commands::dispatch(&cli.command, &settings)
}
