use std::process::ExitCode;

use clap::Parser;
use qalcove::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match qalcove::run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
