use std::process::ExitCode;

use clap::Parser;

use bps_cli::args::Cli;

fn main() -> ExitCode {
    match bps_cli::run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) if e.is_broken_pipe() => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
