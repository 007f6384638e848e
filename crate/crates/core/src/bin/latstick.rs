use std::process::ExitCode;

use clap::Parser;
use latstick::cli::{exit_code, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    match run(&cli.command, &mut std::io::stdin(), &mut stdout.lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("latstick: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
