use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use mlde_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = match run(&cli) {
        Ok(output) => output,
        Err(err) => {
            eprintln!("error: {err:#}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &output.text),
        None => std::io::stdout().write_all(output.text.as_bytes()),
    };
    if let Err(err) = written {
        eprintln!("error: {err}");
        return ExitCode::from(2);
    }
    if output.oracles_pass {
        ExitCode::SUCCESS
    } else {
        eprintln!("error: an internal oracle disagreed");
        ExitCode::FAILURE
    }
}
