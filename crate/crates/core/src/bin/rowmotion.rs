use clap::Parser;
use rowmotion::cli::{output_path, run, CliConfig, EXIT_USAGE};
use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let config = CliConfig::parse();
    let outcome = run(&config);
    eprint!("{}", outcome.stderr);
    let written = match output_path(&config) {
        Some(path) => std::fs::write(path, &outcome.stdout),
        None => std::io::stdout().write_all(outcome.stdout.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(EXIT_USAGE as u8);
    }
    ExitCode::from(outcome.status as u8)
}
