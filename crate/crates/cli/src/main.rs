use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use twistword::{run, CliError, RunConfig};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    let outcome = match run(&config) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("twistword: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    for w in &outcome.warnings {
        eprintln!("{w}");
    }
    let written = match &config.output {
        Some(path) => std::fs::write(path, &outcome.bytes)
            .map_err(|source| CliError::Io { path: path.display().to_string(), source }),
        None => std::io::stdout()
            .write_all(&outcome.bytes)
            .map_err(|source| CliError::Io { path: "<stdout>".into(), source }),
    };
    if let Err(e) = written {
        eprintln!("twistword: {e}");
        return ExitCode::from(e.exit_code() as u8);
    }
    if outcome.exit_code == 3 {
        eprintln!("twistword: self-check failed; see report");
    }
    ExitCode::from(outcome.exit_code as u8)
}
