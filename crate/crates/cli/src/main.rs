mod args;
mod commands;
mod error;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind as ClapKind;
use clap::Parser;

use args::{Cli, RunConfig};
use commands::Artifact;
use error::{CliError, ErrorKind};

fn emit(artifacts: &[Artifact], out: Option<&std::path::Path>) -> Result<(), CliError> {
    match out {
        Some(dir) => {
            std::fs::create_dir_all(dir)?;
            for a in artifacts {
                std::fs::write(dir.join(&a.name), &a.content)?;
            }
        }
        None => {
            let stdout = std::io::stdout();
            let mut w = stdout.lock();
            let headers = artifacts.len() > 1;
            for a in artifacts {
                if headers {
                    writeln!(w, "# {}", a.name)?;
                }
                w.write_all(a.content.as_bytes())?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn real_main() -> Result<(), CliError> {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ClapKind::DisplayHelp | ClapKind::DisplayVersion) => {
            print!("{e}");
            return Ok(());
        }
        Err(e) => {
            let msg = e.to_string();
            let first = msg
                .lines()
                .next()
                .unwrap_or("invalid arguments")
                .trim_start_matches("error: ");
            return Err(CliError::new(ErrorKind::Usage, first));
        }
    };
    let cfg = RunConfig::resolve(cli)?;
    let outcome = commands::run(&cfg)?;
    emit(&outcome.artifacts, cfg.out.as_deref())?;
    match outcome.failure {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    match real_main() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", e.record());
            ExitCode::from(e.kind.exit_code() as u8)
        }
    }
}
