use std::io::Write;
use std::process::ExitCode;

use bitrep_cli::{exit, exit_code, run, Cli, CliError, RunConfig};
use clap::error::ErrorKind;
use clap::Parser;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::from(exit::OK as u8);
        }
        Err(e) => {
            let err = CliError::Usage(
                e.render()
                    .to_string()
                    .split_whitespace()
                    .collect::<Vec<_>>()
                    .join(" "),
            );
            eprintln!("{}", err.to_json());
            return ExitCode::from(exit::MALFORMED as u8);
        }
    };
    let config = RunConfig::from_cli(cli);
    match run(&config) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(exit::INTERNAL as u8);
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("{}", err.to_json());
            ExitCode::from(exit_code(&err) as u8)
        }
    }
}
