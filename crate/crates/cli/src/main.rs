use std::process::ExitCode;

use clap::Parser;
use mockingbird_cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(error) => {
            // clap sends help/version to stdout and real usage errors to
            // stderr; its native exit code of 2 is remapped because 2 means
            // a verification failure here.
            let is_usage_error = error.use_stderr();
            let _ = error.print();
            return if is_usage_error {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match execute(cli.command) {
        Ok(stdout) => {
            print!("{stdout}");
            ExitCode::SUCCESS
        }
        Err(error) => {
            if let Some(partial) = error.partial_output() {
                print!("{partial}");
            }
            eprintln!("{error}");
            ExitCode::from(error.exit_code() as u8)
        }
    }
}
