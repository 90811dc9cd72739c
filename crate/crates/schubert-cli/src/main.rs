use std::process::ExitCode;

use clap::Parser;
use schubert_cli::{run, Cli, Status};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let written = match &cli.out {
                Some(path) => std::fs::write(path, &outcome.json),
                None => {
                    print!("{}", outcome.json);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(Status::Failed.code());
            }
            match outcome.status {
                Status::Refuted => eprintln!("refuted: see the counterexamples in the report"),
                Status::Failed => eprintln!("check failed: see the failures in the report"),
                Status::Success => {}
            }
            ExitCode::from(outcome.status.code())
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(Status::Failed.code())
        }
    }
}
