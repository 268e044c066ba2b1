use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use rtspan::cli::{run, Cli};

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            let _ = std::io::stdout().write_all(out.stdout.as_bytes());
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("rtspan: {e}");
            ExitCode::from(2)
        }
    }
}
