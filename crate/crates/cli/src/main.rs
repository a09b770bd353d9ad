use std::io::Write;
use std::panic;
use std::process::ExitCode;

use clap::Parser;
use finsgpd::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match panic::catch_unwind(|| run(&cli)) {
        Ok(r) => r,
        Err(_) => return ExitCode::from(1),
    };
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.stdout.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code())
        }
    }
}
