use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use ncf_cli::{run, Cli};

fn main() -> ExitCode {
    let outcome = run(Cli::parse());
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(outcome.report.as_bytes());
    let _ = stdout.flush();
    if let Some(msg) = outcome.diagnostic {
        eprintln!("{msg}");
    }
    ExitCode::from(outcome.exit_code as u8)
}
