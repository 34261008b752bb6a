mod analyze;
mod args;
mod bench;
mod conjecture;
mod construct;
mod gf;
mod output;
mod tables;

use args::{Cli, Command};
use clap::Parser;
use std::process::ExitCode;

/// Outcome of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// Computed values disagree with a reference; exit code 2.
    Mismatch,
}

fn run(cli: Cli) -> anyhow::Result<Status> {
    match cli.command {
        Command::Build(a) => construct::run(&a),
        Command::Analyze(a) => analyze::run(&a),
        Command::Tables(a) => tables::run(&a),
        Command::Conjecture(a) => conjecture::run(&a),
        Command::Bench(a) => bench::run(&a),
        Command::Gf(a) => gf::run(&a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version go to stdout and succeed; everything else is a usage error.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Mismatch) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
