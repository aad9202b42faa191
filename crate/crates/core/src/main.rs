use std::process::ExitCode;

mod cli;
mod plot;

fn main() -> ExitCode {
    cli::run()
}
