use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = povd::cli::run_command(std::env::args_os(), &mut io::stdout(), &mut io::stderr());
    ExitCode::from(outcome.code as u8)
}
