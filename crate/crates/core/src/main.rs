use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(higgsy::cli::run(std::env::args()) as u8)
}
