use std::process::ExitCode;

fn main() -> ExitCode {
    k3nl::cli::run(std::env::args_os())
}
