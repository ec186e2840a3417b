use std::process::ExitCode;

fn main() -> ExitCode {
    seatgraph::cli::run(std::env::args_os())
}
