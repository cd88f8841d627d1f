use std::io::{self, IsTerminal};
use std::process::ExitCode;

use effort_prep::cli;

fn main() -> ExitCode {
    let color = cli::color_enabled(io::stdout().is_terminal());
    let code = cli::run(
        std::env::args_os(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
        color,
    );
    ExitCode::from(code as u8)
}
