use std::io;
use std::process::ExitCode;

use critfact_cli::{execute, parse_args, Io};

fn main() -> ExitCode {
    let plan = match parse_args(std::env::args_os().skip(1)) {
        Ok(plan) => plan,
        Err(e) => e.exit(),
    };
    let code = execute(
        &plan,
        &mut Io {
            stdin: &mut io::stdin().lock(),
            stdout: &mut io::stdout().lock(),
            stderr: &mut io::stderr().lock(),
        },
    );
    ExitCode::from(code as u8)
}
