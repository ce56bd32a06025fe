use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = homometry_cli::run(std::env::args_os(), &mut std::io::stdin().lock());
    print!("{}", outcome.output);
    ExitCode::from(outcome.code as u8)
}
