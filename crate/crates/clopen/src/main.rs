use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = clopen::cli::run(std::env::args_os());
    let text = outcome.rendered();
    if outcome.exit_code == 2 {
        eprintln!("{text}");
    } else {
        println!("{text}");
    }
    ExitCode::from(outcome.exit_code as u8)
}
