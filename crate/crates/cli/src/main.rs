use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = nae_cli::dispatch(std::env::args());
    if !outcome.stdout.is_empty() {
        print!("{}", outcome.stdout);
        std::io::stdout().flush().ok();
    }
    if !outcome.stderr.is_empty() {
        eprint!("{}", outcome.stderr);
    }
    ExitCode::from(outcome.exit_code as u8)
}
