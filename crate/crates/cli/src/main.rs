use std::io::{self, BufWriter, ErrorKind};
use std::process::ExitCode;

use schubert_cli::{parse_request, run, CliError, UsageError};

fn main() -> ExitCode {
    let request = match parse_request(std::env::args_os()) {
        Ok(r) => r,
        Err(UsageError::Display(text)) => {
            print!("{text}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let e = CliError::from(e);
            let msg = e.to_string();
            if msg.starts_with("error:") {
                eprintln!("{}", msg.trim_end());
            } else {
                eprintln!("error: {msg}");
            }
            return ExitCode::from(e.exit_code());
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match run(&request, &mut out) {
        Ok(outcome) => ExitCode::from(outcome.exit_code()),
        Err(CliError::Io(e)) if e.kind() == ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
