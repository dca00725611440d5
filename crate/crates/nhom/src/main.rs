use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use nhom::cli::{run, Cli, Format};

fn emit(text: &str) {
    let mut out = io::stdout().lock();
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match cli.options.format {
                Format::Json => emit(&format!("{}\n", out.json)),
                Format::Table => emit(&out.table),
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: one or more checks failed");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
