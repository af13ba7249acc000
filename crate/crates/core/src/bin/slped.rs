use std::io;
use std::process::ExitCode;

use clap::Parser;
use slp_edit::commands::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli, &mut io::stdout().lock(), &mut io::stderr().lock()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
