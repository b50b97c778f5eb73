use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = mim_harness::cli::Cli::parse();
    let mut stdout = std::io::stdout().lock();
    match mim_harness::cli::run(cli, &mut stdout) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
