use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use monoidp::{commands, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli, &mut std::io::stdin().lock()) {
        Ok(out) => {
            if out.envelope.truncated && !cli.json {
                eprintln!("monoidp: result truncated at the given bound");
            }
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.render(cli.json).as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("monoidp: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
