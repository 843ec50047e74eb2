use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = ch2rep_cli::Cli::parse();
    let mut output = String::new();
    let code = ch2rep_cli::run(&cli, &mut output);
    print!("{output}");
    ExitCode::from(code as u8)
}
