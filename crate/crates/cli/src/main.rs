mod args;
mod commands;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

fn name(c: &Command) -> &'static str {
    match c {
        Command::Moment(_) => "moment",
        Command::Coeff(_) => "coeff",
        Command::Genfun(_) => "genfun",
        Command::Selberg(_) => "selberg",
        Command::Verify(_) => "verify",
        Command::Sample(_) => "sample",
        Command::Density(_) => "density",
        Command::Remainder(_) => "remainder",
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let d = cli.digits;
    let result = match &cli.command {
        Command::Moment(a) => commands::moment(a, d),
        Command::Coeff(a) => commands::coeff(a, d),
        Command::Genfun(a) => commands::genfun(a, d),
        Command::Selberg(a) => commands::selberg(a, d),
        Command::Verify(a) => commands::verify(a),
        Command::Sample(a) => commands::sample(a),
        Command::Density(a) => commands::density(a, d),
        Command::Remainder(a) => commands::remainder(a, d),
    };
    match result {
        Ok(report) => {
            let argv: Vec<String> = std::env::args().skip(1).collect();
            let text = render::render(&report, name(&cli.command), &argv, cli.format);
            let mut out = std::io::stdout().lock();
            if out
                .write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            ExitCode::from(if report.identity_failure { 2 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
