mod args;
mod commands;
mod report;

use std::process::ExitCode;

use clap::Parser;
use rexspec::Error;

use args::{Cli, Command};
use report::{emit, Report};

const USER_ERROR: u8 = 2;
const CONSISTENCY_FAILURE: u8 = 1;

fn configure_threads() -> Result<(), Error> {
    let Ok(v) = std::env::var("REXSPEC_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::parameter(format!("REXSPEC_THREADS must be a positive integer, got {v:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Error::parameter(format!("cannot configure threads: {e}")))
}

fn report_error(e: &Error) -> ExitCode {
    match e {
        Error::Admissibility(violations) => {
            eprintln!("error: inadmissible extension");
            for v in violations {
                eprintln!("  - {v}");
            }
        }
        _ => eprintln!("error: {e}"),
    }
    ExitCode::from(if e.is_user_error() { USER_ERROR } else { CONSISTENCY_FAILURE })
}

fn run(cli: &Cli) -> Result<(Report, &args::OutputArgs, bool), Error> {
    Ok(match &cli.command {
        Command::Build(a) => (commands::build(a)?, &a.out, true),
        Command::Spectrum(a) => (commands::spectrum(a)?, &a.out, true),
        Command::Ladder(a) => (commands::ladder(a)?, &a.out, true),
        Command::System(a) => (commands::system(a)?, &a.out, true),
        Command::Unirreps(a) => (commands::unirrep_report(a)?, &a.out, true),
        Command::Zeromodes(a) => (commands::zeromode_report(a)?, &a.out, true),
        Command::Verify(a) => {
            let (r, ok) = commands::verify(a)?;
            (r, &a.out, ok)
        }
        Command::PlotData(a) => (commands::plot_data(a)?, &a.out, true),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        return report_error(&e);
    }
    match run(&cli) {
        Ok((report, out, ok)) => {
            if let Err(e) = emit(&report, out) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(USER_ERROR);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: one or more identity checks failed");
                ExitCode::from(CONSISTENCY_FAILURE)
            }
        }
        Err(e) => report_error(&e),
    }
}
