//! `indom`: command-line front end for independent domination polynomials.
//!
//! Exit codes: 0 success, 1 usage error, 2 computation error, 3 when
//! `verify` finds a closed form that disagrees with enumeration.

mod args;
mod commands;
mod input;
mod table;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use indom::enumeration::{ENUMERATION_LIMIT, EXHAUSTIVE_LIMIT};
use indom::parallel::with_workers;

use args::{Cli, Command};
use commands::Output;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Compute(indom::Error),
    Io(String),
}

impl From<indom::Error> for CliError {
    fn from(e: indom::Error) -> Self {
        CliError::Compute(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Io(msg) => f.write_str(msg),
            CliError::Compute(e) => write!(f, "{e}"),
        }
    }
}

pub struct Settings {
    pub tol: f64,
    pub exhaustive_limit: usize,
}

fn dispatch(cli: &Cli, settings: &Settings) -> Result<Output, CliError> {
    match &cli.command {
        Command::Poly(input) => commands::poly(input),
        Command::Ipoly(input) => commands::ipoly(input),
        Command::Roots { input, of } => commands::roots(input, *of, settings),
        Command::Analyze(input) => commands::analyze(input, settings),
        Command::Family { family, format } => commands::family(family, *format),
        Command::Product(args) => commands::product(args),
        Command::Verify(args) => commands::verify(args),
        Command::Construct(args) => commands::construct(args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    if !(cli.tol > 0.0 && cli.tol.is_finite()) {
        eprintln!("error: --tol must be a positive number");
        return ExitCode::from(1);
    }
    if let Some(n) = cli.max_n {
        eprintln!(
            "warning: --max-n {n} replaces the exhaustive-search limit of {EXHAUSTIVE_LIMIT} vertices; \
             searches grow as 2^n and may not finish"
        );
        if n >= ENUMERATION_LIMIT {
            eprintln!("warning: graphs with {ENUMERATION_LIMIT} or more vertices are still rejected");
        }
    }
    let settings = Settings { tol: cli.tol, exhaustive_limit: commands::exhaustive_limit(cli.max_n) };
    let result = with_workers(cli.workers, || dispatch(&cli, &settings));
    match result {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string(&out.json).expect("JSON values serialize"));
            } else {
                print!("{}", out.human);
            }
            let allow = matches!(&cli.command, Command::Verify(v) if v.allow_mismatch);
            if out.mismatch && !allow {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                CliError::Usage(_) => ExitCode::from(1),
                CliError::Compute(_) | CliError::Io(_) => ExitCode::from(2),
            }
        }
    }
}
