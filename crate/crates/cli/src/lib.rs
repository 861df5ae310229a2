//! `tropbasis`: command-line access to circuit matroids and their tropical
//! bases.
//!
//! Every subcommand prints one JSON document (or a text summary with
//! `--output text`). Exit codes: 0 computed, 2 usage error, 3 invalid
//! input, 4 resource cap exceeded. Predicate answers live in the payload.

pub mod args;
pub mod commands;
pub mod error;
pub mod files;

use std::io::{Read, Write};

use clap::error::ErrorKind;
use clap::Parser;
use tropbasis_core::Limits;

use args::{Cli, OutputFormat, RunConfig};
use error::{CliError, EXIT_INTERNAL, EXIT_OK, EXIT_USAGE};

impl RunConfig {
    pub fn limits(&self) -> Limits {
        Limits {
            max_support_n: self.max_n as usize,
            max_minor_n: self.max_minor_n as usize,
            force: self.force,
            ..Limits::default()
        }
    }

    pub fn jobs(&self) -> usize {
        self.jobs.map(|j| j as usize).unwrap_or_else(|| {
            std::thread::available_parallelism().map_or(1, |n| n.get())
        })
    }
}

/// Runs one command line and returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let first = e.to_string();
                    let line = first.lines().next().unwrap_or("invalid arguments");
                    let line = line.trim_start_matches("error: ");
                    let _ = writeln!(stderr, "{}", CliError::usage(line));
                    EXIT_USAGE
                }
            };
        }
    };

    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.config.jobs()).build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(stderr, "error[internal]: thread pool: {e}");
            return EXIT_INTERNAL;
        }
    };
    let limits = cli.config.limits();
    let output = cli.config.output;
    // Standard input is drained here, on the calling thread, so that the
    // command body can run on a pool worker.
    let mut input = Vec::new();
    if args.iter().skip(1).any(|a| a == "-") {
        if let Err(e) = stdin.read_to_end(&mut input) {
            let _ = writeln!(stderr, "{}", CliError::input("io", format!("reading standard input: {e}")));
            return error::EXIT_INPUT;
        }
    }
    let result = pool.install(|| commands::execute(cli.command, &limits, &mut input.as_slice()));

    match result {
        Ok(report) => {
            let body = match output {
                OutputFormat::Json => format!("{}\n", report.json),
                OutputFormat::Text => report.text,
            };
            if stdout.write_all(body.as_bytes()).is_err() {
                return EXIT_INTERNAL;
            }
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(stderr, "{e}");
            e.exit_code()
        }
    }
}
