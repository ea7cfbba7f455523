//! The `charsum` command line: evaluation, verification sweeps, tables and
//! timings for the exponential sums in the `charsum` library.

mod args;
mod bench;
mod common;
mod eval;
mod info;
mod table;
mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::sync::OnceLock;

use clap::Parser;

use crate::args::{Cli, Command};
use crate::common::{CliResult, Failure};

pub const EXIT_OK: u8 = 0;
pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Sizes the global rayon pool from `CHARSUM_THREADS`, once per process.
fn configure_threads() -> CliResult {
    static CONFIGURED: OnceLock<Result<(), String>> = OnceLock::new();
    CONFIGURED
        .get_or_init(|| {
            let Ok(value) = std::env::var("CHARSUM_THREADS") else {
                return Ok(());
            };
            let n: usize = value
                .parse()
                .map_err(|_| format!("CHARSUM_THREADS must be a number, got {value:?}"))?;
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
                .map_err(|e| e.to_string())
        })
        .clone()
        .map_err(Failure::Usage)
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> CliResult {
    configure_threads()?;
    match &cli.command {
        Command::FieldInfo(a) => info::field_info(a, out),
        Command::Eval(a) => eval::run(a, out),
        Command::Verify(a) => verify::run(a, out),
        Command::Table(a) => table::run(a, out),
        Command::Bench(a) => bench::run(a, out),
        Command::Decompose(a) => info::decompose(a, out),
    }
}

/// Runs the command line given by `args` (program name first) and returns
/// the exit status: 0 verified, 1 mismatch, 2 usage or configuration error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            if code == 0 {
                let _ = write!(out, "{}", e.render());
                return EXIT_OK;
            }
            let _ = write!(err, "{}", e.render());
            return EXIT_USAGE;
        }
    };
    let result = dispatch(&cli, out);
    let _ = out.flush();
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Mismatch) => {
            let _ = writeln!(err, "error: mismatch between evaluators");
            EXIT_MISMATCH
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}
