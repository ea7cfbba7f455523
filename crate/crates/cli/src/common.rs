use std::fmt;
use std::io::{self, Write};

use charsum::field::parse_hex;
use charsum::{Error, FieldCtx};

use crate::args::FieldArgs;

/// Exit statuses: 0 verified, 1 mathematical mismatch, 2 usage or configuration.
#[derive(Debug)]
pub enum Failure {
    Mismatch,
    Usage(String),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Mismatch => write!(f, "mismatch between evaluators"),
            Failure::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("write failed: {e}"))
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Usage(format!("serialization failed: {e}"))
    }
}

pub type CliResult<T = ()> = Result<T, Failure>;

pub fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(Failure::Usage(msg.into()))
}

pub fn build_ctx(args: &FieldArgs) -> CliResult<FieldCtx> {
    let poly = args.poly.as_deref().map(parse_hex).transpose()?;
    Ok(FieldCtx::new(args.m, poly)?)
}

/// Refuses work above `2^budget` enumerated terms.
pub fn check_budget(log2_terms: f64, budget: u32, what: &str) -> CliResult {
    if log2_terms > budget as f64 {
        return usage(format!(
            "{what}: about 2^{log2_terms:.1} terms exceeds the budget 2^{budget} (raise --budget)"
        ));
    }
    Ok(())
}

/// Brute evaluators over GF(2^2m) need the enumeration guard lifted for m > 20.
pub fn enumerable(ctx: FieldCtx, log2_terms: f64, budget: u32, what: &str) -> CliResult<FieldCtx> {
    check_budget(log2_terms, budget, what)?;
    Ok(ctx.allow_large_enumeration())
}

pub fn print_json<T: serde::Serialize>(out: &mut dyn Write, value: &T) -> CliResult {
    writeln!(out, "{}", serde_json::to_string_pretty(value)?)?;
    Ok(())
}
