use std::io::Write;
use std::time::Instant;

use charsum::sums::{evaluate, SumMode};
use serde::Serialize;

use crate::args::{BenchArgs, SumName};
use crate::common::{build_ctx, enumerable, print_json, usage, CliResult, Failure};
use crate::eval::sum_kind;

#[derive(Debug, Default, Serialize)]
struct Timings {
    brute: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    reduced: Option<f64>,
    closed: f64,
}

#[derive(Debug, Serialize)]
struct BenchOutput {
    sum: &'static str,
    m: u32,
    reps: u32,
    timings_ms: Timings,
    brute: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    reduced: Option<i64>,
    closed: i64,
    speedup_closed: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    speedup_reduced: Option<f64>,
    agree: bool,
}

/// Best of `reps` runs, in milliseconds.
fn time<T>(reps: u32, mut f: impl FnMut() -> CliResult<T>) -> CliResult<(f64, T)> {
    let mut best = f64::INFINITY;
    let mut out = None;
    for _ in 0..reps {
        let start = Instant::now();
        let v = f()?;
        best = best.min(start.elapsed().as_secs_f64() * 1e3);
        out = Some(v);
    }
    Ok((best, out.expect("reps > 0")))
}

pub fn run(args: &BenchArgs, out: &mut dyn Write) -> CliResult {
    if args.reps == 0 {
        return usage("--reps must be at least 1");
    }
    let ctx = build_ctx(&args.field)?;
    let log2 = 2.0 * ctx.m() as f64;
    let ctx = enumerable(ctx, log2, args.budget, "bench")?;
    let kind = sum_kind(
        &ctx,
        args.sum,
        Some(&args.mu),
        args.s,
        Some(&args.linearized),
    )?;
    let run = |mode| -> CliResult<i64> { Ok(evaluate(&ctx, &kind, mode)?.value) };

    let (t_brute, brute) = time(args.reps, || run(SumMode::Brute))?;
    let (t_closed, closed) = time(args.reps, || run(SumMode::Closed))?;
    let reduced = if args.sum == SumName::Qs {
        Some(time(args.reps, || run(SumMode::Reduced))?)
    } else {
        None
    };

    let agree = brute == closed && reduced.is_none_or(|(_, v)| v == brute);
    let report = BenchOutput {
        sum: kind.name(),
        m: ctx.m(),
        reps: args.reps,
        timings_ms: Timings {
            brute: t_brute,
            reduced: reduced.map(|(t, _)| t),
            closed: t_closed,
        },
        brute,
        reduced: reduced.map(|(_, v)| v),
        closed,
        speedup_closed: t_brute / t_closed.max(1e-6),
        speedup_reduced: reduced.map(|(t, _)| t_brute / t.max(1e-6)),
        agree,
    };
    print_json(out, &report)?;
    if agree {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}
