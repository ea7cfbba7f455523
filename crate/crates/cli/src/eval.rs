use std::io::Write;

use charsum::sums::{evaluate, SumKind, SumMode};
use charsum::{FieldCtx, Gfm, LinearizedPoly};
use serde::Serialize;

use crate::args::{EvalArgs, EvalMode, Fault, SumName};
use crate::common::{build_ctx, print_json, usage, CliResult, Failure};

#[derive(Debug, Serialize)]
struct EvalOutput {
    sum: &'static str,
    m: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    mu: Option<String>,
    #[serde(rename = "L", skip_serializing_if = "Option::is_none")]
    poly: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    s: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    brute: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reduced: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed: Option<i64>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    paper_literal: bool,
    #[serde(rename = "match", skip_serializing_if = "Option::is_none")]
    matched: Option<bool>,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    documented_discrepancy: bool,
}

pub fn sum_kind(
    ctx: &FieldCtx,
    sum: SumName,
    mu: Option<&str>,
    s: Option<u32>,
    poly: Option<&str>,
) -> CliResult<SumKind> {
    let mu = || -> CliResult<Gfm> {
        match mu {
            Some(h) => Ok(ctx.parse_elem(h)?),
            None => usage("--mu is required for this sum"),
        }
    };
    let s = || -> CliResult<u32> {
        match s {
            Some(s) if s >= 1 => Ok(s),
            Some(_) => usage("--s must be positive"),
            None => usage("--s is required for qs"),
        }
    };
    Ok(match sum {
        SumName::P => SumKind::P { mu: mu()? },
        SumName::Q => SumKind::Q { mu: mu()? },
        SumName::Qs => SumKind::Qs { mu: mu()?, s: s()? },
        SumName::R => match poly {
            Some(text) => SumKind::R {
                poly: LinearizedPoly::parse(ctx, text)?,
            },
            None => return usage("--L is required for r"),
        },
    })
}

pub fn fault_for(sum: SumName) -> Fault {
    match sum {
        SumName::P => Fault::P,
        SumName::Q => Fault::Q,
        SumName::Qs => Fault::Qs,
        SumName::R => Fault::R,
    }
}

pub fn run(args: &EvalArgs, out: &mut dyn Write) -> CliResult {
    let ctx = build_ctx(&args.field)?;
    let kind = sum_kind(
        &ctx,
        args.sum,
        args.mu.as_deref(),
        args.s,
        args.linearized.as_deref(),
    )?;
    if args.paper_literal && args.sum != SumName::P {
        return usage("--paper-literal only applies to p");
    }
    let wants_brute = matches!(args.mode, EvalMode::Brute | EvalMode::Both);
    let closed_mode = if args.paper_literal {
        SumMode::PaperLiteral
    } else {
        SumMode::Closed
    };
    let fault = (args.inject_fault == Some(fault_for(args.sum))) as i64;

    let brute = wants_brute
        .then(|| evaluate(&ctx, &kind, SumMode::Brute))
        .transpose()?
        .map(|r| r.value);
    let reduced = (args.mode == EvalMode::Reduced)
        .then(|| evaluate(&ctx, &kind, SumMode::Reduced))
        .transpose()?
        .map(|r| r.value);
    let closed = matches!(args.mode, EvalMode::Closed | EvalMode::Both)
        .then(|| evaluate(&ctx, &kind, closed_mode))
        .transpose()?
        .map(|r| r.value + fault);
    let matched = match (brute, closed) {
        (Some(b), Some(c)) => Some(b == c),
        _ => None,
    };
    // the printed p formula is known to disagree; only a perturbed value fails
    let documented = args.paper_literal && fault == 0 && matched == Some(false);

    let (mu, poly, s) = match &kind {
        SumKind::P { mu } | SumKind::Q { mu } => (Some(ctx.format_elem(*mu)), None, None),
        SumKind::Qs { mu, s } => (Some(ctx.format_elem(*mu)), None, Some(*s)),
        SumKind::R { poly } => (None, Some(poly.format(&ctx)), None),
    };
    print_json(
        out,
        &EvalOutput {
            sum: kind.name(),
            m: ctx.m(),
            mu,
            poly,
            s,
            brute,
            reduced,
            closed,
            paper_literal: args.paper_literal,
            matched,
            documented_discrepancy: documented,
        },
    )?;
    if matched == Some(false) && !documented {
        return Err(Failure::Mismatch);
    }
    Ok(())
}
