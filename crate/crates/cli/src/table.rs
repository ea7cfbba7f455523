use std::io::Write;

use charsum::kloosterman::{kloosterman_all, lw_expected};
use charsum::sums::{qs_brute_all, qs_closed, qs_reduced};
use charsum::weil::{check_closed_domain, weil_c_closed, weil_c_direct};
use charsum::{FieldCtx, FiniteField, Gfm};
use serde::Serialize;

use crate::args::{Format, TableArgs, TableWhat};
use crate::common::{build_ctx, enumerable, print_json, usage, CliResult};

#[derive(Debug, Serialize)]
struct KloostermanRow {
    mu: String,
    k: i64,
}

#[derive(Debug, Serialize)]
struct KloostermanTable {
    m: u32,
    rows: Vec<KloostermanRow>,
    value_set: Vec<i64>,
    lw_expected: Vec<i64>,
    lw_match: bool,
}

#[derive(Debug, Serialize)]
struct WeilRow {
    a: String,
    c_direct: i64,
    c_closed: i64,
    #[serde(rename = "match")]
    matched: bool,
}

#[derive(Debug, Serialize)]
struct QsRow {
    mu: String,
    brute: i64,
    reduced: i64,
    closed: Option<i64>,
    #[serde(rename = "match")]
    matched: Option<bool>,
}

fn shift(args: &TableArgs) -> CliResult<u32> {
    match args.s {
        Some(s) if s >= 1 => Ok(s),
        Some(_) => usage("--s must be positive"),
        None => usage("--s is required for this table"),
    }
}

pub fn run(args: &TableArgs, out: &mut dyn Write) -> CliResult {
    let ctx = build_ctx(&args.field)?;
    let m = ctx.m() as f64;
    match args.what {
        TableWhat::Kloosterman => {
            let ctx = enumerable(ctx, 2.0 * m, args.budget, "table")?;
            kloosterman(&ctx, args.format, out)
        }
        TableWhat::Weil => {
            let s = shift(args)?;
            check_closed_domain(ctx.m(), s)?;
            let ctx = enumerable(ctx, 2.0 * m, args.budget, "table")?;
            weil(&ctx, s, args.format, out)
        }
        TableWhat::Qs => {
            let s = shift(args)?;
            let ctx = enumerable(ctx, 2.0 * m + 1.0, args.budget, "table")?;
            qs(&ctx, s, args.format, out)
        }
    }
}

fn kloosterman(ctx: &FieldCtx, format: Format, out: &mut dyn Write) -> CliResult {
    let values = kloosterman_all(ctx);
    let rows: Vec<KloostermanRow> = ctx
        .elements()
        .zip(&values)
        .map(|(mu, &k)| KloostermanRow {
            mu: ctx.format_elem(mu),
            k,
        })
        .collect();
    let mut value_set = values;
    value_set.sort_unstable();
    value_set.dedup();
    let expected = lw_expected(ctx.m());
    let table = KloostermanTable {
        m: ctx.m(),
        rows,
        lw_match: value_set == expected,
        value_set,
        lw_expected: expected,
    };
    match format {
        Format::Json => print_json(out, &table)?,
        Format::Csv => {
            writeln!(out, "mu,k")?;
            for r in &table.rows {
                writeln!(out, "{},{}", r.mu, r.k)?;
            }
            writeln!(
                out,
                "# value_set={} lw_expected={} lw_match={}",
                join(&table.value_set),
                join(&table.lw_expected),
                table.lw_match
            )?;
        }
    }
    Ok(())
}

fn join(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    parts.join(";")
}

fn weil(ctx: &FieldCtx, s: u32, format: Format, out: &mut dyn Write) -> CliResult {
    let rows = ctx
        .elements()
        .map(|a| {
            let c_direct = weil_c_direct(ctx, Gfm::ONE, a, s);
            let c_closed = weil_c_closed(ctx, Gfm::ONE, a, s)?;
            Ok(WeilRow {
                a: ctx.format_elem(a),
                c_direct,
                c_closed,
                matched: c_direct == c_closed,
            })
        })
        .collect::<CliResult<Vec<_>>>()?;
    match format {
        Format::Json => print_json(out, &rows)?,
        Format::Csv => {
            writeln!(out, "a,C_direct,C_closed,match")?;
            for r in &rows {
                writeln!(out, "{},{},{},{}", r.a, r.c_direct, r.c_closed, r.matched)?;
            }
        }
    }
    Ok(())
}

fn qs(ctx: &FieldCtx, s: u32, format: Format, out: &mut dyn Write) -> CliResult {
    let brute = qs_brute_all(ctx, s)?;
    let rows = ctx
        .elements()
        .map(|mu| {
            let b = brute[mu.bits() as usize];
            let closed = qs_closed(ctx, mu, s).ok();
            Ok(QsRow {
                mu: ctx.format_elem(mu),
                brute: b,
                reduced: qs_reduced(ctx, mu, s)?,
                closed,
                matched: closed.map(|c| c == b),
            })
        })
        .collect::<CliResult<Vec<_>>>()?;
    match format {
        Format::Json => print_json(out, &rows)?,
        Format::Csv => {
            writeln!(out, "mu,brute,reduced,closed,match")?;
            for r in &rows {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    r.mu,
                    r.brute,
                    r.reduced,
                    r.closed.map(|c| c.to_string()).unwrap_or_default(),
                    r.matched.map(|c| c.to_string()).unwrap_or_default()
                )?;
            }
        }
    }
    Ok(())
}
