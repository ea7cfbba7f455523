use std::io::Write;

use charsum::decomposition::{affine, polar};
use charsum::FiniteField;
use serde::Serialize;

use crate::args::{DecomposeArgs, FieldArgs};
use crate::common::{build_ctx, print_json, CliResult};

#[derive(Debug, Serialize)]
struct FieldInfo {
    m: u32,
    n: u32,
    irr_poly: String,
    nu: String,
    theta_relation: &'static str,
}

pub fn field_info(args: &FieldArgs, out: &mut dyn Write) -> CliResult {
    let ctx = build_ctx(args)?;
    print_json(
        out,
        &FieldInfo {
            m: ctx.m(),
            n: ctx.n(),
            irr_poly: ctx.format_poly(),
            nu: ctx.format_elem(ctx.nu()),
            theta_relation: "t^2+t=nu",
        },
    )
}

#[derive(Debug, Serialize)]
struct PolarOut {
    y: String,
    z: String,
}

#[derive(Debug, Serialize)]
struct AffineOut {
    u: String,
    lambda: String,
}

#[derive(Debug, Serialize)]
struct Decomposition {
    m: u32,
    x: String,
    in_subfield: bool,
    in_e: bool,
    in_unit_circle: bool,
    polar: Option<PolarOut>,
    affine: Option<AffineOut>,
    trace: u8,
}

pub fn decompose(args: &DecomposeArgs, out: &mut dyn Write) -> CliResult {
    let ctx = build_ctx(&args.field)?;
    let x = ctx.parse_ext(&args.x)?;
    let ext = ctx.ext();
    let polar = polar(&ctx, x).ok().map(|p| PolarOut {
        y: ctx.format_elem(p.y),
        z: ctx.format_ext(p.z),
    });
    let affine = affine(&ctx, x).ok().map(|a| AffineOut {
        u: ctx.format_elem(a.u),
        lambda: ctx.format_ext(a.lambda),
    });
    print_json(
        out,
        &Decomposition {
            m: ctx.m(),
            x: ctx.format_ext(x),
            in_subfield: x.in_subfield(),
            in_e: x.in_e(),
            in_unit_circle: !x.is_zero() && ext.in_unit_circle(x),
            polar,
            affine,
            trace: ext.trace(x),
        },
    )
}
