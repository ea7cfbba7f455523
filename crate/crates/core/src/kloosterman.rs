//! Kloosterman sums `k_m(a, b) = Σ_{x≠0} χ(a x + b/x)` over GF(2^m), their
//! lifts to GF(2^(ms)), and the Lachaud–Wolfmann value set.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{BinaryField, FieldCtx, FiniteField, Gfm};

/// Default cap on the degree of a lifted field enumerated directly.
pub const DEFAULT_LIFT_BUDGET: u32 = 20;

pub fn kloosterman_direct(ctx: &FieldCtx, a: Gfm, b: Gfm) -> i64 {
    ctx.elements()
        .skip(1)
        .map(|x| {
            let inv = ctx.inv(x).expect("x is nonzero");
            ctx.chi(ctx.add(ctx.mul(a, x), ctx.mul(b, inv)))
        })
        .sum()
}

/// `k_m(a) = k_m(a, 1)` for every `a`, indexed by encoding.
pub fn kloosterman_all(ctx: &FieldCtx) -> Vec<i64> {
    let xs: Vec<(Gfm, Gfm)> = ctx
        .elements()
        .skip(1)
        .map(|x| (x, ctx.inv(x).expect("x is nonzero")))
        .collect();
    (0..ctx.order())
        .into_par_iter()
        .map(|i| {
            let a = ctx.element_at(i);
            xs.iter()
                .map(|&(x, inv)| ctx.chi(ctx.add(ctx.mul(a, x), inv)))
                .sum()
        })
        .collect()
}

/// `k_m^(s)(a) = Σ_{γ in GF(2^(ms))*} χ(aγ + 1/γ)` by direct enumeration.
pub fn kloosterman_lift_direct(ctx: &FieldCtx, a: Gfm, s: u32) -> Result<i64> {
    kloosterman_lift_direct_with_budget(ctx, a, s, DEFAULT_LIFT_BUDGET)
}

pub fn kloosterman_lift_direct_with_budget(
    ctx: &FieldCtx,
    a: Gfm,
    s: u32,
    budget: u32,
) -> Result<i64> {
    if s == 0 {
        return Err(Error::Precondition("lift degree s must be positive".into()));
    }
    let k = ctx.m() * s;
    if k > budget {
        return Err(Error::Budget {
            log2_terms: k,
            budget,
        });
    }
    let lift = BinaryField::new(k, None)?;
    let embed = SubfieldEmbedding::new(ctx, &lift)?;
    let a = embed.map(a);
    Ok((1..lift.order())
        .into_par_iter()
        .map(|g| {
            let inv = lift.inv(g).expect("g is nonzero");
            lift.chi(lift.add(lift.mul(a, g), inv))
        })
        .sum())
}

/// Field embedding GF(2^m) -> GF(2^(ms)) determined by a root of the base
/// field's modulus.
#[derive(Debug, Clone)]
pub struct SubfieldEmbedding<'a> {
    lift: &'a BinaryField,
    // images of x^0, x^1, ..., x^(m-1)
    basis: Vec<u64>,
}

impl<'a> SubfieldEmbedding<'a> {
    pub fn new(ctx: &FieldCtx, lift: &'a BinaryField) -> Result<Self> {
        if lift.degree() % ctx.m() != 0 {
            return Err(Error::Precondition(format!(
                "GF(2^{}) is not a subfield of GF(2^{})",
                ctx.m(),
                lift.degree()
            )));
        }
        let root = (0..lift.order())
            .find(|&r| lift.eval_poly(ctx.irr_poly(), r) == 0)
            .ok_or_else(|| Error::Internal("no root of the base modulus in the lift".into()))?;
        let basis = (0..ctx.m()).map(|i| lift.pow(root, i as u128)).collect();
        Ok(SubfieldEmbedding { lift, basis })
    }

    pub fn map(&self, a: Gfm) -> u64 {
        self.basis
            .iter()
            .enumerate()
            .filter(|(i, _)| (a.bits() >> i) & 1 == 1)
            .fold(0u64, |acc, (_, &b)| self.lift.add(acc, b))
    }
}

/// Lift recursion `k^(s) = -k^(s-1)·k^(1) - 2^m·k^(s-2)` with `k^(0) = -2`
/// and `k^(1) = k_m(a)`.
///
/// The recursion comes from the two Frobenius eigenvalues of the Kloosterman
/// curve and does not describe the degenerate sum at `a = 0`, where every
/// lift equals -1.
pub fn kloosterman_lift_recursive(ctx: &FieldCtx, a: Gfm, s: u32) -> i64 {
    let k1 = kloosterman_direct(ctx, a, Gfm::ONE);
    let q = ctx.q();
    let (mut prev, mut cur) = (-2i64, k1);
    if s == 0 {
        return prev;
    }
    for _ in 1..s {
        (prev, cur) = (cur, -cur * k1 - q * prev);
    }
    cur
}

/// Sorted distinct values of `k_m(λ)` over all λ in GF(2^m).
pub fn lw_value_set(ctx: &FieldCtx) -> Vec<i64> {
    let mut v = kloosterman_all(ctx);
    v.sort_unstable();
    v.dedup();
    v
}

/// Integers `t ≡ -1 (mod 4)` with `|t| <= 2^(m/2 + 1)`, i.e. `t² <= 2^(m+2)`.
pub fn lw_expected(m: u32) -> Vec<i64> {
    let bound_sq = 1i128 << (m + 2);
    let reach = 1i64 << (m / 2 + 2);
    (-reach..=reach)
        .filter(|t| t.rem_euclid(4) == 3 && (*t as i128) * (*t as i128) <= bound_sq)
        .collect()
}
