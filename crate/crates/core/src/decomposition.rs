//! Polar decomposition `x = y·z` (`y` in GF(2^m)*, `z` on the unit circle)
//! and affine decomposition `x = u·λ` (`u` in GF(2^m)*, `λ` in E) of
//! elements of GF(2^2m).

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FiniteField, Gfm, Gfn};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolarPair {
    pub y: Gfm,
    pub z: Gfn,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AffinePair {
    pub u: Gfm,
    pub lambda: Gfn,
}

/// `y = x^((2^m+1)·2^(m-1))`, `z = x^((2^m-1)·2^(m-1))`.
pub fn polar(ctx: &FieldCtx, x: Gfn) -> Result<PolarPair> {
    if x.is_zero() {
        return Err(Error::Domain("polar decomposition of zero"));
    }
    let ext = ctx.ext();
    let q = 1u128 << ctx.m();
    let half = q >> 1;
    let y = ext.pow(x, (q + 1) * half);
    let z = ext.pow(x, (q - 1) * half);
    let y = ext
        .to_subfield(y)
        .ok_or_else(|| Error::Internal("polar y component left the subfield".into()))?;
    Ok(PolarPair { y, z })
}

/// Defined for `x` outside GF(2^m): `u = x + x^(2^m)`, `λ = x / u`.
pub fn affine(ctx: &FieldCtx, x: Gfn) -> Result<AffinePair> {
    if x.in_subfield() {
        return Err(Error::Domain("affine decomposition needs x outside GF(2^m)"));
    }
    let ext = ctx.ext();
    let u = ext.rel_trace(x);
    let lambda = ext.scale(ctx.inv(u)?, x);
    debug_assert!(lambda.in_e());
    Ok(AffinePair { u, lambda })
}

impl PolarPair {
    pub fn recompose(&self, ctx: &FieldCtx) -> Gfn {
        ctx.ext().scale(self.y, self.z)
    }
}

impl AffinePair {
    pub fn recompose(&self, ctx: &FieldCtx) -> Gfn {
        ctx.ext().scale(self.u, self.lambda)
    }
}

/// `σ(λ) = λ·λ̄` for `λ` in E; the image always has trace one.
pub fn sigma(ctx: &FieldCtx, lambda: Gfn) -> Result<Gfm> {
    if !lambda.in_e() {
        return Err(Error::Domain("sigma is defined on E only"));
    }
    Ok(ctx.ext().norm(lambda))
}

/// The affine subspace E = θ + GF(2^m), in encoding order of the offset.
pub fn e_elements(ctx: &FieldCtx) -> impl Iterator<Item = Gfn> + '_ {
    ctx.elements().map(|w| Gfn::new(w, Gfm::ONE))
}

/// `{v in GF(2^m) : Tr(v) = 1}` in increasing encoding order.
pub fn trace_one_set(ctx: &FieldCtx) -> Vec<Gfm> {
    ctx.elements().filter(|&v| ctx.trace(v) == 1).collect()
}
