//! The sums over GF(2^2m), `μ` in GF(2^m):
//!
//! * `p(μ)   = Σ_{a ∉ GF(2)}    χ(μ (a^(2^m) + a) / (a² + a))`
//! * `q(μ)   = Σ_{a ∉ GF(2^m)}  χ(μ (a² + a) / (a^(2^m) + a))`
//! * `q_s(μ) = Σ_{a ∉ GF(2^m)}  χ(μ (a² + a)^(2^s) / (a^(2^m) + a))`
//! * `r(L)   = Σ_a              χ((a^(2^m) + a) L(a))`
//!
//! Each has a brute-force evaluator that enumerates GF(2^2m) directly (no
//! use of the affine decomposition) and a closed or reduced form over GF(2^m).

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FiniteField, Gfm, Gfn};
use crate::kloosterman::kloosterman_direct;
use crate::linearized::LinearizedPoly;
use crate::weil::{check_closed_domain, gold_root_exponent, h_sign, jacobi2, solve_h};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SumMode {
    Brute,
    Closed,
    Reduced,
    /// `p(μ)` as literally printed, `-2 - (1 + k)²`; kept to document the sign error.
    PaperLiteral,
}

impl SumMode {
    pub fn as_str(self) -> &'static str {
        match self {
            SumMode::Brute => "brute",
            SumMode::Closed => "closed",
            SumMode::Reduced => "reduced",
            SumMode::PaperLiteral => "paper-literal",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SumKind {
    P { mu: Gfm },
    Q { mu: Gfm },
    Qs { mu: Gfm, s: u32 },
    R { poly: LinearizedPoly },
}

impl SumKind {
    pub fn name(&self) -> &'static str {
        match self {
            SumKind::P { .. } => "p",
            SumKind::Q { .. } => "q",
            SumKind::Qs { .. } => "qs",
            SumKind::R { .. } => "r",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SumResult {
    pub value: i64,
    pub mode: SumMode,
}

pub fn evaluate(ctx: &FieldCtx, kind: &SumKind, mode: SumMode) -> Result<SumResult> {
    use SumMode::*;
    let value = match (kind, mode) {
        (SumKind::P { mu }, Brute) => p_brute(ctx, *mu)?,
        (SumKind::P { mu }, Closed) => p_closed(ctx, *mu)?,
        (SumKind::P { mu }, PaperLiteral) => p_closed_paper_literal(ctx, *mu)?,
        (SumKind::Q { mu }, Brute) => q_brute(ctx, *mu)?,
        (SumKind::Q { mu }, Closed) => q_closed(ctx, *mu)?,
        (SumKind::Qs { mu, s }, Brute) => qs_brute(ctx, *mu, *s)?,
        (SumKind::Qs { mu, s }, Reduced) => qs_reduced(ctx, *mu, *s)?,
        (SumKind::Qs { mu, s }, Closed) => qs_closed(ctx, *mu, *s)?,
        (SumKind::R { poly }, Brute) => r_brute(ctx, poly)?,
        (SumKind::R { poly }, Closed) => r_closed(ctx, poly),
        (k, m) => {
            return Err(Error::Precondition(format!(
                "mode {} is not available for {}",
                m.as_str(),
                k.name()
            )))
        }
    };
    Ok(SumResult { value, mode })
}

/// Sums `χ_n(term(a))` over every `a` in GF(2^2m) for which `term` is `Some`.
fn ext_sum<F>(ctx: &FieldCtx, term: F) -> Result<i64>
where
    F: Fn(Gfn) -> Result<Option<Gfn>> + Sync,
{
    ctx.ensure_enumerable()?;
    let ext = ctx.ext();
    (0..ext.order())
        .into_par_iter()
        .map(|i| Ok(term(ext.element_at(i))?.map_or(0, |w| ext.chi(w))))
        .sum()
}

/// For sums of the shape `Σ_a χ_n(μ·w(a))`, returns the values for every μ
/// (indexed by encoding) from a single enumeration of `a`.
///
/// `Tr_n(μw) = Tr_m(μ·(w + w̄))` for subfield μ, so a histogram of the
/// relative traces of `w(a)` determines the whole table.
fn ext_sweep<F>(ctx: &FieldCtx, w: F) -> Result<Vec<i64>>
where
    F: Fn(Gfn) -> Result<Option<Gfn>> + Sync,
{
    ctx.ensure_enumerable()?;
    let ext = ctx.ext();
    let size = ctx.order() as usize;
    let hist = (0..ext.order())
        .into_par_iter()
        .try_fold(
            || vec![0i64; size],
            |mut h, i| {
                if let Some(v) = w(ext.element_at(i))? {
                    h[ext.rel_trace(v).bits() as usize] += 1;
                }
                Ok::<_, Error>(h)
            },
        )
        .try_reduce(
            || vec![0i64; size],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                Ok(a)
            },
        )?;
    Ok((0..ctx.order())
        .into_par_iter()
        .map(|mu| {
            let mu = ctx.element_at(mu);
            hist.iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(v, &c)| c * ctx.chi(ctx.mul(mu, ctx.element_at(v as u64))))
                .sum()
        })
        .collect())
}

fn nonzero_denominator(d: Gfn) -> Result<Gfn> {
    if d.is_zero() {
        Err(Error::Internal("zero denominator inside the summation domain".into()))
    } else {
        Ok(d)
    }
}

/// `(a^(2^m) + a) / (a² + a)` for `a` outside GF(2), else `None`.
fn p_argument(ctx: &FieldCtx, a: Gfn) -> Result<Option<Gfn>> {
    let ext = ctx.ext();
    if a == Gfn::ZERO || a == Gfn::ONE {
        return Ok(None);
    }
    let num = ext.add(ext.frobenius(a, ctx.m()), a);
    let den = nonzero_denominator(ext.add(ext.square(a), a))?;
    Ok(Some(ext.div(num, den)?))
}

/// `(a² + a)^(2^s) / (a^(2^m) + a)` for `a` outside GF(2^m), else `None`.
/// `s = 0` gives the summand of `q`.
fn qs_argument(ctx: &FieldCtx, a: Gfn, s: u32) -> Result<Option<Gfn>> {
    let ext = ctx.ext();
    let den = ext.add(ext.frobenius(a, ctx.m()), a);
    if den.is_zero() {
        return Ok(None);
    }
    let num = ext.frobenius(ext.add(ext.square(a), a), s);
    Ok(Some(ext.div(num, den)?))
}

fn require_nonzero(mu: Gfm) -> Result<()> {
    if mu.is_zero() {
        Err(Error::Domain("closed forms need mu != 0"))
    } else {
        Ok(())
    }
}

pub fn p_brute(ctx: &FieldCtx, mu: Gfm) -> Result<i64> {
    let ext = ctx.ext();
    ext_sum(ctx, |a| {
        Ok(p_argument(ctx, a)?.map(|w| ext.scale(mu, w)))
    })
}

/// `p(μ)` for every μ from one enumeration of GF(2^2m).
pub fn p_brute_all(ctx: &FieldCtx) -> Result<Vec<i64>> {
    ext_sweep(ctx, |a| p_argument(ctx, a))
}

/// `p(μ) = (1 + k_m(μ))² - 2`.
pub fn p_closed(ctx: &FieldCtx, mu: Gfm) -> Result<i64> {
    require_nonzero(mu)?;
    let k = kloosterman_direct(ctx, mu, Gfm::ONE);
    Ok((1 + k) * (1 + k) - 2)
}

/// The printed variant `-2 - (1 + k_m(μ))²`, which disagrees with the sum
/// whenever `k_m(μ) != -1`.
pub fn p_closed_paper_literal(ctx: &FieldCtx, mu: Gfm) -> Result<i64> {
    require_nonzero(mu)?;
    let k = kloosterman_direct(ctx, mu, Gfm::ONE);
    Ok(-2 - (1 + k) * (1 + k))
}

pub fn q_brute(ctx: &FieldCtx, mu: Gfm) -> Result<i64> {
    let ext = ctx.ext();
    ext_sum(ctx, |a| Ok(qs_argument(ctx, a, 0)?.map(|w| ext.scale(mu, w))))
}

pub fn q_brute_all(ctx: &FieldCtx) -> Result<Vec<i64>> {
    ext_sweep(ctx, |a| qs_argument(ctx, a, 0))
}

/// `q(μ) = -2^m χ(μ)`.
pub fn q_closed(ctx: &FieldCtx, mu: Gfm) -> Result<i64> {
    require_nonzero(mu)?;
    Ok(-ctx.q() * ctx.chi(mu))
}

pub fn qs_brute(ctx: &FieldCtx, mu: Gfm, s: u32) -> Result<i64> {
    let ext = ctx.ext();
    ext_sum(ctx, |a| Ok(qs_argument(ctx, a, s)?.map(|w| ext.scale(mu, w))))
}

pub fn qs_brute_all(ctx: &FieldCtx, s: u32) -> Result<Vec<i64>> {
    ext_sweep(ctx, |a| qs_argument(ctx, a, s))
}

/// `q_s(μ) = 2^m Σ_{u≠0} χ(μ (u^(2^(s+1)-1) + u^(2^s-1)))`, valid for every
/// `m` and `s`.
///
/// Writing `a = uλ`, the summand becomes `μ(u^(2^(s+1)-1) λ^(2^(s+1)) +
/// u^(2^s-1) λ^(2^s))`, whose absolute trace no longer depends on `λ`.
pub fn qs_reduced(ctx: &FieldCtx, mu: Gfm, s: u32) -> Result<i64> {
    if s == 0 {
        return Err(Error::Precondition("s must be positive".into()));
    }
    let order = ctx.order() as u128 - 1;
    let e_hi = ((1u128 << (s + 1)) - 1) % order.max(1);
    let e_lo = ((1u128 << s) - 1) % order.max(1);
    let inner: i64 = ctx
        .elements()
        .skip(1)
        .map(|u| ctx.chi(ctx.mul(mu, ctx.add(ctx.pow(u, e_hi), ctx.pow(u, e_lo)))))
        .sum();
    Ok(ctx.q() * inner)
}

/// Closed form for odd `m`, `gcd(s, m) = 1`, `μ != 0`: with `t = μ^(1/(2^s+1))`,
/// `-2^m` when `Tr(t) = 0`, otherwise `2^m (χ(h^(2^s+1) + h)·(2/m)·2^((m+1)/2) - 1)`
/// where `t = h^(2^s) + h^(2^(m-s)) + 1`.
///
/// This evaluates `2^m (C(μ, μ) - 1)`. It coincides with `q_s(μ)` for
/// `s = 1`; for `s >= 2` it is the value of the sum with summand
/// `μ (a^(2^s) + a)^(2^s) / (a^(2^m) + a)` instead.
pub fn qs_closed(ctx: &FieldCtx, mu: Gfm, s: u32) -> Result<i64> {
    let m = ctx.m();
    check_closed_domain(m, s)?;
    require_nonzero(mu)?;
    let t = ctx.pow(mu, gold_root_exponent(m, s)? as u128);
    if ctx.trace(t) == 0 {
        return Ok(-ctx.q());
    }
    let h = solve_h(ctx, t, s)?;
    Ok(ctx.q() * (h_sign(ctx, h, s) * jacobi2(m)? * (1i64 << ((m + 1) / 2)) - 1))
}

pub fn r_brute(ctx: &FieldCtx, poly: &LinearizedPoly) -> Result<i64> {
    let ext = ctx.ext();
    ext_sum(ctx, |a| {
        let factor = ext.add(ext.frobenius(a, ctx.m()), a);
        Ok(Some(ext.mul(factor, poly.eval_ext(ctx, a))))
    })
}

/// `r(L) = 2^m Σ_u χ(Σ α_i u^(2^(a_i)+1))`.
pub fn r_closed(ctx: &FieldCtx, poly: &LinearizedPoly) -> i64 {
    let inner: i64 = ctx
        .elements()
        .map(|u| ctx.chi(ctx.mul(u, poly.eval(ctx, u))))
        .sum();
    ctx.q() * inner
}
