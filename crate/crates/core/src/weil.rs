//! Weil sums `C(a, b) = Σ_{x in GF(2^m)} χ(a x^(2^s+1) + b x)` and their
//! closed forms for odd `m` with `gcd(s, m) = 1`.

use crate::error::{Error, Result};
use crate::field::{exp_inverse, FieldCtx, FiniteField, Gfm};
use crate::gf2linear::BitMatrix;

/// `x^(2^s + 1)`.
#[inline]
pub fn gold_power(ctx: &FieldCtx, x: Gfm, s: u32) -> Gfm {
    ctx.mul(ctx.frobenius(x, s % ctx.m()), x)
}

pub fn weil_c_direct(ctx: &FieldCtx, a: Gfm, b: Gfm, s: u32) -> i64 {
    ctx.elements()
        .map(|x| ctx.chi(ctx.add(ctx.mul(a, gold_power(ctx, x, s)), ctx.mul(b, x))))
        .sum()
}

pub(crate) fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Checks the domain of the closed forms: `m` odd, `s >= 1`, `gcd(s, m) = 1`.
pub fn check_closed_domain(m: u32, s: u32) -> Result<()> {
    if m % 2 == 0 {
        return Err(Error::Precondition(format!("m = {m} must be odd")));
    }
    if s == 0 || gcd(s, m) != 1 {
        return Err(Error::Precondition(format!(
            "s = {s} must be positive and coprime to m = {m}"
        )));
    }
    Ok(())
}

/// Jacobi symbol `(2/m)` for odd `m`: +1 if `m ≡ ±1 (mod 8)`, -1 if `m ≡ ±3`.
pub fn jacobi2(m: u32) -> Result<i64> {
    match m % 8 {
        1 | 7 => Ok(1),
        3 | 5 => Ok(-1),
        _ => Err(Error::Precondition(format!("m = {m} must be odd"))),
    }
}

/// `C(1, 1) = (2/m)·2^((m+1)/2)`.
pub fn weil_c11_closed(m: u32, s: u32) -> Result<i64> {
    check_closed_domain(m, s)?;
    Ok(jacobi2(m)? << ((m + 1) / 2))
}

/// `b / a^(1/(2^s+1))`, so that `C(a, b) = C(1, b')`.
pub fn weil_reduce(ctx: &FieldCtx, a: Gfm, b: Gfm, s: u32) -> Result<Gfm> {
    check_closed_domain(ctx.m(), s)?;
    if a.is_zero() {
        return Err(Error::Domain("weil_reduce needs a != 0"));
    }
    let root = ctx.pow(a, gold_root_exponent(ctx.m(), s)? as u128);
    ctx.div(b, root)
}

/// `e` with `e·(2^s + 1) ≡ 1 (mod 2^m - 1)`.
pub fn gold_root_exponent(m: u32, s: u32) -> Result<u64> {
    let modulus = (1u64 << m) - 1;
    let gold = ((1u128 << s) + 1) % modulus as u128;
    exp_inverse(gold as u64, modulus)
}

/// The GF(2)-linear map `h -> h^(2^s) + h^(2^(m-s))` as a bit matrix.
pub fn gold_linear_map(ctx: &FieldCtx, s: u32) -> BitMatrix {
    let m = ctx.m();
    let s = s % m;
    let images: Vec<u64> = (0..m)
        .map(|j| {
            let h = ctx.element_at(1u64 << j);
            ctx.add(ctx.frobenius(h, s), ctx.frobenius(h, m - s)).bits()
        })
        .collect();
    BitMatrix::from_columns(&images, m)
}

/// Solves `h^(2^s) + h^(2^(m-s)) + 1 = t` for `Tr(t) = 1`. The two solutions
/// are `h` and `h + 1`; the smaller encoding is returned.
pub fn solve_h(ctx: &FieldCtx, t: Gfm, s: u32) -> Result<Gfm> {
    check_closed_domain(ctx.m(), s)?;
    if ctx.trace(t) != 1 {
        return Err(Error::Domain("solve_h needs Tr(t) = 1"));
    }
    let target = ctx.add(t, Gfm::ONE);
    let sol = gold_linear_map(ctx, s)
        .solve(target.bits())
        .ok_or_else(|| Error::Internal("trace-zero target outside the image".into()))?;
    if sol.kernel != [1] {
        return Err(Error::Internal(format!(
            "kernel of the linear map is {:?}, expected {{0, 1}}",
            sol.kernel
        )));
    }
    Ok(ctx.element_at(sol.particular.min(sol.particular ^ 1)))
}

/// `χ(h^(2^s+1) + h)`, the sign attached to a solution of [`solve_h`].
pub fn h_sign(ctx: &FieldCtx, h: Gfm, s: u32) -> i64 {
    ctx.chi(ctx.add(gold_power(ctx, h, s), h))
}

pub fn weil_c_closed(ctx: &FieldCtx, a: Gfm, b: Gfm, s: u32) -> Result<i64> {
    check_closed_domain(ctx.m(), s)?;
    if a.is_zero() {
        // pure additive character sum
        return Ok(if b.is_zero() { ctx.q() } else { 0 });
    }
    let b = weil_reduce(ctx, a, b, s)?;
    if ctx.trace(b) == 0 {
        return Ok(0);
    }
    let h = solve_h(ctx, b, s)?;
    Ok(h_sign(ctx, h, s) * weil_c11_closed(ctx.m(), s)?)
}

/// Value counts of `C(1, ·)` and of the pairs `(Tr(h^(2^s+1)), Tr(h))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountReport {
    pub m_plus: u64,
    pub m_minus: u64,
    pub n00: u64,
    pub n01: u64,
    pub n10: u64,
    pub n11: u64,
}

pub fn counts_closed(m: u32, s: u32) -> Result<CountReport> {
    check_closed_domain(m, s)?;
    if m < 3 {
        return Err(Error::Precondition("counts need m >= 3".into()));
    }
    let base = 1i64 << (m - 2);
    let delta = jacobi2(m)? << ((m - 3) / 2);
    let plus = (base + delta) as u64;
    let minus = (base - delta) as u64;
    Ok(CountReport {
        m_plus: plus,
        m_minus: minus,
        n00: plus,
        n11: plus,
        n01: minus,
        n10: minus,
    })
}

pub fn counts_direct(ctx: &FieldCtx, s: u32) -> Result<CountReport> {
    let c11 = weil_c11_closed(ctx.m(), s)?;
    let mut r = CountReport {
        m_plus: 0,
        m_minus: 0,
        n00: 0,
        n01: 0,
        n10: 0,
        n11: 0,
    };
    for a in ctx.elements() {
        match weil_c_direct(ctx, Gfm::ONE, a, s) {
            0 => {}
            v if v == c11 => r.m_plus += 1,
            v if v == -c11 => r.m_minus += 1,
            v => {
                return Err(Error::Internal(format!(
                    "C(1, {:#x}) = {v} is neither 0 nor ±{}",
                    a.bits(),
                    c11.abs()
                )))
            }
        }
    }
    for h in ctx.elements() {
        match (ctx.trace(gold_power(ctx, h, s)), ctx.trace(h)) {
            (0, 0) => r.n00 += 1,
            (0, _) => r.n01 += 1,
            (_, 0) => r.n10 += 1,
            _ => r.n11 += 1,
        }
    }
    Ok(r)
}
