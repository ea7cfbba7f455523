use super::{format_hex, parse_hex, BinaryField, FiniteField};
use crate::error::{Error, Result};

/// Enumerations over GF(2^2m) refuse larger `m` unless explicitly allowed.
pub const MAX_ENUMERATION_M: u32 = 20;

/// Element of the base field GF(2^m) in polynomial basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Gfm(pub(crate) u64);

impl Gfm {
    pub const ZERO: Gfm = Gfm(0);
    pub const ONE: Gfm = Gfm(1);

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Element `c0 + c1·θ` of GF(2^2m).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Gfn {
    pub c0: Gfm,
    pub c1: Gfm,
}

impl Gfn {
    pub const ZERO: Gfn = Gfn {
        c0: Gfm::ZERO,
        c1: Gfm::ZERO,
    };
    pub const ONE: Gfn = Gfn {
        c0: Gfm::ONE,
        c1: Gfm::ZERO,
    };
    /// The tower generator θ.
    pub const THETA: Gfn = Gfn {
        c0: Gfm::ZERO,
        c1: Gfm::ONE,
    };

    pub fn new(c0: Gfm, c1: Gfm) -> Self {
        Gfn { c0, c1 }
    }

    pub fn is_zero(self) -> bool {
        self.c0.is_zero() && self.c1.is_zero()
    }

    /// True iff the element lies in the subfield GF(2^m).
    pub fn in_subfield(self) -> bool {
        self.c1.is_zero()
    }

    /// True iff `x^(2^m) + x = 1`.
    pub fn in_e(self) -> bool {
        self.c1 == Gfm::ONE
    }
}

impl From<Gfm> for Gfn {
    fn from(c0: Gfm) -> Self {
        Gfn { c0, c1: Gfm::ZERO }
    }
}

/// GF(2^m) together with its quadratic extension GF(2^m)(θ), θ² + θ = ν,
/// where `Tr(ν) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldCtx {
    base: BinaryField,
    nu: Gfm,
    allow_large: bool,
}

impl FieldCtx {
    /// Builds the context for GF(2^m). Defaults: the irreducible polynomial
    /// and the trace-one `ν` with the smallest integer encodings.
    pub fn new(m: u32, irr_poly: Option<u64>) -> Result<Self> {
        let base = BinaryField::new(m, irr_poly)?;
        let nu = (0..base.order())
            .find(|&v| base.trace(v) == 1)
            .map(Gfm)
            .expect("trace is onto GF(2)");
        Ok(FieldCtx {
            base,
            nu,
            allow_large: false,
        })
    }

    /// Replaces `ν`; it must have absolute trace 1.
    pub fn with_nu(mut self, nu: u64) -> Result<Self> {
        let nu = self.elem(nu)?;
        if self.trace(nu) != 1 {
            return Err(Error::NuTraceZero(nu.0));
        }
        self.nu = nu;
        Ok(self)
    }

    /// Lifts the `m <= MAX_ENUMERATION_M` guard on GF(2^2m) enumerations.
    pub fn allow_large_enumeration(mut self) -> Self {
        self.allow_large = true;
        self
    }

    pub fn m(&self) -> u32 {
        self.base.degree()
    }

    pub fn n(&self) -> u32 {
        2 * self.m()
    }

    pub fn irr_poly(&self) -> u64 {
        self.base.modulus()
    }

    pub fn nu(&self) -> Gfm {
        self.nu
    }

    pub fn trace_mask(&self) -> u64 {
        self.base.trace_mask()
    }

    pub fn base(&self) -> &BinaryField {
        &self.base
    }

    /// `2^m`, the size of the base field.
    pub fn q(&self) -> i64 {
        1i64 << self.m()
    }

    pub fn ensure_enumerable(&self) -> Result<()> {
        if self.m() > MAX_ENUMERATION_M && !self.allow_large {
            return Err(Error::Budget {
                log2_terms: self.n(),
                budget: 2 * MAX_ENUMERATION_M,
            });
        }
        Ok(())
    }

    pub fn elem(&self, bits: u64) -> Result<Gfm> {
        self.base.check(bits).map(Gfm)
    }

    pub fn ext_elem(&self, c0: u64, c1: u64) -> Result<Gfn> {
        Ok(Gfn::new(self.elem(c0)?, self.elem(c1)?))
    }

    /// The quadratic extension viewed as a field in its own right.
    pub fn ext(&self) -> Ext<'_> {
        Ext { ctx: self }
    }

    pub fn format_elem(&self, x: Gfm) -> String {
        format_hex(x.0, self.m())
    }

    pub fn format_ext(&self, x: Gfn) -> String {
        format!("{}+{}t", self.format_elem(x.c0), self.format_elem(x.c1))
    }

    pub fn format_poly(&self) -> String {
        format_hex(self.irr_poly(), self.m() + 1)
    }

    pub fn parse_elem(&self, s: &str) -> Result<Gfm> {
        self.elem(parse_hex(s)?)
    }

    /// Parses `"<c0>+<c1>t"` or a bare subfield element `"<c0>"`.
    pub fn parse_ext(&self, s: &str) -> Result<Gfn> {
        let s = s.trim();
        match s.split_once('+') {
            Some((c0, c1)) => {
                let c1 = c1
                    .strip_suffix('t')
                    .ok_or_else(|| Error::Parse(format!("expected '<c0>+<c1>t', got {s:?}")))?;
                Ok(Gfn::new(self.parse_elem(c0)?, self.parse_elem(c1)?))
            }
            None => Ok(self.parse_elem(s)?.into()),
        }
    }
}

impl FiniteField for FieldCtx {
    type Elem = Gfm;

    fn degree(&self) -> u32 {
        self.base.degree()
    }

    fn zero(&self) -> Gfm {
        Gfm::ZERO
    }

    fn one(&self) -> Gfm {
        Gfm::ONE
    }

    #[inline]
    fn add(&self, a: Gfm, b: Gfm) -> Gfm {
        Gfm(a.0 ^ b.0)
    }

    #[inline]
    fn mul(&self, a: Gfm, b: Gfm) -> Gfm {
        Gfm(self.base.mul(a.0, b.0))
    }

    fn inv(&self, a: Gfm) -> Result<Gfm> {
        self.base.inv(a.0).map(Gfm)
    }

    #[inline]
    fn trace(&self, a: Gfm) -> u8 {
        self.base.trace(a.0)
    }

    fn element_at(&self, index: u64) -> Gfm {
        Gfm(self.base.element_at(index))
    }

    fn index_of(&self, a: Gfm) -> u64 {
        a.0
    }
}

/// Arithmetic in GF(2^2m) = GF(2^m)(θ).
#[derive(Debug, Clone, Copy)]
pub struct Ext<'a> {
    ctx: &'a FieldCtx,
}

impl<'a> Ext<'a> {
    pub fn ctx(&self) -> &'a FieldCtx {
        self.ctx
    }

    /// `x^(2^m)`: since Tr(ν) = 1, θ^(2^m) = θ + 1.
    #[inline]
    pub fn conjugate(&self, x: Gfn) -> Gfn {
        Gfn::new(self.ctx.add(x.c0, x.c1), x.c1)
    }

    /// `x + x^(2^m)`.
    #[inline]
    pub fn rel_trace(&self, x: Gfn) -> Gfm {
        x.c1
    }

    /// `x · x^(2^m)`.
    pub fn norm(&self, x: Gfn) -> Gfm {
        let p = self.mul(x, self.conjugate(x));
        debug_assert!(p.in_subfield());
        p.c0
    }

    /// Multiplies by a subfield scalar.
    #[inline]
    pub fn scale(&self, u: Gfm, x: Gfn) -> Gfn {
        Gfn::new(self.ctx.mul(u, x.c0), self.ctx.mul(u, x.c1))
    }

    /// `Some(c0)` when `x` lies in GF(2^m).
    pub fn to_subfield(&self, x: Gfn) -> Option<Gfm> {
        x.in_subfield().then_some(x.c0)
    }

    /// True iff `x^(2^m + 1) = 1`.
    pub fn in_unit_circle(&self, x: Gfn) -> bool {
        self.norm(x) == Gfm::ONE
    }
}

impl FiniteField for Ext<'_> {
    type Elem = Gfn;

    fn degree(&self) -> u32 {
        self.ctx.n()
    }

    fn zero(&self) -> Gfn {
        Gfn::ZERO
    }

    fn one(&self) -> Gfn {
        Gfn::ONE
    }

    #[inline]
    fn add(&self, a: Gfn, b: Gfn) -> Gfn {
        Gfn::new(self.ctx.add(a.c0, b.c0), self.ctx.add(a.c1, b.c1))
    }

    #[inline]
    fn mul(&self, a: Gfn, b: Gfn) -> Gfn {
        let f = self.ctx;
        let lo = f.mul(a.c0, b.c0);
        let hi = f.mul(a.c1, b.c1);
        // (a0 + a1)(b0 + b1) - a0b0 - a1b1 = a0b1 + a1b0
        let mid = f.add(f.mul(f.add(a.c0, a.c1), f.add(b.c0, b.c1)), f.add(lo, hi));
        Gfn::new(f.add(lo, f.mul(hi, f.nu)), f.add(mid, hi))
    }

    fn inv(&self, a: Gfn) -> Result<Gfn> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.ctx.inv(self.norm(a))?;
        Ok(self.scale(n, self.conjugate(a)))
    }

    /// Transitivity: Tr_1^n = Tr_1^m ∘ Tr_m^n.
    #[inline]
    fn trace(&self, a: Gfn) -> u8 {
        self.ctx.trace(self.rel_trace(a))
    }

    fn element_at(&self, index: u64) -> Gfn {
        let m = self.ctx.m();
        let mask = (1u64 << m) - 1;
        Gfn::new(Gfm(index & mask), Gfm(index >> m))
    }

    fn index_of(&self, a: Gfn) -> u64 {
        a.c0.0 | (a.c1.0 << self.ctx.m())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(m: u32) -> FieldCtx {
        FieldCtx::new(m, None).unwrap()
    }

    #[test]
    fn defaults() {
        let c2 = ctx(2);
        assert_eq!(c2.irr_poly(), 0x7);
        assert_eq!(c2.nu(), Gfm(0x2));
        let c3 = ctx(3);
        assert_eq!(c3.irr_poly(), 0xb);
        assert_eq!(c3.nu(), Gfm::ONE);
        assert_eq!(c3.n(), 6);
        assert!(FieldCtx::new(0, None).is_err());
    }

    #[test]
    fn with_nu_requires_trace_one() {
        assert_eq!(ctx(2).with_nu(1), Err(Error::NuTraceZero(1)));
        assert_eq!(ctx(2).with_nu(3).unwrap().nu(), Gfm(3));
    }

    #[test]
    fn theta_relations() {
        let c = ctx(3);
        let e = c.ext();
        assert_eq!(e.square(Gfn::THETA), Gfn::new(c.nu(), Gfm::ONE));
        assert_eq!(e.conjugate(Gfn::THETA), Gfn::new(Gfm::ONE, Gfm::ONE));
        assert_eq!(e.frobenius(Gfn::THETA, c.m()), e.conjugate(Gfn::THETA));
        let u = Gfn::from(Gfm(5));
        assert_eq!(e.conjugate(u), u);
        assert_eq!(e.rel_trace(Gfn::new(Gfm(6), Gfm(3))), Gfm(3));
    }

    #[test]
    fn enumeration_order() {
        let c = ctx(2);
        let all: Vec<Gfn> = c.ext().elements().collect();
        assert_eq!(all.len(), 16);
        assert_eq!(all[0], Gfn::ZERO);
        assert_eq!(all[1], Gfn::ONE);
        assert_eq!(all[4], Gfn::THETA);
        assert_eq!(ctx(3).elements().count(), 8);
    }

    #[test]
    fn enumeration_guard() {
        let big = ctx(21);
        assert!(matches!(big.ensure_enumerable(), Err(Error::Budget { .. })));
        assert!(big.allow_large_enumeration().ensure_enumerable().is_ok());
        assert!(ctx(20).ensure_enumerable().is_ok());
    }

    #[test]
    fn hex_round_trip() {
        let c = ctx(3);
        assert_eq!(c.format_poly(), "0b");
        assert_eq!(c.format_elem(c.nu()), "01");
        let x = Gfn::new(Gfm(6), Gfm(1));
        assert_eq!(c.format_ext(x), "06+01t");
        assert_eq!(c.parse_ext("06+01t"), Ok(x));
        assert_eq!(c.parse_ext("5"), Ok(Gfn::from(Gfm(5))));
        assert!(c.parse_elem("8").is_err());
        assert!(c.parse_ext("06+01").is_err());
    }
}
