use std::fmt::Write;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FiniteField, Gfm, Gfn};

/// `L(x) = Σ α_i x^(2^(a_i))` with coefficients in GF(2^m), `0 <= a_i < m`,
/// distinct exponents and nonzero coefficients. No terms means the zero map.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinearizedPoly {
    terms: Vec<(u32, Gfm)>,
}

impl LinearizedPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn new(ctx: &FieldCtx, terms: Vec<(u32, Gfm)>) -> Result<Self> {
        for (i, &(a, alpha)) in terms.iter().enumerate() {
            if a >= ctx.m() {
                return Err(Error::Precondition(format!(
                    "exponent index {a} must be below m = {}",
                    ctx.m()
                )));
            }
            ctx.elem(alpha.bits())?;
            if alpha.is_zero() {
                return Err(Error::Precondition("coefficients must be nonzero".into()));
            }
            if terms[..i].iter().any(|&(b, _)| b == a) {
                return Err(Error::Precondition(format!("exponent index {a} repeated")));
            }
        }
        Ok(LinearizedPoly { terms })
    }

    pub fn terms(&self) -> &[(u32, Gfm)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, ctx: &FieldCtx, u: Gfm) -> Gfm {
        self.terms.iter().fold(Gfm::ZERO, |acc, &(a, alpha)| {
            ctx.add(acc, ctx.mul(alpha, ctx.frobenius(u, a)))
        })
    }

    pub fn eval_ext(&self, ctx: &FieldCtx, x: Gfn) -> Gfn {
        let ext = ctx.ext();
        self.terms.iter().fold(Gfn::ZERO, |acc, &(a, alpha)| {
            ext.add(acc, ext.scale(alpha, ext.frobenius(x, a)))
        })
    }

    /// Parses `"01*X^(2^0),03*X^(2^2)"`; `"0"` is the zero map.
    pub fn parse(ctx: &FieldCtx, s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" || s.is_empty() {
            return Ok(Self::zero());
        }
        let bad = |t: &str| Error::Parse(format!("bad term {t:?}, expected <hex>*X^(2^<a>)"));
        let terms = s
            .split(',')
            .map(|term| {
                let compact: String = term.chars().filter(|c| !c.is_whitespace()).collect();
                let (coef, rest) = compact.split_once('*').ok_or_else(|| bad(term))?;
                let exp = rest
                    .strip_prefix("X^(2^")
                    .or_else(|| rest.strip_prefix("x^(2^"))
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| bad(term))?;
                let a: u32 = exp.parse().map_err(|_| bad(term))?;
                Ok((a, ctx.parse_elem(coef)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ctx, terms)
    }

    pub fn format(&self, ctx: &FieldCtx) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, &(a, alpha)) in self.terms.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            write!(out, "{}*X^(2^{a})", ctx.format_elem(alpha)).unwrap();
        }
        out
    }
}
