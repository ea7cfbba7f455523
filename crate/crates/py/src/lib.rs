//! Python bindings. Elements of GF(2^m) are plain ints (polynomial-basis
//! bits); elements of GF(2^2m) are `(c0, c1)` pairs meaning `c0 + c1·t`.

use charsum::decomposition::{affine, polar};
use charsum::kloosterman::{
    kloosterman_all, kloosterman_direct, kloosterman_lift_direct, kloosterman_lift_recursive,
    lw_expected as lw_expected_core, lw_value_set,
};
use charsum::sums::{
    p_brute, p_closed, p_closed_paper_literal, q_brute, q_closed, qs_brute, qs_closed,
    qs_reduced, r_brute, r_closed,
};
use charsum::weil::{
    counts_closed, counts_direct, jacobi2 as jacobi2_core, weil_c11_closed, weil_c_closed,
    weil_c_direct, CountReport,
};
use charsum::{gf2poly, Error, FieldCtx, FiniteField, Gfm, Gfn, LinearizedPoly};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn bad_mode(mode: &str, allowed: &str) -> PyErr {
    PyValueError::new_err(format!("unknown mode {mode:?}; expected one of {allowed}"))
}

/// A field context: GF(2^m) with the tower GF(2^2m) = GF(2^m)(t), t^2 + t = nu.
#[pyclass(name = "Field", module = "charsum", frozen)]
struct Field {
    ctx: FieldCtx,
}

impl Field {
    fn elem(&self, x: u64) -> PyResult<Gfm> {
        self.ctx.elem(x).map_err(err)
    }

    fn ext(&self, x: (u64, u64)) -> PyResult<Gfn> {
        self.ctx.ext_elem(x.0, x.1).map_err(err)
    }

    fn poly(&self, terms: Vec<(u32, u64)>) -> PyResult<LinearizedPoly> {
        let terms = terms
            .into_iter()
            .map(|(a, alpha)| Ok((a, self.elem(alpha)?)))
            .collect::<PyResult<Vec<_>>>()?;
        LinearizedPoly::new(&self.ctx, terms).map_err(err)
    }
}

fn pair(x: Gfn) -> (u64, u64) {
    (x.c0.bits(), x.c1.bits())
}

fn counts_dict<'py>(py: Python<'py>, c: &CountReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("m_plus", c.m_plus)?;
    d.set_item("m_minus", c.m_minus)?;
    d.set_item("n00", c.n00)?;
    d.set_item("n01", c.n01)?;
    d.set_item("n10", c.n10)?;
    d.set_item("n11", c.n11)?;
    Ok(d)
}

#[pymethods]
impl Field {
    /// `poly` is the modulus as an int (bit i = coefficient of x^i); `nu` the
    /// trace-one constant of the quadratic extension. Both default to the
    /// smallest valid choice.
    #[new]
    #[pyo3(signature = (m, poly=None, nu=None))]
    fn new(m: u32, poly: Option<u64>, nu: Option<u64>) -> PyResult<Self> {
        let mut ctx = FieldCtx::new(m, poly).map_err(err)?;
        if let Some(nu) = nu {
            ctx = ctx.with_nu(nu).map_err(err)?;
        }
        Ok(Field { ctx })
    }

    #[getter]
    fn m(&self) -> u32 {
        self.ctx.m()
    }

    #[getter]
    fn n(&self) -> u32 {
        self.ctx.n()
    }

    #[getter]
    fn irr_poly(&self) -> u64 {
        self.ctx.irr_poly()
    }

    #[getter]
    fn nu(&self) -> u64 {
        self.ctx.nu().bits()
    }

    #[getter]
    fn order(&self) -> u64 {
        self.ctx.order()
    }

    fn __repr__(&self) -> String {
        format!(
            "Field(m={}, poly=0x{}, nu=0x{})",
            self.ctx.m(),
            self.ctx.format_poly(),
            self.ctx.format_elem(self.ctx.nu())
        )
    }

    fn format(&self, x: u64) -> PyResult<String> {
        Ok(self.ctx.format_elem(self.elem(x)?))
    }

    fn parse(&self, text: &str) -> PyResult<u64> {
        Ok(self.ctx.parse_elem(text).map_err(err)?.bits())
    }

    fn add(&self, a: u64, b: u64) -> PyResult<u64> {
        Ok(self.ctx.add(self.elem(a)?, self.elem(b)?).bits())
    }

    fn mul(&self, a: u64, b: u64) -> PyResult<u64> {
        Ok(self.ctx.mul(self.elem(a)?, self.elem(b)?).bits())
    }

    fn inv(&self, a: u64) -> PyResult<u64> {
        Ok(self.ctx.inv(self.elem(a)?).map_err(err)?.bits())
    }

    fn pow(&self, a: u64, e: u128) -> PyResult<u64> {
        Ok(self.ctx.pow(self.elem(a)?, e).bits())
    }

    fn trace(&self, a: u64) -> PyResult<u8> {
        Ok(self.ctx.trace(self.elem(a)?))
    }

    fn chi(&self, a: u64) -> PyResult<i64> {
        Ok(self.ctx.chi(self.elem(a)?))
    }

    fn ext_mul(&self, x: (u64, u64), y: (u64, u64)) -> PyResult<(u64, u64)> {
        let ext = self.ctx.ext();
        Ok(pair(ext.mul(self.ext(x)?, self.ext(y)?)))
    }

    fn ext_inv(&self, x: (u64, u64)) -> PyResult<(u64, u64)> {
        Ok(pair(self.ctx.ext().inv(self.ext(x)?).map_err(err)?))
    }

    fn ext_trace(&self, x: (u64, u64)) -> PyResult<u8> {
        Ok(self.ctx.ext().trace(self.ext(x)?))
    }

    /// `p(mu)`; mode is "closed", "brute" or "paper_literal".
    #[pyo3(signature = (mu, mode="closed"))]
    fn p(&self, py: Python<'_>, mu: u64, mode: &str) -> PyResult<i64> {
        let mu = self.elem(mu)?;
        let ctx = &self.ctx;
        py.detach(|| match mode {
            "closed" => p_closed(ctx, mu).map_err(err),
            "brute" => p_brute(ctx, mu).map_err(err),
            "paper_literal" => p_closed_paper_literal(ctx, mu).map_err(err),
            _ => Err(bad_mode(mode, "closed, brute, paper_literal")),
        })
    }

    #[pyo3(signature = (mu, mode="closed"))]
    fn q(&self, py: Python<'_>, mu: u64, mode: &str) -> PyResult<i64> {
        let mu = self.elem(mu)?;
        let ctx = &self.ctx;
        py.detach(|| match mode {
            "closed" => q_closed(ctx, mu).map_err(err),
            "brute" => q_brute(ctx, mu).map_err(err),
            _ => Err(bad_mode(mode, "closed, brute")),
        })
    }

    /// `q_s(mu)`; mode is "closed", "reduced" or "brute".
    #[pyo3(signature = (mu, s, mode="reduced"))]
    fn qs(&self, py: Python<'_>, mu: u64, s: u32, mode: &str) -> PyResult<i64> {
        let mu = self.elem(mu)?;
        let ctx = &self.ctx;
        py.detach(|| match mode {
            "closed" => qs_closed(ctx, mu, s).map_err(err),
            "reduced" => qs_reduced(ctx, mu, s).map_err(err),
            "brute" => qs_brute(ctx, mu, s).map_err(err),
            _ => Err(bad_mode(mode, "closed, reduced, brute")),
        })
    }

    /// `r(L)` for `L = sum alpha * X^(2^a)` given as `[(a, alpha), ...]`.
    #[pyo3(signature = (terms, mode="closed"))]
    fn r(&self, py: Python<'_>, terms: Vec<(u32, u64)>, mode: &str) -> PyResult<i64> {
        let poly = self.poly(terms)?;
        let ctx = &self.ctx;
        py.detach(|| match mode {
            "closed" => Ok(r_closed(ctx, &poly)),
            "brute" => r_brute(ctx, &poly).map_err(err),
            _ => Err(bad_mode(mode, "closed, brute")),
        })
    }

    #[pyo3(signature = (a, b=1))]
    fn kloosterman(&self, a: u64, b: u64) -> PyResult<i64> {
        Ok(kloosterman_direct(&self.ctx, self.elem(a)?, self.elem(b)?))
    }

    /// `k(a)` for every `a`, indexed by encoding.
    fn kloosterman_all(&self, py: Python<'_>) -> Vec<i64> {
        py.detach(|| kloosterman_all(&self.ctx))
    }

    fn kloosterman_values(&self, py: Python<'_>) -> Vec<i64> {
        py.detach(|| lw_value_set(&self.ctx))
    }

    /// `k^(s)(a)` over GF(2^(ms)), by enumeration or by the two-term recursion.
    #[pyo3(signature = (a, s, recursive=false))]
    fn kloosterman_lift(&self, py: Python<'_>, a: u64, s: u32, recursive: bool) -> PyResult<i64> {
        let a = self.elem(a)?;
        let ctx = &self.ctx;
        if recursive {
            return Ok(kloosterman_lift_recursive(ctx, a, s));
        }
        py.detach(|| kloosterman_lift_direct(ctx, a, s).map_err(err))
    }

    /// `C(a, b) = sum_x chi(a x^(2^s+1) + b x)`.
    #[pyo3(signature = (a, b, s, closed=false))]
    fn weil(&self, a: u64, b: u64, s: u32, closed: bool) -> PyResult<i64> {
        let (a, b) = (self.elem(a)?, self.elem(b)?);
        if closed {
            weil_c_closed(&self.ctx, a, b, s).map_err(err)
        } else {
            Ok(weil_c_direct(&self.ctx, a, b, s))
        }
    }

    #[pyo3(signature = (s, closed=false))]
    fn weil_counts<'py>(&self, py: Python<'py>, s: u32, closed: bool) -> PyResult<Bound<'py, PyDict>> {
        let c = if closed {
            counts_closed(self.ctx.m(), s)
        } else {
            counts_direct(&self.ctx, s)
        };
        counts_dict(py, &c.map_err(err)?)
    }

    /// `x = y z` with `y` in GF(2^m) and `z` on the unit circle; returns `(y, z)`.
    fn polar(&self, x: (u64, u64)) -> PyResult<(u64, (u64, u64))> {
        let p = polar(&self.ctx, self.ext(x)?).map_err(err)?;
        Ok((p.y.bits(), pair(p.z)))
    }

    /// `x = u lam` with `u` in GF(2^m) and `lam + lam^(2^m) = 1`; returns `(u, lam)`.
    fn affine(&self, x: (u64, u64)) -> PyResult<(u64, (u64, u64))> {
        let a = affine(&self.ctx, self.ext(x)?).map_err(err)?;
        Ok((a.u.bits(), pair(a.lambda)))
    }
}

/// Integers `t = -1 mod 4` with `t^2 <= 2^(m+2)`.
#[pyfunction]
fn lw_expected(m: u32) -> Vec<i64> {
    lw_expected_core(m)
}

/// The Jacobi symbol `(2/m)` for odd `m`.
#[pyfunction]
fn jacobi2(m: u32) -> PyResult<i64> {
    jacobi2_core(m).map_err(err)
}

#[pyfunction]
fn c11(m: u32, s: u32) -> PyResult<i64> {
    weil_c11_closed(m, s).map_err(err)
}

#[pyfunction]
fn is_irreducible(poly: u64) -> bool {
    gf2poly::is_irreducible(poly)
}

#[pymodule(name = "charsum")]
fn charsum_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Field>()?;
    m.add_function(wrap_pyfunction!(lw_expected, m)?)?;
    m.add_function(wrap_pyfunction!(jacobi2, m)?)?;
    m.add_function(wrap_pyfunction!(c11, m)?)?;
    m.add_function(wrap_pyfunction!(is_irreducible, m)?)?;
    Ok(())
}
