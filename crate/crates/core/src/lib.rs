//! Exact evaluation of exponential sums over GF(2^m) and GF(2^2m).
//!
//! The crate provides word-level binary field arithmetic (with GF(2^2m)
//! represented as the tower GF(2^m)(θ)), the polar and affine decompositions
//! of GF(2^2m), Kloosterman sums and their lifts, the Weil sums
//! `C(a, b) = Σ χ(a x^(2^s+1) + b x)`, and brute-force and closed-form
//! evaluators for the sums `p(μ)`, `q(μ)`, `q_s(μ)` and `r(L)`.
//!
//! All results are exact `i64` values.

pub mod decomposition;
pub mod error;
pub mod field;
pub mod gf2linear;
pub mod gf2poly;
pub mod kloosterman;
pub mod linearized;
pub mod sums;
pub mod weil;

pub use error::{Error, Result};
pub use field::{exp_inverse, BinaryField, Ext, FieldCtx, FiniteField, Gfm, Gfn};
pub use linearized::LinearizedPoly;
pub use sums::{SumKind, SumMode, SumResult};
