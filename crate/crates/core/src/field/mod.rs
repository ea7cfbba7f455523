//! Binary field arithmetic: generic GF(2^k), the base field GF(2^m), and the
//! quadratic tower GF(2^2m) = GF(2^m)(θ) with θ² + θ = ν.

mod binary;
mod hex;
mod tower;

pub use binary::BinaryField;
pub use hex::{format_hex, parse_hex};
pub use tower::{Ext, FieldCtx, Gfm, Gfn, MAX_ENUMERATION_M};

use crate::error::{Error, Result};

/// Largest extension degree over GF(2) supported by the word-level arithmetic.
pub const MAX_DEGREE: u32 = 32;

/// Common interface of the three field flavours.
///
/// Elements are plain `Copy` values; all arithmetic goes through the field
/// object, which owns the modulus.
pub trait FiniteField {
    type Elem: Copy + Eq + std::fmt::Debug;

    /// Degree over GF(2).
    fn degree(&self) -> u32;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn inv(&self, a: Self::Elem) -> Result<Self::Elem>;

    /// Absolute trace to GF(2), as 0 or 1.
    fn trace(&self, a: Self::Elem) -> u8;

    /// Element with the given integer encoding (`index < 2^degree`).
    fn element_at(&self, index: u64) -> Self::Elem;
    fn index_of(&self, a: Self::Elem) -> u64;

    fn order(&self) -> u64 {
        1u64 << self.degree()
    }

    fn square(&self, a: Self::Elem) -> Self::Elem {
        self.mul(a, a)
    }

    fn div(&self, a: Self::Elem, b: Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Square-and-multiply; `0^0 = 1`.
    fn pow(&self, a: Self::Elem, mut e: u128) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a;
        while e != 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            e >>= 1;
        }
        acc
    }

    /// `a^(2^i)`.
    fn frobenius(&self, a: Self::Elem, i: u32) -> Self::Elem {
        (0..i).fold(a, |x, _| self.square(x))
    }

    /// `Σ_{i<k} a^(2^i)` computed by repeated squaring; always 0 or 1.
    fn trace_by_frobenius(&self, a: Self::Elem) -> Self::Elem {
        let mut acc = self.zero();
        let mut x = a;
        for _ in 0..self.degree() {
            acc = self.add(acc, x);
            x = self.square(x);
        }
        acc
    }

    /// Additive character `(-1)^Tr(a)`.
    fn chi(&self, a: Self::Elem) -> i64 {
        1 - 2 * self.trace(a) as i64
    }

    /// All elements in increasing encoding order.
    fn elements(&self) -> impl Iterator<Item = Self::Elem> + '_ {
        (0..self.order()).map(move |i| self.element_at(i))
    }
}

/// Inverse of `e` modulo `modulus` (typically `2^m - 1`).
pub fn exp_inverse(e: u64, modulus: u64) -> Result<u64> {
    if modulus == 0 {
        return Err(Error::Precondition("modulus must be positive".into()));
    }
    if modulus == 1 {
        return Ok(0);
    }
    let (mut r0, mut r1) = (modulus as i128, (e % modulus) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return Err(Error::NotInvertible { e, modulus });
    }
    Ok(t0.rem_euclid(modulus as i128) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_inverse_examples() {
        assert_eq!(exp_inverse(3, 7), Ok(5));
        assert_eq!(exp_inverse(3, 31), Ok(21));
        assert_eq!(
            exp_inverse(5, 15),
            Err(Error::NotInvertible { e: 5, modulus: 15 })
        );
        assert_eq!(exp_inverse(0, 0).is_err(), true);
    }

    #[test]
    fn exp_inverse_agrees_with_search() {
        for modulus in 1u64..200 {
            for e in 0..modulus.min(40) {
                let brute = (0..modulus).find(|d| (e * d) % modulus == 1 % modulus);
                match exp_inverse(e, modulus) {
                    Ok(d) => assert_eq!(Some(d), brute, "e={e} mod {modulus}"),
                    Err(_) => assert_eq!(brute, None, "e={e} mod {modulus}"),
                }
            }
        }
    }
}
