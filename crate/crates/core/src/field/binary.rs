use super::{FiniteField, MAX_DEGREE};
use crate::error::{Error, Result};
use crate::gf2poly;

/// GF(2^k) in polynomial basis modulo an irreducible polynomial of degree `k`.
///
/// Elements are `u64` coordinate vectors (bit `i` = coefficient of `x^i`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryField {
    degree: u32,
    modulus: u64,
    // bit i = Tr(x^i)
    trace_mask: u64,
}

impl BinaryField {
    /// Builds GF(2^k). Without an explicit modulus the irreducible polynomial
    /// with the smallest integer encoding is used.
    pub fn new(degree: u32, modulus: Option<u64>) -> Result<Self> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::InvalidDegree {
                got: degree,
                max: MAX_DEGREE,
            });
        }
        let modulus = match modulus {
            Some(p) => {
                if gf2poly::degree(p) != Some(degree) {
                    return Err(Error::WrongPolyDegree {
                        poly: p,
                        expected: degree,
                        got: gf2poly::degree(p),
                    });
                }
                if !gf2poly::is_irreducible(p) {
                    return Err(Error::Reducible(p));
                }
                p
            }
            None => gf2poly::irreducibles(degree)
                .next()
                .expect("irreducible polynomials exist in every degree"),
        };
        let mut field = BinaryField {
            degree,
            modulus,
            trace_mask: 0,
        };
        let mut mask = 0u64;
        for i in 0..degree {
            let t = field.trace_by_frobenius(1u64 << i);
            debug_assert!(t <= 1);
            mask |= t << i;
        }
        field.trace_mask = mask;
        Ok(field)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn trace_mask(&self) -> u64 {
        self.trace_mask
    }

    pub fn contains(&self, bits: u64) -> bool {
        bits >> self.degree == 0
    }

    pub fn check(&self, bits: u64) -> Result<u64> {
        if self.contains(bits) {
            Ok(bits)
        } else {
            Err(Error::ElementOutOfRange {
                bits,
                degree: self.degree,
            })
        }
    }

    /// Evaluates the GF(2)-polynomial `poly` at the field element `x`.
    pub fn eval_poly(&self, poly: u64, x: u64) -> u64 {
        // Horner from the top coefficient down.
        let mut acc = 0u64;
        let mut bit = 64;
        while bit > 0 {
            bit -= 1;
            acc = self.mul(acc, x);
            if (poly >> bit) & 1 == 1 {
                acc ^= 1;
            }
        }
        acc
    }
}

impl FiniteField for BinaryField {
    type Elem = u64;

    fn degree(&self) -> u32 {
        self.degree
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    #[inline]
    fn add(&self, a: u64, b: u64) -> u64 {
        a ^ b
    }

    #[inline]
    fn mul(&self, a: u64, b: u64) -> u64 {
        gf2poly::mulmod(a, b, self.modulus)
    }

    fn inv(&self, a: u64) -> Result<u64> {
        gf2poly::invmod(a, self.modulus).ok_or(Error::DivisionByZero)
    }

    #[inline]
    fn trace(&self, a: u64) -> u8 {
        ((a & self.trace_mask).count_ones() & 1) as u8
    }

    fn element_at(&self, index: u64) -> u64 {
        debug_assert!(self.contains(index));
        index
    }

    fn index_of(&self, a: u64) -> u64 {
        a
    }
}
