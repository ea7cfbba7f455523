//! Arithmetic on polynomials over GF(2) packed into machine words.
//!
//! Bit `i` of a word is the coefficient of `x^i`. Degrees are limited to 63,
//! so products of two field elements of degree < 32 fit in a `u64`.

/// Degree of `p`, or `None` for the zero polynomial.
#[inline]
pub fn degree(p: u64) -> Option<u32> {
    if p == 0 {
        None
    } else {
        Some(63 - p.leading_zeros())
    }
}

/// Carry-less product. Caller guarantees `deg(a) + deg(b) < 64`.
#[inline]
pub fn clmul(a: u64, mut b: u64) -> u64 {
    let mut acc = 0u64;
    let mut shifted = a;
    while b != 0 {
        if b & 1 == 1 {
            acc ^= shifted;
        }
        b >>= 1;
        shifted <<= 1;
    }
    acc
}

/// Remainder of `a` modulo `m` (`m != 0`).
#[inline]
pub fn rem(mut a: u64, m: u64) -> u64 {
    let dm = degree(m).expect("modulus must be nonzero");
    while let Some(da) = degree(a) {
        if da < dm {
            break;
        }
        a ^= m << (da - dm);
    }
    a
}

/// Quotient and remainder of `a / b` (`b != 0`).
pub fn divrem(mut a: u64, b: u64) -> (u64, u64) {
    let db = degree(b).expect("divisor must be nonzero");
    let mut q = 0u64;
    while let Some(da) = degree(a) {
        if da < db {
            break;
        }
        q |= 1 << (da - db);
        a ^= b << (da - db);
    }
    (q, a)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = rem(a, b);
        a = b;
        b = r;
    }
    a
}

/// `a * b mod m` with `deg(a), deg(b) < deg(m) <= 32`.
#[inline]
pub fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    rem(clmul(a, b), m)
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
/// Returns `None` when `gcd(a, m) != 1`.
pub fn invmod(a: u64, m: u64) -> Option<u64> {
    let a = rem(a, m);
    if a == 0 {
        return None;
    }
    // Invariant: r0 = s0 * a (mod m), r1 = s1 * a (mod m).
    let (mut r0, mut r1) = (m, a);
    let (mut s0, mut s1) = (0u64, 1u64);
    while r1 != 0 {
        let (q, r) = divrem(r0, r1);
        r0 = r1;
        r1 = r;
        let s = s0 ^ clmul(q, s1);
        s0 = s1;
        s1 = s;
    }
    if r0 == 1 {
        Some(rem(s0, m))
    } else {
        None
    }
}

/// Rabin-style irreducibility test: `p` of degree `d` is irreducible iff
/// `x^(2^d) = x (mod p)` and `gcd(x^(2^(d/q)) - x, p) = 1` for each prime `q | d`.
pub fn is_irreducible(p: u64) -> bool {
    let d = match degree(p) {
        Some(d) if (1..=32).contains(&d) => d,
        _ => return false,
    };
    if d == 1 {
        return true;
    }
    let x = 0b10u64;
    // frob[k] = x^(2^k) mod p
    let mut frob = Vec::with_capacity(d as usize + 1);
    let mut cur = x;
    frob.push(cur);
    for _ in 0..d {
        cur = mulmod(cur, cur, p);
        frob.push(cur);
    }
    if frob[d as usize] != x {
        return false;
    }
    prime_factors(d)
        .into_iter()
        .all(|q| gcd(p, frob[(d / q) as usize] ^ x) == 1)
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n % f == 0 {
            out.push(f);
            while n % f == 0 {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Irreducible polynomials of exact degree `d`, in increasing encoding order.
pub fn irreducibles(d: u32) -> impl Iterator<Item = u64> {
    let lo = 1u64 << d;
    (lo..lo << 1).filter(|&p| is_irreducible(p))
}
