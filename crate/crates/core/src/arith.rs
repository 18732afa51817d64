//! Integer helpers: trial-division factoring, primality, valuations.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = 17u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization with exponents, primes ascending.
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Factorization of `|n|` for a nonzero `BigInt` that fits in 64 bits.
pub fn factor_big(n: &BigInt) -> Result<Vec<(u64, u32)>> {
    let m = n
        .abs()
        .to_u64()
        .ok_or_else(|| Error::Unsupported(format!("cannot factor {n}: exceeds 64 bits")))?;
    if m == 0 {
        return Err(Error::Domain("cannot factor 0".into()));
    }
    Ok(factor(m))
}

/// `p`-adic valuation and unit part of a nonzero integer.
pub fn split_valuation(n: &BigInt, p: u64) -> (u32, BigInt) {
    assert!(!n.is_zero(), "valuation of zero");
    let p = BigInt::from(p);
    let mut e = 0;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            break;
        }
        m = q;
        e += 1;
    }
    (e, m)
}

pub fn valuation(n: &BigInt, p: u64) -> Option<u32> {
    (!n.is_zero()).then(|| split_valuation(n, p).0)
}

pub fn pow_big(p: u64, e: u32) -> BigInt {
    num_traits::pow(BigInt::from(p), e as usize)
}
