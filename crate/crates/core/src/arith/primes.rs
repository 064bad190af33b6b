//! Primality, trial factorisation and integer square roots at desk scale.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes `>= start` in increasing order.
pub fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start.max(2)..).filter(|&n| is_prime(n))
}

/// Prime factorisation of `|n|` by trial division, as `(prime, exponent)`
/// pairs in increasing order. `n` must be nonzero.
pub fn factor_int(n: &BigInt) -> Vec<(BigInt, u32)> {
    assert!(!n.is_zero(), "factor_int of zero");
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::from(2);
    while &d * &d <= n {
        let mut e = 0;
        while (&n % &d).is_zero() {
            n /= &d;
            e += 1;
        }
        if e > 0 {
            out.push((d.clone(), e));
        }
        d += if d == BigInt::from(2) { 1 } else { 2 };
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

/// Exponent of the prime `p` in the nonzero integer `n`.
pub fn int_valuation(n: &BigInt, p: &BigInt) -> u32 {
    assert!(!n.is_zero());
    let mut n = n.clone();
    let mut e = 0;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    e
}

/// Floor of the square root of a nonnegative integer.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of negative");
    n.sqrt()
}

/// The square root if `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Writes a nonzero integer as `core * k^2` with `core` squarefree (sign
/// kept on `core`). Returns `(core, k)`.
pub fn squarefree_decomposition(n: &BigInt) -> (BigInt, BigInt) {
    let mut core = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
    let mut k = BigInt::one();
    for (p, e) in factor_int(n) {
        k *= num_traits::pow(p.clone(), (e / 2) as usize);
        if e % 2 == 1 {
            core *= p;
        }
    }
    (core, k)
}

pub fn to_u64(n: &BigInt) -> Option<u64> {
    n.to_u64()
}
