//! Small exact number-theory helpers shared by the other modules.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Deterministic trial division; inputs here are tiny.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
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

pub fn check_prime(p: u64) -> Result<u64> {
    if is_prime(p) {
        Ok(p)
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Writes `q = r^a` with `r` prime, `a >= 1`, or returns `None`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let r = smallest_prime_factor(q);
    let mut rest = q;
    let mut a = 0;
    while rest.is_multiple_of(r) {
        rest /= r;
        a += 1;
    }
    (rest == 1).then_some((r, a))
}

pub fn check_prime_power(q: u64) -> Result<(u64, u32)> {
    prime_power(q).ok_or(Error::NotPrimePower(q))
}

fn smallest_prime_factor(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 2;
    }
    n
}

/// Exponent of `p` in `n`; `n` must be nonzero.
pub fn valuation(mut n: u64, p: u64) -> u32 {
    debug_assert!(n > 0 && p > 1);
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

/// Legendre's formula: the exponent of `p` in `n!`.
pub fn factorial_valuation(n: u64, p: u64) -> u64 {
    let mut total = 0;
    let mut m = n / p;
    while m > 0 {
        total += m;
        m /= p;
    }
    total
}

/// Exponent of `p` in `C(n, k)`, via Legendre. Requires `k <= n`.
pub fn binomial_valuation(n: u64, k: u64, p: u64) -> u64 {
    factorial_valuation(n, p) - factorial_valuation(k, p) - factorial_valuation(n - k, p)
}

/// Exact `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `N` with every factor `r` removed.
pub fn strip_prime(n: &BigUint, r: u64) -> Result<BigUint> {
    if n.is_zero() {
        return Err(Error::OutOfRange("cannot take the prime-free part of 0".into()));
    }
    let r = BigUint::from(r);
    let mut n = n.clone();
    loop {
        let (quot, rem) = n.div_rem(&r);
        if !rem.is_zero() {
            return Ok(n);
        }
        n = quot;
    }
}

/// True when `p` divides `n`.
pub fn divides(p: u64, n: &BigUint) -> bool {
    (n % p).is_zero()
}

/// Primes in `lo..=hi`, ascending.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&n| is_prime(n)).collect()
}

/// Prime powers in `lo..=hi`, ascending.
pub fn prime_powers_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&n| prime_power(n).is_some()).collect()
}

/// Serde helpers writing big integers as decimal strings.
pub mod decimal {
    use std::collections::BTreeSet;

    use num_bigint::BigUint;
    use serde::ser::{SerializeSeq, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn serialize_set<S: Serializer>(v: &BTreeSet<BigUint>, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for d in v {
            seq.serialize_element(&d.to_string())?;
        }
        seq.end()
    }
}
