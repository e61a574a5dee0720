//! Character degrees of `S_n` and `A_n` and p'-degree tests.
//!
//! Two independent p'-tests are provided. [`is_pprime_macdonald`] strips
//! the top p-adic layer with core/hook counts and recurses;
//! [`is_pprime_oracle`] compares `ν_p(n!)` against the valuation of the hook
//! product. They must agree on every partition.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::arith;
use crate::error::{Error, Result};
use crate::partition::{p_adic_expansion, Partition};

/// `χ^λ(1) = n! / ∏ hooks`.
pub fn degree(lambda: &Partition) -> Result<BigUint> {
    let product = lambda
        .hook_multiset()
        .into_iter()
        .fold(BigUint::from(1u32), |acc, h| acc * h);
    let (quot, rem) = arith::factorial(lambda.size() as u64).div_rem(&product);
    if !rem.is_zero() {
        return Err(Error::InexactDivision(format!(
            "hook product of {lambda} does not divide {}!",
            lambda.size()
        )));
    }
    Ok(quot)
}

/// Degree of the hook character `(n - x, 1^x)`, i.e. `C(n-1, x)`.
pub fn hook_degree(n: usize, x: usize) -> Result<BigUint> {
    if n == 0 || x >= n {
        return Err(Error::OutOfRange(format!("hook degree needs 0 <= x <= n-1, got n={n} x={x}")));
    }
    Ok(arith::binomial(n as u64 - 1, x as u64))
}

/// Exponent of `p` in `χ^λ(1)`, without forming `n!`.
pub fn degree_valuation(lambda: &Partition, p: usize) -> Result<u64> {
    let p = arith::check_prime(p as u64)?;
    let top = arith::factorial_valuation(lambda.size() as u64, p);
    let hooks: u64 = lambda
        .hook_multiset()
        .into_iter()
        .map(|h| arith::valuation(h as u64, p) as u64)
        .sum();
    top.checked_sub(hooks).ok_or_else(|| {
        Error::Internal(format!("hook valuation {hooks} exceeds ν_{p}({}!) = {top} for {lambda}", lambda.size()))
    })
}

/// Valuation-based p'-test.
pub fn is_pprime_oracle(lambda: &Partition, p: usize) -> Result<bool> {
    Ok(degree_valuation(lambda, p)? == 0)
}

/// Layer-stripping p'-test.
///
/// With `n = Σ a_j p^j` and top digit `a_k`, `λ` has p'-degree iff exactly
/// `a_k` hook lengths are divisible by `p^k` and the `p^k`-core has
/// p'-degree. Partitions of `n < p` are always p'.
pub fn is_pprime_macdonald(lambda: &Partition, p: usize) -> Result<bool> {
    arith::check_prime(p as u64)?;
    let mut current = lambda.clone();
    loop {
        let n = current.size();
        if n < p {
            return Ok(true);
        }
        let (a_top, k) = p_adic_expansion(n, p)?.top().expect("n >= p > 0");
        let layer = p.pow(k);
        if current.divisible_hooks(layer).len() != a_top {
            return Ok(false);
        }
        let core = current.e_core(layer);
        if core.size() != n - a_top * layer {
            return Err(Error::Internal(format!(
                "{layer}-core of {current} has size {}, expected {}",
                core.size(),
                n - a_top * layer
            )));
        }
        current = core;
    }
}

/// Degrees of the constituents of `χ^λ` restricted to `A_n`.
///
/// One entry when `λ ≠ λ'` (the restriction stays irreducible); two equal
/// halves when `λ = λ'`.
pub fn an_degrees(lambda: &Partition) -> Result<Vec<BigUint>> {
    if lambda.size() < 2 {
        return Err(Error::OutOfRange(format!("A_n restriction needs n >= 2, got {}", lambda.size())));
    }
    let d = degree(lambda)?;
    if !lambda.is_self_conjugate() {
        return Ok(vec![d]);
    }
    let (half, rem) = d.div_rem(&BigUint::from(2u32));
    if !rem.is_zero() {
        return Err(Error::Internal(format!("self-conjugate {lambda} has odd degree {d}")));
    }
    Ok(vec![half.clone(), half])
}
