//! p'-hooks, quasihooks and the `|cd^ext_{p'}(A_n)| >= 3` witnesses.
//!
//! `L_{p'}(n)` is built two ways: [`list_pprime_hooks`] filters hooks by the
//! p-adic valuation of `C(n-1, x)`, while [`layered_pprime_hooks`] grows the
//! set one p-adic digit at a time by attaching top-layer hooks to the row or
//! the column of every smaller p'-hook. Their agreement with each other and
//! with [`count_pprime_hooks_formula`] is the main check on the counting
//! formula.

use std::collections::BTreeSet;
use std::env;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::arith;
use crate::degrees::{degree, hook_degree, is_pprime_macdonald, is_pprime_oracle};
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions_bounded, p_adic_expansion, Partition};

/// Environment variable overriding [`DEFAULT_EXACT_BOUND`].
pub const SCAN_BOUND_ENV: &str = "PPCD_SCAN_BOUND";

/// Largest `n` for which `cd^ext_{p'}(A_n)` is computed by a full scan.
pub const DEFAULT_EXACT_BOUND: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    pub exact_bound: usize,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig { exact_bound: DEFAULT_EXACT_BOUND }
    }
}

impl ScanConfig {
    /// Reads `PPCD_SCAN_BOUND`; unset falls back to the default, garbage is
    /// an error.
    pub fn from_env() -> Result<Self> {
        match env::var(SCAN_BOUND_ENV) {
            Ok(raw) => raw
                .trim()
                .parse()
                .map(|exact_bound| ScanConfig { exact_bound })
                .map_err(|_| Error::OutOfRange(format!("{SCAN_BOUND_ENV}={raw:?} is not an integer"))),
            Err(_) => Ok(ScanConfig::default()),
        }
    }
}

fn check_prime(p: usize) -> Result<usize> {
    arith::check_prime(p as u64).map(|p| p as usize)
}

fn check_p_above_3(p: usize) -> Result<usize> {
    check_prime(p)?;
    if p <= 3 {
        return Err(Error::OutOfRange(format!("need a prime p > 3, got {p}")));
    }
    Ok(p)
}

/// Legs `x` of the hooks `(n - x, 1^x)` whose degree `C(n-1, x)` is prime
/// to `p`, increasing.
pub fn pprime_hook_legs(n: usize, p: usize) -> Result<Vec<usize>> {
    check_prime(p)?;
    if n == 0 {
        return Err(Error::OutOfRange("hooks need n >= 1".into()));
    }
    let top = (n - 1) as u64;
    Ok((0..n)
        .filter(|&x| arith::binomial_valuation(top, x as u64, p as u64) == 0)
        .collect())
}

/// Hooks `(n - x, 1^x)` whose degree `C(n-1, x)` is prime to `p`, by
/// increasing `x`.
pub fn list_pprime_hooks(n: usize, p: usize) -> Result<Vec<Partition>> {
    Ok(legs_to_hooks(n, pprime_hook_legs(n, p)?))
}

fn legs_to_hooks(n: usize, legs: Vec<usize>) -> Vec<Partition> {
    legs.into_iter().map(|x| Partition::hook(n, x).expect("x < n")).collect()
}

/// `a_1 p^{e_1} · ∏_{j >= 2} (a_j + 1)` from the p-adic digits of `n`.
///
/// The count never exceeds `n`, so a machine integer suffices.
pub fn count_pprime_hooks_formula(n: usize, p: usize) -> Result<u64> {
    let expansion = p_adic_expansion(n, p)?;
    let (&(a1, e1), rest) = expansion
        .digits
        .split_first()
        .ok_or_else(|| Error::OutOfRange("hooks need n >= 1".into()))?;
    let head = a1 as u64 * (p as u64).pow(e1);
    Ok(rest.iter().fold(head, |acc, &(a, _)| acc * (a as u64 + 1)))
}

/// Legs of `L_{p'}(n)` built digit by digit from the bottom of the p-adic
/// expansion, increasing.
///
/// The lowest layer `a_1 p^{e_1}` contributes every hook of that size; each
/// further digit `a_j` attaches `x` hooks of length `p^{e_j}` to the first
/// row and `a_j - x` to the first column of every hook built so far.
pub fn layered_pprime_hook_legs(n: usize, p: usize) -> Result<Vec<usize>> {
    let expansion = p_adic_expansion(n, p)?;
    let (&(a1, e1), rest) = expansion
        .digits
        .split_first()
        .ok_or_else(|| Error::OutOfRange("hooks need n >= 1".into()))?;
    let base = a1 * p.pow(e1);
    // hooks are stored by first-row length
    let mut arms: Vec<usize> = (1..=base).collect();
    let mut size = base;
    for &(a, e) in rest {
        let layer = p.pow(e);
        arms = arms
            .iter()
            .flat_map(|&first| (0..=a).map(move |x| first + x * layer))
            .collect();
        size += a * layer;
    }
    debug_assert_eq!(size, n);
    let mut legs: Vec<usize> = arms.into_iter().map(|first| n - first).collect();
    legs.sort_unstable();
    Ok(legs)
}

/// [`layered_pprime_hook_legs`] as partitions.
pub fn layered_pprime_hooks(n: usize, p: usize) -> Result<Vec<Partition>> {
    Ok(legs_to_hooks(n, layered_pprime_hook_legs(n, p)?))
}

/// `⌊|L_{p'}(n)| / 2⌋`.
pub fn halved_count_lower_bound(n: usize, p: usize) -> Result<u64> {
    Ok(count_pprime_hooks_formula(n, p)? / 2)
}

/// The quasihook `(n - c - t, c, 1^t)` for `c ∈ {2, 3}`.
pub fn quasihook(n: usize, c: usize, t: usize) -> Result<Partition> {
    if !(c == 2 || c == 3) {
        return Err(Error::OutOfRange(format!("quasihook second row must be 2 or 3, got {c}")));
    }
    if n < 4 + c {
        return Err(Error::OutOfRange(format!("quasihook needs n >= {}, got {n}", 4 + c)));
    }
    if t > n - 2 * c {
        return Err(Error::OutOfRange(format!("quasihook needs t <= {}, got {t}", n - 2 * c)));
    }
    Ok(quasihook_unchecked(n, c, t))
}

/// `(n - c - t, c, 1^t)` for any `c` with `n - c - t >= c`; no range policy.
pub fn quasihook_unchecked(n: usize, c: usize, t: usize) -> Partition {
    let mut parts = vec![n - c - t, c];
    parts.extend(std::iter::repeat_n(1, t));
    Partition::new(parts).expect("first row at least c")
}

/// True iff the degree strictly increases from `a` to `b`.
pub fn degree_increases(a: &Partition, b: &Partition) -> Result<bool> {
    Ok(degree(a)? < degree(b)?)
}

/// `χ^{λ(t)}(1) < χ^{λ(t+1)}(1)` for `0 <= t <= ⌊(n-4-c)/2⌋`.
pub fn quasihook_monotone(n: usize, c: usize, t: usize) -> Result<bool> {
    let here = quasihook(n, c, t)?;
    let limit = (n - 4 - c) / 2;
    if t > limit {
        return Err(Error::OutOfRange(format!("monotone range is t <= {limit}, got {t}")));
    }
    degree_increases(&here, &quasihook(n, c, t + 1)?)
}

/// The p'-partitions of `m = 1 + p^k`: the row, the column, and
/// `(p^k - t, 2, 1^{t-1})` for `t = 1..=p^k - 2`, in descending
/// lexicographic order.
pub fn pprime_partitions_small(m: usize, p: usize) -> Result<Vec<Partition>> {
    check_prime(p)?;
    let pk = m.checked_sub(1).filter(|&v| v >= p && is_power_of(v, p)).ok_or_else(|| {
        Error::OutOfRange(format!("{m} is not 1 + {p}^k with k >= 1"))
    })?;
    let mut out = vec![Partition::row(m)];
    for t in 1..=pk - 2 {
        let mut parts = vec![pk - t, 2];
        parts.extend(std::iter::repeat_n(1, t - 1));
        out.push(Partition::new(parts).expect("pk - t >= 2"));
    }
    out.push(Partition::column(m));
    Ok(out)
}

fn is_power_of(mut v: usize, p: usize) -> bool {
    while v > 1 && v.is_multiple_of(p) {
        v /= p;
    }
    v == 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExtMode {
    /// Every p'-partition scanned; the set is exact.
    Exact,
    /// Degrees from certified families only; a lower bound.
    Constructive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtDegreeSet {
    pub mode: ExtMode,
    #[serde(serialize_with = "arith::decimal::serialize_set")]
    pub degrees: BTreeSet<BigUint>,
}

/// Degrees of p'-characters of `A_n` that extend to `S_n`, i.e. `χ^λ(1)`
/// for p'-partitions with `λ ≠ λ'`.
pub fn ext_pprime_degree_set(n: usize, p: usize, config: ScanConfig) -> Result<ExtDegreeSet> {
    check_p_above_3(p)?;
    if n < 5 {
        return Err(Error::OutOfRange(format!("need n >= 5, got {n}")));
    }
    if n <= config.exact_bound {
        return Ok(ExtDegreeSet { mode: ExtMode::Exact, degrees: exact_ext_degrees(n, p)? });
    }
    let degrees = constructive_witnesses(n, p)?.into_iter().map(|w| w.degree).collect();
    Ok(ExtDegreeSet { mode: ExtMode::Constructive, degrees })
}

fn exact_ext_degrees(n: usize, p: usize) -> Result<BTreeSet<BigUint>> {
    let mut out = BTreeSet::new();
    for lambda in enumerate_partitions_bounded(n, n)? {
        if is_pprime_oracle(&lambda, p)? && !lambda.is_self_conjugate() {
            out.insert(degree(&lambda)?);
        }
    }
    Ok(out)
}

/// A certified p'-partition with `λ ≠ λ'` and its degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub partition: Partition,
    #[serde(serialize_with = "arith::decimal::serialize")]
    pub degree: BigUint,
}

/// Which branch of the case split on the p-adic shape of `n` applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum AnCase {
    /// Half the p'-hooks already give three degrees.
    Generic,
    /// `n = 1 + a p^k`; quasihooks `(n-2-t, 2, 1^t)`.
    OnePlusMultiple { a: usize, k: u32 },
    /// `n = 1 + p^k + p^h`, `k < h`; rows of `P_{p'}(1 + p^k)` extended by `p^h`.
    OnePlusTwoPowers { k: u32, h: u32 },
    /// `n = 2 + p^k`; quasihooks `(n-3-t, 3, 1^t)`, or a full scan when `p^k = 5`.
    TwoPlusPower { k: u32 },
}

impl AnCase {
    pub fn classify(n: usize, p: usize) -> Result<Self> {
        let digits = p_adic_expansion(n, p)?.digits;
        Ok(match *digits.as_slice() {
            // a = 4 has ⌊5/2⌋ = 2 p'-hook degrees, so it needs the quasihooks too
            [(1, 0), (a, k)] if (1..=4).contains(&a) => AnCase::OnePlusMultiple { a, k },
            [(1, 0), (1, k), (1, h)] => AnCase::OnePlusTwoPowers { k, h },
            [(2, 0), (1, k)] => AnCase::TwoPlusPower { k },
            _ => AnCase::Generic,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnBoundReport {
    pub n: usize,
    pub p: usize,
    #[serde(flatten)]
    pub case: AnCase,
    pub witnesses: Vec<Witness>,
    #[serde(serialize_with = "arith::decimal::serialize_set")]
    pub distinct_degrees: BTreeSet<BigUint>,
    pub holds: bool,
}

/// Checks `|cd^ext_{p'}(A_n)| >= 3` for `n >= 7`, `p > 3`, by exhibiting
/// witnesses along the case split on the p-adic shape of `n`.
///
/// Every witness outside the p'-hook list is re-checked with
/// [`is_pprime_macdonald`] and for `λ ≠ λ'` before it counts.
pub fn verify_an_bound(n: usize, p: usize) -> Result<AnBoundReport> {
    check_p_above_3(p)?;
    if n < 7 {
        return Err(Error::OutOfRange(format!("need n >= 7, got {n}")));
    }
    let case = AnCase::classify(n, p)?;
    let mut witnesses = hook_witnesses(n, p)?;
    match case {
        AnCase::Generic => {}
        AnCase::OnePlusMultiple { .. } => {
            let family = (0..=(n - 6) / 2).map(|t| quasihook(n, 2, t));
            witnesses.extend(certify(family, p)?);
        }
        AnCase::TwoPlusPower { k } if p.pow(k) == 5 => {
            for lambda in enumerate_partitions_bounded(n, n)? {
                if is_pprime_macdonald(&lambda, p)? && !lambda.is_self_conjugate() {
                    let degree = degree(&lambda)?;
                    witnesses.push(Witness { partition: lambda, degree });
                }
            }
        }
        AnCase::TwoPlusPower { .. } => {
            let family = (0..=(n - 7) / 2).map(|t| quasihook(n, 3, t));
            witnesses.extend(certify(family, p)?);
        }
        AnCase::OnePlusTwoPowers { k, h } => {
            witnesses.extend(certify(row_extensions(p, k, h)?.into_iter().map(Ok), p)?);
        }
    }
    dedup_witnesses(&mut witnesses);
    let distinct_degrees: BTreeSet<BigUint> = witnesses.iter().map(|w| w.degree.clone()).collect();
    let holds = distinct_degrees.len() >= 3 && distinct_degrees.contains(&BigUint::one());
    Ok(AnBoundReport { n, p, case, witnesses, distinct_degrees, holds })
}

/// `(γ_1 + p^h, γ_2, ...)` for every `γ ∈ P_{p'}(1 + p^k)`.
pub fn row_extensions(p: usize, k: u32, h: u32) -> Result<Vec<Partition>> {
    let extra = p.pow(h);
    pprime_partitions_small(1 + p.pow(k), p)?
        .into_iter()
        .map(|gamma| {
            let mut parts = gamma.parts().to_vec();
            parts[0] += extra;
            Partition::new(parts)
        })
        .collect()
}

/// p'-hooks with `λ_1 > λ'_1`; their degrees are pairwise distinct.
fn hook_witnesses(n: usize, p: usize) -> Result<Vec<Witness>> {
    list_pprime_hooks(n, p)?
        .into_iter()
        .filter(|h| h.part(1) > h.len())
        .map(|h| {
            let degree = hook_degree(n, h.len() - 1)?;
            Ok(Witness { partition: h, degree })
        })
        .collect()
}

fn certify(candidates: impl Iterator<Item = Result<Partition>>, p: usize) -> Result<Vec<Witness>> {
    let mut out = Vec::new();
    for lambda in candidates {
        let lambda = lambda?;
        if !lambda.is_self_conjugate() && is_pprime_macdonald(&lambda, p)? {
            let degree = degree(&lambda)?;
            out.push(Witness { partition: lambda, degree });
        }
    }
    Ok(out)
}

fn dedup_witnesses(witnesses: &mut Vec<Witness>) {
    let mut seen = BTreeSet::new();
    witnesses.retain(|w| seen.insert(w.partition.clone()));
}

/// Every certified family at once: p'-hooks, both quasihook families over
/// their full range, and the row extensions when `n = 1 + p^k + p^h`.
fn constructive_witnesses(n: usize, p: usize) -> Result<Vec<Witness>> {
    let mut witnesses = hook_witnesses(n, p)?;
    for c in [2, 3] {
        if n >= 4 + c {
            witnesses.extend(certify((0..=n - 2 * c).map(|t| quasihook(n, c, t)), p)?);
        }
    }
    if let AnCase::OnePlusTwoPowers { k, h } = AnCase::classify(n, p)? {
        witnesses.extend(certify(row_extensions(p, k, h)?.into_iter().map(Ok), p)?);
    }
    dedup_witnesses(&mut witnesses);
    Ok(witnesses)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn legs(hooks: &[Partition]) -> Vec<usize> {
        hooks.iter().map(|h| h.len() - 1).collect()
    }

    #[test]
    fn filtered_hooks() {
        assert_eq!(legs(&list_pprime_hooks(6, 5).unwrap()), vec![0, 5]);
        assert_eq!(legs(&list_pprime_hooks(7, 5).unwrap()), vec![0, 1, 5, 6]);
        assert_eq!(list_pprime_hooks(25, 5).unwrap().len(), 25);
        assert_eq!(list_pprime_hooks(7, 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn counting_formula() {
        assert_eq!(count_pprime_hooks_formula(7, 5).unwrap(), 4);
        assert_eq!(count_pprime_hooks_formula(6, 5).unwrap(), 2);
        assert_eq!(count_pprime_hooks_formula(49, 7).unwrap(), 49);
        assert_eq!(count_pprime_hooks_formula(125, 5).unwrap(), 125);
    }

    #[test]
    fn layered_construction() {
        assert_eq!(layered_pprime_hooks(7, 5).unwrap(), list_pprime_hooks(7, 5).unwrap());
        assert_eq!(layered_pprime_hooks(5, 5).unwrap().len(), 5);
        assert_eq!(
            layered_pprime_hooks(6, 5).unwrap(),
            vec![Partition::row(6), Partition::column(6)]
        );
    }

    #[test]
    fn halved_bound() {
        assert_eq!(halved_count_lower_bound(7, 5).unwrap(), 2);
        assert_eq!(halved_count_lower_bound(25, 5).unwrap(), 12);
        assert_eq!(halved_count_lower_bound(6, 5).unwrap(), 1);
    }

    #[test]
    fn quasihook_shapes() {
        assert_eq!(quasihook(13, 2, 0).unwrap(), p(&[11, 2]));
        assert_eq!(quasihook(8, 3, 1).unwrap(), p(&[4, 3, 1]));
        assert!(quasihook(13, 5, 2).is_err());
        assert!(quasihook(5, 2, 0).is_err());
        assert!(quasihook(8, 2, 5).is_err());
        assert_eq!(quasihook_unchecked(13, 5, 2), p(&[6, 5, 1, 1]));
    }

    #[test]
    fn quasihook_monotonicity() {
        assert!(quasihook_monotone(13, 2, 0).unwrap());
        assert!(quasihook_monotone(12, 3, 1).unwrap());
        assert!(quasihook_monotone(13, 2, 4).is_err());
        assert!(!degree_increases(&p(&[6, 5, 1, 1]), &p(&[5, 5, 1, 1, 1])).unwrap());
    }

    #[test]
    fn small_pprime_lists() {
        let six = pprime_partitions_small(6, 5).unwrap();
        assert_eq!(
            six,
            vec![p(&[6]), p(&[4, 2]), p(&[3, 2, 1]), p(&[2, 2, 1, 1]), Partition::column(6)]
        );
        assert_eq!(pprime_partitions_small(8, 7).unwrap().len(), 7);
        assert_eq!(pprime_partitions_small(26, 5).unwrap().len(), 25);
        assert!(pprime_partitions_small(7, 5).is_err());
        assert!(pprime_partitions_small(2, 5).is_err());
    }

    #[test]
    fn ext_sets() {
        let five = ext_pprime_degree_set(5, 5, ScanConfig::default()).unwrap();
        assert_eq!(five.mode, ExtMode::Exact);
        let expect: BTreeSet<BigUint> = [1u32, 4].into_iter().map(BigUint::from).collect();
        assert_eq!(five.degrees, expect);
        assert!(ext_pprime_degree_set(7, 5, ScanConfig::default()).unwrap().degrees.len() >= 3);
        let eight = ext_pprime_degree_set(8, 7, ScanConfig::default()).unwrap();
        assert!(eight.degrees.contains(&BigUint::one()) && eight.degrees.len() >= 3);
        let big = ext_pprime_degree_set(45, 5, ScanConfig::default()).unwrap();
        assert_eq!(big.mode, ExtMode::Constructive);
        assert!(ext_pprime_degree_set(7, 3, ScanConfig::default()).is_err());
    }

    #[test]
    fn case_split() {
        assert_eq!(AnCase::classify(26, 5).unwrap(), AnCase::OnePlusMultiple { a: 1, k: 2 });
        assert_eq!(AnCase::classify(27, 5).unwrap(), AnCase::TwoPlusPower { k: 2 });
        assert_eq!(AnCase::classify(31, 5).unwrap(), AnCase::OnePlusTwoPowers { k: 1, h: 2 });
        assert_eq!(AnCase::classify(21, 5).unwrap(), AnCase::OnePlusMultiple { a: 4, k: 1 });
        assert_eq!(AnCase::classify(50, 5).unwrap(), AnCase::Generic);
    }

    #[test]
    fn an_bound_examples() {
        for (n, prime) in [(7, 5), (26, 5), (27, 5), (21, 5), (31, 5)] {
            let report = verify_an_bound(n, prime).unwrap();
            assert!(report.holds, "n={n} p={prime}: {:?}", report.distinct_degrees);
        }
        assert!(verify_an_bound(6, 5).is_err());
    }
}
