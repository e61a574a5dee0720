//! Integer partitions, Young-diagram hooks, e-cores and p-adic digits.
//!
//! Rows and columns are 1-indexed in the public API, matching the usual
//! `(i, j)` node convention for Young diagrams.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};

/// Default upper bound on `n` for full partition scans.
pub const DEFAULT_ENUMERATION_BOUND: usize = 60;

/// A weakly decreasing sequence of positive integers.
///
/// The empty partition is the unique partition of 0. Trailing zeros are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
}

impl Partition {
    /// Validates and wraps `parts`. Zero parts are rejected rather than
    /// silently dropped.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        let n = parts.iter().sum();
        Ok(Partition { parts, n })
    }

    // Callers guarantee the invariants.
    fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        let n = parts.iter().sum();
        Partition { parts, n }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new(), n: 0 }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self::from_sorted(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self::from_sorted(vec![1; n])
    }

    /// The hook `(n - x, 1^x)`.
    pub fn hook(n: usize, x: usize) -> Result<Self> {
        if n == 0 || x >= n {
            return Err(Error::OutOfRange(format!("hook (n - x, 1^x) needs 0 <= x < n, got n={n} x={x}")));
        }
        let mut parts = Vec::with_capacity(x + 1);
        parts.push(n - x);
        parts.extend(std::iter::repeat_n(1, x));
        Ok(Self::from_sorted(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`, the number of boxes.
    pub fn size(&self) -> usize {
        self.n
    }

    /// Number of nonzero parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` for 1-indexed `i`; zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// True for `(n - x, 1^x)` shapes, i.e. `λ_2 <= 1`.
    pub fn is_hook(&self) -> bool {
        self.part(2) <= 1
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let mut cols = vec![0usize; width];
        for &row in &self.parts {
            for c in cols.iter_mut().take(row) {
                *c += 1;
            }
        }
        Self::from_sorted(cols)
    }

    pub fn is_self_conjugate(&self) -> bool {
        *self == self.conjugate()
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        row >= 1 && col >= 1 && col <= self.part(row)
    }

    /// Arm plus leg plus one at node `(row, col)`.
    pub fn hook_length(&self, row: usize, col: usize) -> Result<usize> {
        if !self.contains(row, col) {
            return Err(Error::NodeOutOfDiagram { row, col });
        }
        let conj = self.conjugate();
        Ok(self.part(row) - col + conj.part(col) - row + 1)
    }

    /// All hook lengths, row by row, left to right.
    pub fn hook_multiset(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.n);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                // 0-indexed: arm = row - j - 1, leg = λ'_j - i - 1
                hooks.push(row - j + conj.parts[j] - i - 1);
            }
        }
        hooks
    }

    /// Hook lengths divisible by `e`.
    pub fn divisible_hooks(&self, e: usize) -> Vec<usize> {
        assert!(e >= 1, "divisor must be positive");
        self.hook_multiset().into_iter().filter(|h| h % e == 0).collect()
    }

    /// First-column hook lengths `λ_i + ℓ - i`, strictly decreasing.
    pub fn beta_set(&self) -> Vec<usize> {
        let len = self.parts.len();
        self.parts.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect()
    }

    /// The e-core, computed on an e-runner abacus: beads are pushed to the
    /// top of each runner.
    pub fn e_core(&self, e: usize) -> Partition {
        assert!(e >= 1, "core modulus must be positive");
        let len = self.parts.len();
        let mut beads = vec![0usize; e];
        for b in self.beta_set() {
            beads[b % e] += 1;
        }
        let mut core: Vec<usize> = beads
            .iter()
            .enumerate()
            .flat_map(|(runner, &count)| (0..count).map(move |level| runner + level * e))
            .collect();
        core.sort_unstable_by(|a, b| b.cmp(a));
        let parts = core
            .iter()
            .enumerate()
            .map(|(i, &b)| b - (len - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        Self::from_sorted(parts)
    }

    /// Number of e-hooks removed on the way to the e-core.
    pub fn e_weight(&self, e: usize) -> usize {
        (self.n - self.e_core(e).n) / e
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

/// Parses the comma-separated form `"4,1"`; the empty string is `()`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Base-p digits of `n` with zero digits omitted: `n = Σ a_j p^{e_j}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PAdicExpansion {
    pub p: usize,
    /// `(digit, exponent)` pairs, exponents strictly increasing, digits in `1..p`.
    pub digits: Vec<(usize, u32)>,
}

impl PAdicExpansion {
    pub fn new(n: usize, p: usize) -> Result<Self> {
        arith::check_prime(p as u64)?;
        let mut digits = Vec::new();
        let mut rest = n;
        let mut exp = 0u32;
        while rest > 0 {
            let a = rest % p;
            if a != 0 {
                digits.push((a, exp));
            }
            rest /= p;
            exp += 1;
        }
        Ok(PAdicExpansion { p, digits })
    }

    pub fn value(&self) -> usize {
        self.digits.iter().map(|&(a, e)| a * self.p.pow(e)).sum()
    }

    /// Number of nonzero digits.
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// The most significant `(digit, exponent)`.
    pub fn top(&self) -> Option<(usize, u32)> {
        self.digits.last().copied()
    }
}

pub fn p_adic_expansion(n: usize, p: usize) -> Result<PAdicExpansion> {
    PAdicExpansion::new(n, p)
}

/// Partitions of `n` in descending lexicographic order.
#[derive(Clone, Debug)]
pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Partitions {
    fn new(n: usize) -> Self {
        Partitions { current: Some(if n == 0 { Vec::new() } else { vec![n] }) }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let out = self.current.take()?;
        // Successor: lower the last part > 1 by one and refill greedily.
        let mut next = out.clone();
        if let Some(k) = next.iter().rposition(|&p| p > 1) {
            let ones = next.len() - k - 1;
            next[k] -= 1;
            let v = next[k];
            next.truncate(k + 1);
            let mut rem = ones + 1;
            while rem > v {
                next.push(v);
                rem -= v;
            }
            if rem > 0 {
                next.push(rem);
            }
            self.current = Some(next);
        }
        Some(Partition::from_sorted(out))
    }
}

/// All partitions of `n`, bounded by [`DEFAULT_ENUMERATION_BOUND`].
pub fn enumerate_partitions(n: usize) -> Result<Partitions> {
    enumerate_partitions_bounded(n, DEFAULT_ENUMERATION_BOUND)
}

pub fn enumerate_partitions_bounded(n: usize, bound: usize) -> Result<Partitions> {
    if n > bound {
        return Err(Error::ScanBoundExceeded { n, bound });
    }
    Ok(Partitions::new(n))
}

/// The `n` hooks `(n - x, 1^x)` for `x = 0..n`.
pub fn enumerate_hooks(n: usize) -> impl Iterator<Item = Partition> {
    (0..n).map(move |x| Partition::hook(n, x).expect("x < n"))
}
