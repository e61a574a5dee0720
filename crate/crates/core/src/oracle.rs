//! Brute-force cross-checks kept deliberately separate from the fast paths.
//!
//! Nothing here touches beta-sets or abaci: cores are found by peeling rim
//! hooks off the diagram one at a time, and binomial coprimality is decided
//! digit by digit.

use crate::partition::Partition;

/// Which removable e-rim-hook to peel first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RemovalOrder {
    /// Smallest column among nodes with hook length `e`.
    Leftmost,
    /// Largest column among nodes with hook length `e`.
    Rightmost,
}

/// Removes the rim hook attached to node `(row, col)` (1-indexed).
///
/// Rows `row..last` shift up to `λ_{k+1} - 1` and the bottom row of the hook
/// becomes `col - 1`, where `last = λ'_col`.
pub fn remove_rim_hook(lambda: &Partition, row: usize, col: usize) -> Partition {
    let mut parts = lambda.parts().to_vec();
    let last = lambda.conjugate().part(col);
    assert!(row >= 1 && row <= last, "node ({row},{col}) not in diagram");
    for k in row..last {
        parts[k - 1] = parts[k] - 1;
    }
    parts[last - 1] = col - 1;
    parts.retain(|&p| p > 0);
    Partition::new(parts).expect("rim hook removal keeps a partition")
}

/// The e-core reached by repeatedly peeling e-rim-hooks in the given order.
pub fn core_by_rim_removal(lambda: &Partition, e: usize, order: RemovalOrder) -> Partition {
    let mut current = lambda.clone();
    loop {
        let mut nodes = Vec::new();
        for (i, &row) in current.parts().iter().enumerate() {
            for j in 1..=row {
                if current.hook_length(i + 1, j).expect("node in diagram") == e {
                    nodes.push((i + 1, j));
                }
            }
        }
        let pick = match order {
            RemovalOrder::Leftmost => nodes.iter().min_by_key(|&&(i, j)| (j, i)),
            RemovalOrder::Rightmost => nodes.iter().max_by_key(|&&(i, j)| (j, i)),
        };
        match pick {
            Some(&(i, j)) => current = remove_rim_hook(&current, i, j),
            None => return current,
        }
    }
}

/// Lucas: `C(n, k)` is prime to `p` iff every base-p digit of `k` is at most
/// the matching digit of `n`.
pub fn lucas_coprime(mut n: u64, mut k: u64, p: u64) -> bool {
    if k > n {
        return false;
    }
    while k > 0 {
        if k % p > n % p {
            return false;
        }
        k /= p;
        n /= p;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn peels_single_hook() {
        let lam = Partition::new(vec![4, 1]).unwrap();
        assert_eq!(remove_rim_hook(&lam, 1, 1), Partition::empty());
        let lam = Partition::new(vec![3, 2]).unwrap();
        assert_eq!(remove_rim_hook(&lam, 1, 2), Partition::new(vec![1, 1]).unwrap());
    }

    #[test]
    fn cores_by_hand() {
        let lam = Partition::new(vec![4, 1]).unwrap();
        assert_eq!(core_by_rim_removal(&lam, 5, RemovalOrder::Leftmost), Partition::empty());
        let lam = Partition::new(vec![3, 3]).unwrap();
        // 2-core of (3,3) is empty: two dominoes each way
        assert_eq!(core_by_rim_removal(&lam, 2, RemovalOrder::Rightmost), Partition::empty());
    }

    #[test]
    fn lucas_small() {
        // C(6, x) mod 5 nonzero exactly for x in {0, 1, 5, 6}
        let hits: Vec<u64> = (0..=6).filter(|&x| lucas_coprime(6, x, 5)).collect();
        assert_eq!(hits, vec![0, 1, 5, 6]);
    }
}
