use num_bigint::BigUint;
use proptest::prelude::*;

use ppcd::arith;
use ppcd::degrees::{an_degrees, degree, degree_valuation, hook_degree, is_pprime_macdonald, is_pprime_oracle};
use ppcd::hooks::pprime_hook_legs;
use ppcd::oracle::lucas_coprime;
use ppcd::partition::{enumerate_partitions, Partition};

#[test]
fn squares_sum_to_factorial() {
    for n in 0..=12usize {
        let total: BigUint = enumerate_partitions(n)
            .unwrap()
            .map(|lam| degree(&lam).unwrap().pow(2))
            .sum();
        assert_eq!(total, arith::factorial(n as u64), "n = {n}");
    }
}

#[test]
fn alternating_squares_sum_to_half_factorial() {
    for n in 2..=12usize {
        let total: BigUint = enumerate_partitions(n)
            .unwrap()
            .filter(|lam| lam.parts() >= lam.conjugate().parts())
            .flat_map(|lam| an_degrees(&lam).unwrap())
            .map(|d| d.pow(2))
            .sum();
        assert_eq!(total * 2u32, arith::factorial(n as u64), "n = {n}");
    }
}

#[test]
fn hook_degree_matches_hook_formula() {
    for n in 1..=60 {
        for x in 0..n {
            let hook = Partition::hook(n, x).unwrap();
            assert_eq!(hook_degree(n, x).unwrap(), degree(&hook).unwrap(), "n={n}, x={x}");
        }
    }
}

#[test]
fn degrees_are_conjugation_invariant() {
    for lam in enumerate_partitions(14).unwrap() {
        assert_eq!(degree(&lam).unwrap(), degree(&lam.conjugate()).unwrap());
    }
}

#[test]
fn valuation_matches_big_integer() {
    for lam in enumerate_partitions(16).unwrap() {
        let d = degree(&lam).unwrap();
        for p in [2u64, 3, 5, 7, 11, 13] {
            let mut v = 0;
            let mut rest = d.clone();
            while arith::divides(p, &rest) {
                rest /= p;
                v += 1;
            }
            assert_eq!(degree_valuation(&lam, p as usize).unwrap(), v, "{lam}, p={p}");
        }
    }
}

#[test]
fn hook_filter_agrees_with_lucas() {
    for p in [2usize, 3, 5, 7, 11, 13] {
        for n in 1..=2000usize {
            let lucas: Vec<usize> = (0..n).filter(|&x| lucas_coprime(n as u64 - 1, x as u64, p as u64)).collect();
            assert_eq!(pprime_hook_legs(n, p).unwrap(), lucas, "n={n}, p={p}");
        }
    }
}

#[test]
fn hook_degrees_are_injective_on_long_arms() {
    // C(n-1, x) for x < (n-1)/2 strictly increases, so legs below the
    // diagonal never share a degree
    for n in 2..=200usize {
        let mut prev = BigUint::from(0u32);
        for x in 0..=(n - 1) / 2 {
            let d = hook_degree(n, x).unwrap();
            assert!(d > prev, "n={n}, x={x}");
            prev = d;
        }
    }
}

#[test]
fn pprime_tests_agree_for_small_primes() {
    for n in 0..=20 {
        for lam in enumerate_partitions(n).unwrap() {
            for p in [2, 3] {
                assert_eq!(is_pprime_macdonald(&lam, p).unwrap(), is_pprime_oracle(&lam, p).unwrap(), "{lam}, p={p}");
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pprime_tests_agree_on_large_partitions(
        parts in proptest::collection::vec(1usize..=15, 0..=10),
        p in prop::sample::select(vec![2usize, 3, 5, 7, 11, 13]),
    ) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let lam = Partition::new(parts).unwrap();
        prop_assert_eq!(is_pprime_macdonald(&lam, p).unwrap(), is_pprime_oracle(&lam, p).unwrap());
    }
}
