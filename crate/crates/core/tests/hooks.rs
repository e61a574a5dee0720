use std::collections::BTreeSet;

use num_bigint::BigUint;

use ppcd::degrees::{degree, is_pprime_oracle};
use ppcd::hooks::{
    count_pprime_hooks_formula, ext_pprime_degree_set, layered_pprime_hook_legs, pprime_hook_legs,
    pprime_partitions_small, quasihook, quasihook_unchecked, row_extensions, verify_an_bound, AnCase, ExtMode,
    ScanConfig,
};
use ppcd::partition::{enumerate_partitions, enumerate_partitions_bounded, Partition};

#[test]
fn counting_three_ways_for_small_primes() {
    for p in [2, 3] {
        for n in 1..=2000 {
            let legs = pprime_hook_legs(n, p).unwrap();
            assert_eq!(legs.len() as u64, count_pprime_hooks_formula(n, p).unwrap(), "n={n}, p={p}");
            assert_eq!(legs, layered_pprime_hook_legs(n, p).unwrap(), "n={n}, p={p}");
        }
    }
}

#[test]
fn c2_quasihook_degree_ratio() {
    // χ(λ(t+1)) / χ(λ(t)) = m(m-2)(t+2) / ((m-1)(t+3)(t+1)), m = n - 2 - t
    for n in 6..=120usize {
        for t in 0..n - 5 {
            let m = n - 2 - t;
            if m < 3 {
                continue;
            }
            let here = degree(&quasihook_unchecked(n, 2, t)).unwrap();
            let next = degree(&quasihook_unchecked(n, 2, t + 1)).unwrap();
            let lhs = next * BigUint::from((m - 1) * (t + 3) * (t + 1));
            let rhs = here * BigUint::from(m * (m - 2) * (t + 2));
            assert_eq!(lhs, rhs, "n={n}, t={t}");
        }
    }
}

#[test]
fn quasihook_ranges() {
    assert!(quasihook(8, 2, 4).is_ok());
    assert!(quasihook(8, 2, 5).is_err());
    assert!(quasihook(6, 3, 0).is_err());
    assert!(quasihook(9, 4, 0).is_err());
}

#[test]
fn small_pprime_lists_match_full_scan() {
    for (p, m) in [(5usize, 6usize), (7, 8), (11, 12), (13, 14), (5, 26)] {
        let scan: Vec<Partition> = enumerate_partitions(m)
            .unwrap()
            .filter(|lam| is_pprime_oracle(lam, p).unwrap())
            .collect();
        let listed = pprime_partitions_small(m, p).unwrap();
        assert_eq!(listed, scan, "m={m}, p={p}");
        assert_eq!(listed.len(), m - 1);
    }
    assert!(pprime_partitions_small(7, 5).is_err());
}

#[test]
fn row_extensions_are_pprime() {
    // n = 1 + 5 + 25 = 31
    for lam in row_extensions(5, 1, 2).unwrap() {
        assert_eq!(lam.size(), 31);
        assert!(is_pprime_oracle(&lam, 5).unwrap(), "{lam}");
    }
}

#[test]
fn case_split_covers_special_shapes() {
    assert_eq!(AnCase::classify(21, 5).unwrap(), AnCase::OnePlusMultiple { a: 4, k: 1 });
    assert_eq!(AnCase::classify(26, 5).unwrap(), AnCase::OnePlusMultiple { a: 1, k: 2 });
    assert_eq!(AnCase::classify(31, 5).unwrap(), AnCase::OnePlusTwoPowers { k: 1, h: 2 });
    assert_eq!(AnCase::classify(27, 5).unwrap(), AnCase::TwoPlusPower { k: 2 });
    assert_eq!(AnCase::classify(13, 11).unwrap(), AnCase::TwoPlusPower { k: 1 });
    assert_eq!(AnCase::classify(20, 5).unwrap(), AnCase::Generic);
}

#[test]
fn witnesses_are_genuine() {
    for p in [5, 7, 11, 13] {
        for n in 7..=60 {
            let report = verify_an_bound(n, p).unwrap();
            assert!(report.holds, "n={n}, p={p}");
            for w in &report.witnesses {
                assert!(is_pprime_oracle(&w.partition, p).unwrap(), "{} at p={p}", w.partition);
                assert!(!w.partition.is_self_conjugate());
                assert_eq!(w.degree, degree(&w.partition).unwrap());
            }
        }
    }
}

#[test]
fn constructive_mode_is_a_subset_of_exact() {
    let exact_cfg = ScanConfig { exact_bound: 40 };
    let constructive_cfg = ScanConfig { exact_bound: 0 };
    for p in [5, 7] {
        for n in 5..=30 {
            let exact = ext_pprime_degree_set(n, p, exact_cfg).unwrap();
            let built = ext_pprime_degree_set(n, p, constructive_cfg).unwrap();
            assert_eq!(exact.mode, ExtMode::Exact);
            assert_eq!(built.mode, ExtMode::Constructive);
            assert!(built.degrees.is_subset(&exact.degrees), "n={n}, p={p}");
        }
    }
}

#[test]
fn exact_set_for_n7() {
    let mut direct = BTreeSet::new();
    for lam in enumerate_partitions_bounded(7, 7).unwrap() {
        if is_pprime_oracle(&lam, 5).unwrap() && !lam.is_self_conjugate() {
            direct.insert(degree(&lam).unwrap());
        }
    }
    let set = ext_pprime_degree_set(7, 5, ScanConfig::default()).unwrap();
    assert_eq!(set.degrees, direct);
    assert!(set.degrees.len() >= 3);
}
