//! The hook length formula and the witness search against independent
//! recomputation.

use chardeg::alternating::{check_prop42, check_prop42_range, SearchMode};
use chardeg::arith::{factorial, Natural};
use chardeg::partition::{enumerate_gamma, gamma_of_size, partitions_of, Partition};
use num_traits::{One, Pow, Zero};

/// Number of standard Young tableaux by removing corners recursively.
fn syt_count(
    parts: &[usize],
    memo: &mut std::collections::HashMap<Vec<usize>, Natural>,
) -> Natural {
    if parts.iter().sum::<usize>() <= 1 {
        return Natural::one();
    }
    if let Some(v) = memo.get(parts) {
        return v.clone();
    }
    let mut total = Natural::zero();
    for i in 0..parts.len() {
        let is_corner = i + 1 == parts.len() || parts[i + 1] < parts[i];
        if is_corner {
            let mut smaller = parts.to_vec();
            smaller[i] -= 1;
            if smaller[i] == 0 {
                smaller.pop();
            }
            total += syt_count(&smaller, memo);
        }
    }
    memo.insert(parts.to_vec(), total.clone());
    total
}

#[test]
fn hook_formula_matches_tableau_count() {
    let mut memo = std::collections::HashMap::new();
    for n in 1..=14 {
        for lambda in partitions_of(n) {
            assert_eq!(
                lambda.degree().unwrap(),
                syt_count(lambda.parts(), &mut memo),
                "{lambda}"
            );
        }
    }
}

#[test]
fn squares_sum_to_factorial() {
    for n in 1..=16 {
        let sum: Natural = partitions_of(n)
            .map(|l| Pow::pow(l.degree().unwrap(), 2u32))
            .sum();
        assert_eq!(sum, factorial(n as u64), "n = {n}");
    }
}

#[test]
fn conjugates_share_degree() {
    for n in 1..=18 {
        for lambda in partitions_of(n) {
            assert_eq!(
                lambda.degree().unwrap(),
                lambda.conjugate().degree().unwrap()
            );
            assert_eq!(lambda.conjugate().conjugate(), lambda);
        }
    }
}

#[test]
fn gamma_matches_brute_force_filter() {
    for m in 2..=5 {
        let lo = Partition::new(vec![m; m]).unwrap();
        let hi = Partition::new(vec![m + 2; m]).unwrap();
        for n in m * m..=m * m + 2 * m {
            let mut expected: Vec<Partition> = partitions_of(n)
                .filter(|l| hi.contains(l) && l.contains(&lo))
                .collect();
            let mut got = gamma_of_size(m, n);
            expected.sort();
            got.sort();
            assert_eq!(got, expected, "m = {m}, n = {n}");
        }
        assert_eq!(
            enumerate_gamma(m).count(),
            (0..=m * m + 2 * m)
                .map(|n| gamma_of_size(m, n).len())
                .sum::<usize>()
        );
    }
}

/// `exists lambda, not self-conjugate, with degree^14 > n! (n-1)^14`.
fn brute_force_exists(n: usize) -> bool {
    let bound = factorial(n as u64) * Pow::pow(Natural::from(n as u64 - 1), 14u32);
    partitions_of(n).any(|l| !l.is_self_conjugate() && Pow::pow(l.degree().unwrap(), 14u32) > bound)
}

#[test]
fn witness_search_agrees_with_brute_force() {
    for n in 7..=30 {
        assert_eq!(
            check_prop42(n).unwrap().passed,
            brute_force_exists(n),
            "n = {n}"
        );
    }
}

#[test]
fn reported_degree_is_consistent() {
    for r in check_prop42_range(7, 80, SearchMode::First, Some(4)).unwrap() {
        assert!(r.passed);
        assert_eq!(r.degree, r.witness.degree().unwrap());
        assert_eq!(&r.degree * &r.hook_product, factorial(r.n as u64));
        assert!(!r.witness.is_self_conjugate());
        assert_eq!(r.witness.size(), r.n);
    }
}

#[test]
fn best_mode_never_beats_exhaustive_minimum() {
    for n in 7..=20 {
        let best = check_prop42_range(n, n, SearchMode::Best, None)
            .unwrap()
            .remove(0);
        let min = partitions_of(n)
            .filter(|l| !l.is_self_conjugate())
            .map(|l| l.hooks().product)
            .min()
            .unwrap();
        assert_eq!(best.hook_product, min, "n = {n}");
    }
}
