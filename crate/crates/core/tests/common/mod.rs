//! Independent oracles for the integration and acceptance tests. Nothing here
//! calls into the library's bar or core routines.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;

/// Bar lengths from the set formula: for each part `a_i`, `{1..a_i}` plus the
/// sums `a_i + a_j` minus the differences `a_i - a_j`, over `j > i`.
pub fn oracle_bar_lengths(parts: &[u64]) -> Vec<u64> {
    let mut parts = parts.to_vec();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = Vec::new();
    for (i, &a) in parts.iter().enumerate() {
        let smaller = &parts[i + 1..];
        out.extend((1..=a).filter(|&l| !smaller.iter().any(|&b| a - b == l)));
        out.extend(smaller.iter().map(|&b| a + b));
    }
    out.sort_unstable();
    out
}

pub fn oracle_h(parts: &[u64]) -> BigUint {
    oracle_bar_lengths(parts)
        .into_iter()
        .fold(BigUint::one(), |acc, l| acc * l)
}

/// Core and weight by runner counting: parts divisible by `p` vanish, beads
/// on runners `j` and `p - j` cancel in pairs, and the surviving beads on a
/// runner slide down to `j, j + p, ...`.
pub fn oracle_core(parts: &[u64], p: u64) -> (Vec<u64>, u64) {
    let mut count: BTreeMap<u64, i64> = BTreeMap::new();
    for &a in parts {
        if a % p != 0 {
            *count.entry(a % p).or_default() += 1;
        }
    }
    let mut core = Vec::new();
    for j in 1..p {
        let net = count.get(&j).copied().unwrap_or(0) - count.get(&(p - j)).copied().unwrap_or(0);
        for k in 0..net.max(0) as u64 {
            core.push(j + k * p);
        }
    }
    core.sort_unstable_by(|a, b| b.cmp(a));
    let n: u64 = parts.iter().sum();
    let c: u64 = core.iter().sum();
    assert_eq!((n - c) % p, 0);
    (core, (n - c) / p)
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Distinct-part partitions of `n <= 24` as subsets of `{1..n}`, by bitmask.
pub fn oracle_distinct_partitions(n: u64) -> Vec<Vec<u64>> {
    assert!(n <= 24);
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let parts: Vec<u64> = (1..=n)
            .rev()
            .filter(|&k| mask & (1 << (k - 1)) != 0)
            .collect();
        if parts.iter().sum::<u64>() == n {
            out.push(parts);
        }
    }
    out
}

pub fn valuation(x: &BigUint, p: u64) -> u64 {
    let mut x = x.clone();
    let p = BigUint::from(p);
    let mut k = 0;
    while &x % &p == BigUint::from(0u32) {
        x /= &p;
        k += 1;
    }
    k
}
