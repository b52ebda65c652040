//! Bar partitions and their bars.
//!
//! A bar partition is a partition into distinct parts. Its bars come in three
//! kinds: sliding a part `y` down to a smaller non-part `x` (type 1), deleting
//! a part (type 2), and deleting two parts at once (type 3, "mixed"). The
//! lengths of all bars of a partition of `n` form a multiset of size `n`, and
//! removing bars of length divisible by `p` leads to the `p`-bar core.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::prime::OddPrime;

/// A partition into strictly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BarPartition {
    parts: Vec<u64>,
}

impl BarPartition {
    /// Validates `parts` and stores them in decreasing order.
    pub fn new(parts: impl Into<Vec<u64>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.contains(&0) {
            return Err(Error::NonPositivePart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        if let Some(w) = parts.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedPart(w[0]));
        }
        Ok(BarPartition { parts })
    }

    /// Like [`BarPartition::new`] but for signed input, rejecting negatives.
    pub fn from_signed(parts: &[i64]) -> Result<Self> {
        let parts = parts
            .iter()
            .map(|&a| u64::try_from(a).map_err(|_| Error::NonPositivePart))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    pub fn empty() -> Self {
        BarPartition { parts: Vec::new() }
    }

    /// Callers guarantee the parts are positive, distinct and decreasing.
    fn from_sorted_unchecked(parts: Vec<u64>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] > w[1]));
        debug_assert!(parts.last().is_none_or(|&a| a > 0));
        BarPartition { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// The partitioned integer `n`.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of parts `m`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains_part(&self, x: u64) -> bool {
        self.parts.binary_search_by(|a| x.cmp(a)).is_ok()
    }

    /// Part at 1-based position `i` (largest part is position 1).
    pub fn part_at(&self, i: usize) -> Option<u64> {
        i.checked_sub(1).and_then(|k| self.parts.get(k).copied())
    }

    /// Returns a copy with `x` added as a new part.
    pub fn with_part(&self, x: u64) -> Result<Self> {
        let mut parts = self.parts.clone();
        parts.push(x);
        Self::new(parts)
    }

    /// Returns a copy with part `old` replaced by `new`.
    pub fn with_replaced_part(&self, old: u64, new: u64) -> Result<Self> {
        if !self.contains_part(old) {
            return Err(Error::Precondition(format!(
                "{old} is not a part of {self}"
            )));
        }
        let parts: Vec<u64> = self
            .parts
            .iter()
            .map(|&a| if a == old { new } else { a })
            .collect();
        Self::new(parts)
    }

    /// Order used for enumeration output: decreasing lexicographic on parts.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }

    /// All bar lengths as a flat multiset (the lengths of [`bars`], without the big-integer products).
    pub fn bar_lengths(&self) -> Vec<u64> {
        let mut lengths = Vec::with_capacity(self.size() as usize);
        for (k, &a) in self.parts.iter().enumerate() {
            for x in 0..a {
                if !self.contains_part(x) {
                    lengths.push(a - x);
                }
            }
            lengths.extend(self.parts[k + 1..].iter().map(|&b| a + b));
        }
        lengths
    }
}

impl PartialOrd for BarPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Shorter partitions first, then decreasing-lexicographic on parts.
impl Ord for BarPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.canonical_cmp(other))
    }
}

impl fmt::Display for BarPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        for (k, a) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl FromStr for BarPartition {
    type Err = Error;

    /// Parses `"8,1"`; `"-"` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_signed(&parts)
    }
}

/// Structural description of a bar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BarKind {
    /// Slide part `y` down to the non-part `x`, `0 < x < y`.
    Type1 { x: u64, y: u64 },
    /// Delete part `y`.
    Type2 { y: u64 },
    /// Delete the parts at 1-based positions `i < j`.
    Type3 { i: usize, j: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Bar {
    pub kind: BarKind,
    pub length: u64,
}

impl Bar {
    pub fn type1(x: u64, y: u64) -> Self {
        Bar {
            kind: BarKind::Type1 { x, y },
            length: y.saturating_sub(x),
        }
    }

    pub fn type2(y: u64) -> Self {
        Bar {
            kind: BarKind::Type2 { y },
            length: y,
        }
    }

    /// A type 3 bar of `lambda` at positions `i < j`; the length is read off `lambda`.
    pub fn type3(lambda: &BarPartition, i: usize, j: usize) -> Result<Self> {
        match (lambda.part_at(i), lambda.part_at(j)) {
            (Some(a), Some(b)) if i < j => Ok(Bar {
                kind: BarKind::Type3 { i, j },
                length: a + b,
            }),
            _ => Err(Error::NotABar {
                bar: format!("type3(i={i},j={j})"),
                partition: lambda.to_string(),
            }),
        }
    }

    pub fn is_mixed(&self) -> bool {
        matches!(self.kind, BarKind::Type3 { .. })
    }

    /// The (larger) part the bar acts on.
    fn anchor(&self, lambda: &BarPartition) -> u64 {
        match self.kind {
            BarKind::Type1 { y, .. } | BarKind::Type2 { y } => y,
            BarKind::Type3 { i, .. } => lambda.part_at(i).unwrap_or(0),
        }
    }
}

impl fmt::Display for Bar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            BarKind::Type1 { x, y } => write!(f, "type1(x={x},y={y};len={})", self.length),
            BarKind::Type2 { y } => write!(f, "type2(y={y};len={})", self.length),
            BarKind::Type3 { i, j } => write!(f, "type3(i={i},j={j};len={})", self.length),
        }
    }
}

/// Every bar of a partition together with the exact products of bar lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BarTable {
    pub bars: Vec<Bar>,
    /// Product of all bar lengths.
    pub h_total: BigUint,
    /// Product of type 1 and type 2 lengths.
    pub h_unmixed: BigUint,
    /// Product of type 3 lengths.
    pub h_mixed: BigUint,
}

impl BarTable {
    pub fn lengths(&self) -> impl Iterator<Item = u64> + '_ {
        self.bars.iter().map(|b| b.length)
    }
}

/// Lists the bars of `lambda`: for each part `a_i`, the unmixed bars of lengths
/// `{1..a_i}` minus the differences to smaller parts, then the mixed bars
/// `a_i + a_j` for `j > i`.
pub fn bars(lambda: &BarPartition) -> BarTable {
    let parts = lambda.parts();
    let mut out = Vec::with_capacity(lambda.size() as usize);
    let mut h_unmixed = BigUint::one();
    let mut h_mixed = BigUint::one();
    for (k, &a) in parts.iter().enumerate() {
        for x in (0..a).rev() {
            if x == 0 {
                out.push(Bar::type2(a));
            } else if !lambda.contains_part(x) {
                out.push(Bar::type1(x, a));
            } else {
                continue;
            }
            h_unmixed *= a - x;
        }
        for (l, &b) in parts.iter().enumerate().skip(k + 1) {
            out.push(Bar {
                kind: BarKind::Type3 { i: k + 1, j: l + 1 },
                length: a + b,
            });
            h_mixed *= a + b;
        }
    }
    let h_total = &h_unmixed * &h_mixed;
    BarTable {
        bars: out,
        h_total,
        h_unmixed,
        h_mixed,
    }
}

fn not_a_bar(lambda: &BarPartition, bar: &Bar) -> Error {
    Error::NotABar {
        bar: bar.to_string(),
        partition: lambda.to_string(),
    }
}

/// Checks that `bar` is one of the bars of `lambda`.
pub fn is_bar_of(lambda: &BarPartition, bar: &Bar) -> bool {
    match bar.kind {
        BarKind::Type1 { x, y } => {
            0 < x
                && x < y
                && lambda.contains_part(y)
                && !lambda.contains_part(x)
                && bar.length == y - x
        }
        BarKind::Type2 { y } => lambda.contains_part(y) && bar.length == y,
        BarKind::Type3 { i, j } => match (lambda.part_at(i), lambda.part_at(j)) {
            (Some(a), Some(b)) => 1 <= i && i < j && bar.length == a + b,
            _ => false,
        },
    }
}

/// Removes `bar` from `lambda`. The result has size `|lambda| - bar.length`.
pub fn remove_bar(lambda: &BarPartition, bar: &Bar) -> Result<BarPartition> {
    if !is_bar_of(lambda, bar) {
        return Err(not_a_bar(lambda, bar));
    }
    let parts = lambda.parts();
    let mut out: Vec<u64> = match bar.kind {
        BarKind::Type1 { x, y } => parts.iter().map(|&a| if a == y { x } else { a }).collect(),
        BarKind::Type2 { y } => parts.iter().copied().filter(|&a| a != y).collect(),
        BarKind::Type3 { i, j } => parts
            .iter()
            .enumerate()
            .filter(|&(k, _)| k + 1 != i && k + 1 != j)
            .map(|(_, &a)| a)
            .collect(),
    };
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(BarPartition::from_sorted_unchecked(out))
}

/// All bars of `lambda` with length exactly `len`.
pub fn bars_of_length(lambda: &BarPartition, len: u64) -> Vec<Bar> {
    let parts = lambda.parts();
    let mut out = Vec::new();
    for (k, &a) in parts.iter().enumerate() {
        if a == len {
            out.push(Bar::type2(a));
        } else if a > len && !lambda.contains_part(a - len) {
            out.push(Bar::type1(a - len, a));
        }
        for (l, &b) in parts.iter().enumerate().skip(k + 1) {
            if a + b == len {
                out.push(Bar {
                    kind: BarKind::Type3 { i: k + 1, j: l + 1 },
                    length: len,
                });
            }
        }
    }
    out
}

/// Number of bars of `lambda` whose length is divisible by `d`.
pub fn count_bars_divisible_by(lambda: &BarPartition, d: u64) -> u64 {
    lambda
        .bar_lengths()
        .into_iter()
        .filter(|l| l % d == 0)
        .count() as u64
}

pub fn is_bar_core(lambda: &BarPartition, p: OddPrime) -> bool {
    count_bars_divisible_by(lambda, p.get()) == 0
}

/// Picks the length-`p` bar on the largest part; type 3 first on ties.
fn preferred_bar(lambda: &BarPartition, candidates: &[Bar]) -> Option<Bar> {
    candidates.iter().copied().max_by(|a, b| {
        a.anchor(lambda)
            .cmp(&b.anchor(lambda))
            .then_with(|| a.is_mixed().cmp(&b.is_mixed()))
    })
}

/// The `p`-bar core of `lambda` and its `p`-bar weight.
///
/// Removes bars of length exactly `p` one at a time until no bar length is
/// divisible by `p`. The number of removals must match the number of bar
/// lengths divisible by `p`, and the sizes must balance; either mismatch is
/// reported as an internal failure.
pub fn bar_core_and_weight(lambda: &BarPartition, p: OddPrime) -> Result<(BarPartition, u64)> {
    let p = p.get();
    let expected = count_bars_divisible_by(lambda, p);
    let mut current = lambda.clone();
    let mut w = 0u64;
    loop {
        let candidates = bars_of_length(&current, p);
        let Some(bar) = preferred_bar(&current, &candidates) else {
            if count_bars_divisible_by(&current, p) > 0 {
                return Err(Error::Internal(format!(
                    "{current} has a bar length divisible by {p} but no removable bar of length {p}"
                )));
            }
            break;
        };
        current = remove_bar(&current, &bar)?;
        w += 1;
    }
    if w != expected || lambda.size() != current.size() + p * w {
        return Err(Error::Internal(format!(
            "core of {lambda} at p = {p}: {w} removals but {expected} bar lengths divisible by p"
        )));
    }
    Ok((current, w))
}

/// Counts of bar lengths divisible by `p`, `p^2`, ... and their sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightTower {
    /// `weights[k - 1]` is the number of bar lengths divisible by `p^k`;
    /// trailing zeros are dropped.
    pub weights: Vec<u64>,
    /// Sum of the weights, equal to the `p`-adic valuation of the product of bar lengths.
    pub valuation: u64,
}

impl WeightTower {
    /// Weight at level `k >= 1`.
    pub fn weight(&self, k: usize) -> u64 {
        k.checked_sub(1)
            .and_then(|i| self.weights.get(i).copied())
            .unwrap_or(0)
    }

    /// Sum of the weights from level 2 upwards.
    pub fn higher_sum(&self) -> u64 {
        self.weights.iter().skip(1).sum()
    }
}

pub fn weight_tower(lambda: &BarPartition, p: OddPrime) -> WeightTower {
    let p = p.get();
    let lengths = lambda.bar_lengths();
    let mut weights = Vec::new();
    let mut modulus = p;
    loop {
        let count = lengths.iter().filter(|&&l| l % modulus == 0).count() as u64;
        if count == 0 {
            break;
        }
        weights.push(count);
        match modulus.checked_mul(p) {
            Some(next) => modulus = next,
            None => break,
        }
    }
    let valuation = weights.iter().sum();
    WeightTower { weights, valuation }
}

/// All partitions of `n` into distinct parts, in decreasing lexicographic order.
pub fn enumerate_bar_partitions(n: u64) -> Vec<BarPartition> {
    fn go(remaining: u64, max_part: u64, prefix: &mut Vec<u64>, out: &mut Vec<BarPartition>) {
        if remaining == 0 {
            out.push(BarPartition::from_sorted_unchecked(prefix.clone()));
            return;
        }
        // Parts below `first` can sum to at most first*(first-1)/2.
        for first in (1..=max_part.min(remaining)).rev() {
            if first * (first + 1) / 2 < remaining {
                break;
            }
            prefix.push(first);
            go(remaining - first, first - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All bar partitions of `|gamma| + p*w` whose `p`-bar core is `gamma`.
pub fn labels_with_core_and_weight(
    gamma: &BarPartition,
    p: OddPrime,
    w: u64,
) -> Result<Vec<BarPartition>> {
    if !is_bar_core(gamma, p) {
        return Err(Error::NotACore {
            partition: gamma.to_string(),
            p: p.get(),
        });
    }
    let n = gamma.size() + p.get() * w;
    let mut out = Vec::new();
    for lambda in enumerate_bar_partitions(n) {
        let (core, weight) = bar_core_and_weight(&lambda, p)?;
        if &core == gamma {
            debug_assert_eq!(weight, w);
            out.push(lambda);
        }
    }
    Ok(out)
}
