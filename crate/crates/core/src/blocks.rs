//! Spin `p`-blocks for odd `p`: labels grouped by `p`-bar core.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigUint;

use crate::barpart::{
    bar_core_and_weight, enumerate_bar_partitions, labels_with_core_and_weight, weight_tower,
    BarPartition,
};
use crate::error::{Error, Result};
use crate::prime::OddPrime;
use crate::spinchar::{characters_of_label, degree_valuation, Group, SpinCharacter};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DefectClass {
    DefectZero,
    Abelian,
    NonAbelian,
}

impl DefectClass {
    /// Defect groups depend only on the weight: trivial, abelian for `w < p`,
    /// non-abelian from `w = p` on.
    pub fn from_weight(w: u64, p: OddPrime) -> Self {
        if w == 0 {
            DefectClass::DefectZero
        } else if w < p.get() {
            DefectClass::Abelian
        } else {
            DefectClass::NonAbelian
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            DefectClass::DefectZero => "DefectZero",
            DefectClass::Abelian => "Abelian",
            DefectClass::NonAbelian => "NonAbelian",
        }
    }
}

impl fmt::Display for DefectClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinBlock {
    pub p: OddPrime,
    pub core: BarPartition,
    pub w: u64,
    pub group: Group,
    /// Labels in enumeration order.
    pub labels: Vec<BarPartition>,
    /// Characters label by label, associates adjacent.
    pub characters: Vec<SpinCharacter>,
    /// Height of each label, aligned with `labels`.
    pub label_heights: Vec<u64>,
    pub defect_class: DefectClass,
}

impl SpinBlock {
    /// Builds the block from its labels, materializing characters and heights.
    pub fn from_labels(
        p: OddPrime,
        core: BarPartition,
        w: u64,
        group: Group,
        labels: Vec<BarPartition>,
    ) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::Precondition(format!("empty block for core {core}")));
        }
        let mut characters = Vec::new();
        let mut valuations = Vec::with_capacity(labels.len());
        for lambda in &labels {
            let chars = characters_of_label(lambda, group)?;
            // Associates share a degree, so one valuation per label.
            valuations.push(degree_valuation(&chars[0], p));
            characters.extend(chars);
        }
        let min = valuations.iter().copied().min().unwrap_or(0);
        let label_heights = valuations.iter().map(|v| v - min).collect();
        Ok(SpinBlock {
            p,
            defect_class: DefectClass::from_weight(w, p),
            core,
            w,
            group,
            labels,
            characters,
            label_heights,
        })
    }

    pub fn n(&self) -> u64 {
        self.core.size() + self.p.get() * self.w
    }

    pub fn contains_label(&self, lambda: &BarPartition) -> bool {
        self.labels.contains(lambda)
    }

    pub fn height_of(&self, lambda: &BarPartition) -> Option<u64> {
        self.labels
            .iter()
            .position(|l| l == lambda)
            .map(|k| self.label_heights[k])
    }

    /// Characters of height zero, in block order.
    pub fn height_zero_characters(&self) -> impl Iterator<Item = &SpinCharacter> + '_ {
        self.characters
            .iter()
            .filter(move |c| self.height_of(&c.label) == Some(0))
    }
}

/// The spin `p`-blocks of the double cover of `S_n` or `A_n`, ordered by core.
pub fn spin_blocks(n: u64, p: OddPrime, group: Group) -> Result<Vec<SpinBlock>> {
    let mut by_core: BTreeMap<BarPartition, (u64, Vec<BarPartition>)> = BTreeMap::new();
    for lambda in enumerate_bar_partitions(n) {
        let (core, w) = bar_core_and_weight(&lambda, p)?;
        by_core
            .entry(core)
            .or_insert_with(|| (w, Vec::new()))
            .1
            .push(lambda);
    }
    by_core
        .into_iter()
        .map(|(core, (w, labels))| SpinBlock::from_labels(p, core, w, group, labels))
        .collect()
}

/// The single spin block with the given core and weight.
pub fn spin_block(gamma: &BarPartition, p: OddPrime, w: u64, group: Group) -> Result<SpinBlock> {
    let labels = labels_with_core_and_weight(gamma, p, w)?;
    SpinBlock::from_labels(p, gamma.clone(), w, group, labels)
}

/// Heights by label: `p`-valuation of the degree minus the block minimum.
pub fn heights(block: &SpinBlock) -> BTreeMap<BarPartition, u64> {
    block
        .labels
        .iter()
        .cloned()
        .zip(block.label_heights.iter().copied())
        .collect()
}

/// Labels whose bar lengths have maximal total count of `p^k`-divisible
/// lengths over `k >= 2`. Within a block the level-1 count is fixed, so these
/// should be exactly the height-zero labels.
pub fn height_zero_by_criterion(block: &SpinBlock) -> BTreeSet<BarPartition> {
    let sums: Vec<u64> = block
        .labels
        .iter()
        .map(|l| weight_tower(l, block.p).higher_sum())
        .collect();
    let max = sums.iter().copied().max().unwrap_or(0);
    block
        .labels
        .iter()
        .zip(&sums)
        .filter(|&(_, &s)| s == max)
        .map(|(l, _)| l.clone())
        .collect()
}

/// Whether all height-zero characters of the block share one degree, plus the
/// sorted multiset of those degrees.
pub fn equal_degree_test(block: &SpinBlock) -> (bool, Vec<BigUint>) {
    let mut degrees: Vec<BigUint> = block
        .height_zero_characters()
        .map(|c| c.degree.clone())
        .collect();
    degrees.sort();
    let flag = degrees.windows(2).all(|w| w[0] == w[1]);
    (flag, degrees)
}
