//! Height-zero characters of distinct degrees in spin blocks of the double
//! cover of `A_n` with non-abelian defect, and batch checking over `n`.
//!
//! The witness pair depends on the core:
//!
//! * empty core: `(p w)` and `(p w - 1, 1)`;
//! * two or more nonempty residue classes: the shifted labels for the two
//!   classes with the largest tops;
//! * exactly one nonempty class `i`: the shifted label for `i` and the
//!   added-part label.
//!
//! Every claim on a certificate is recomputed in [`verify_witness_in`]:
//! membership of the block, height zero against the full block, distinct
//! degrees, and a congruence mod `p` for the non-empty-core constructions.

use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use rayon::prelude::*;

use crate::barpart::{bar_core_and_weight, bars, BarPartition};
use crate::blocks::{equal_degree_test, spin_block, spin_blocks, DefectClass, SpinBlock};
use crate::constructions::{
    add_multiple_part, added_step_ratio, bar_product_congruence, compare_constructions,
    decompose_core, principal_pair, shift_class_top, shifted_step_ratio, ComparisonCase,
    CoreDecomposition,
};
use crate::error::{Error, Result};
use crate::prime::OddPrime;
use crate::spinchar::{characters_of_label, sigma, Group};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WitnessCase {
    EmptyCore,
    TwoClasses,
    /// One nonempty class, `n - m` even: the shifted label splits.
    UniqueClassEven,
    /// One nonempty class, `n - m` odd, `p > 3`.
    UniqueClassOdd,
    /// As above with `p = 3` and a class with at least two parts.
    UniqueClassOddP3Large,
    /// As above with `p = 3` and core `(i)`.
    UniqueClassOddP3Small,
}

impl WitnessCase {
    pub fn as_str(self) -> &'static str {
        match self {
            WitnessCase::EmptyCore => "EmptyCore",
            WitnessCase::TwoClasses => "TwoClasses",
            WitnessCase::UniqueClassEven => "UniqueClassEven",
            WitnessCase::UniqueClassOdd => "UniqueClassOdd",
            WitnessCase::UniqueClassOddP3Large => "UniqueClassOddP3Large",
            WitnessCase::UniqueClassOddP3Small => "UniqueClassOddP3Small",
        }
    }
}

impl fmt::Display for WitnessCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

impl CheckStatus {
    fn from_bool(ok: bool) -> Self {
        if ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        }
    }

    pub fn is_ok(self) -> bool {
        self != CheckStatus::Fail
    }

    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::NotApplicable => "not_applicable",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct WitnessChecks {
    pub same_block: bool,
    pub both_height_zero: bool,
    pub degrees_distinct: bool,
    pub congruence: Option<CheckStatus>,
    /// The inequality or identity the case relies on, checked exactly.
    pub case_argument: Option<CheckStatus>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessCertificate {
    pub p: OddPrime,
    pub core: BarPartition,
    pub w: u64,
    pub case: WitnessCase,
    pub label_a: BarPartition,
    pub label_b: BarPartition,
    /// Degrees of one character of each label in the double cover of `A_n`.
    pub degree_a: BigUint,
    pub degree_b: BigUint,
    pub checks: WitnessChecks,
    /// Offending values for any failed check.
    pub failures: Vec<String>,
}

impl WitnessCertificate {
    pub fn n(&self) -> u64 {
        self.core.size() + self.p.get() * self.w
    }

    pub fn is_verified(&self) -> bool {
        let c = &self.checks;
        c.same_block
            && c.both_height_zero
            && c.degrees_distinct
            && c.congruence.is_some_and(CheckStatus::is_ok)
            && c.case_argument.is_some_and(CheckStatus::is_ok)
    }
}

fn alt_degree(label: &BarPartition) -> Result<BigUint> {
    Ok(characters_of_label(label, Group::DoubleCoverAlt)?
        .swap_remove(0)
        .degree)
}

fn unique_class_case(decomp: &CoreDecomposition, i: usize, n: u64) -> WitnessCase {
    let m = decomp.gamma.len() as u64;
    if (n - m).is_multiple_of(2) {
        WitnessCase::UniqueClassEven
    } else if decomp.p.get() > 3 {
        WitnessCase::UniqueClassOdd
    } else if decomp.e[i] == i as i64 {
        WitnessCase::UniqueClassOddP3Small
    } else {
        WitnessCase::UniqueClassOddP3Large
    }
}

/// Chooses the witness labels for the block with core `gamma` and weight `w`
/// and verifies them against the full block.
///
/// Accepts `w >= p`, and also the empty core with any `w >= 2`.
pub fn build_witness(gamma: &BarPartition, p: OddPrime, w: u64) -> Result<WitnessCertificate> {
    let cert = select_witness(gamma, p, w)?;
    let block = spin_block(gamma, p, w, Group::DoubleCoverAlt)?;
    verify_witness_in(cert, &block)
}

/// Witness labels and degrees, with no checks evaluated yet.
pub fn select_witness(gamma: &BarPartition, p: OddPrime, w: u64) -> Result<WitnessCertificate> {
    let decomp = decompose_core(gamma, p)?;
    if !(w >= p.get() || (gamma.is_empty() && w >= 2)) {
        return Err(Error::Precondition(format!(
            "block with core {gamma} and weight {w} has abelian defect (p = {p})"
        )));
    }
    let n = gamma.size() + p.get() * w;
    let (case, label_a, label_b) = if gamma.is_empty() {
        let (single, pair) = principal_pair(p, w)?;
        (WitnessCase::EmptyCore, single, pair)
    } else {
        let cmp = compare_constructions(gamma, p, w)?;
        match cmp.case {
            ComparisonCase::TwoClasses { .. } => (WitnessCase::TwoClasses, cmp.left, cmp.right),
            ComparisonCase::UniqueClass { i } => (
                unique_class_case(&decomp, i as usize, n),
                cmp.left,
                cmp.right,
            ),
        }
    };
    Ok(WitnessCertificate {
        p,
        core: gamma.clone(),
        w,
        case,
        degree_a: alt_degree(&label_a)?,
        degree_b: alt_degree(&label_b)?,
        label_a,
        label_b,
        checks: WitnessChecks::default(),
        failures: Vec::new(),
    })
}

/// Re-runs every check of `cert`, enumerating its block.
pub fn verify_witness(cert: WitnessCertificate) -> Result<WitnessCertificate> {
    let block = spin_block(&cert.core, cert.p, cert.w, Group::DoubleCoverAlt)?;
    verify_witness_in(cert, &block)
}

/// Re-runs every check of `cert` against an already enumerated `block`.
pub fn verify_witness_in(
    mut cert: WitnessCertificate,
    block: &SpinBlock,
) -> Result<WitnessCertificate> {
    let mut failures = Vec::new();
    let p = cert.p;

    if block.core != cert.core || block.w != cert.w || block.p != p {
        return Err(Error::Precondition(format!(
            "certificate for core {} weight {} checked against block with core {} weight {}",
            cert.core, cert.w, block.core, block.w
        )));
    }

    let mut same_block = true;
    for label in [&cert.label_a, &cert.label_b] {
        let (core, w) = bar_core_and_weight(label, p)?;
        if core != cert.core || w != cert.w {
            same_block = false;
            failures.push(format!("{label} has core {core} and weight {w}"));
        }
    }
    if cert.label_a == cert.label_b {
        same_block = false;
        failures.push(format!("both labels are {}", cert.label_a));
    }

    let mut both_height_zero = true;
    for label in [&cert.label_a, &cert.label_b] {
        match block.height_of(label) {
            Some(0) => {}
            Some(h) => {
                both_height_zero = false;
                failures.push(format!("{label} has height {h}"));
            }
            None => {
                both_height_zero = false;
                failures.push(format!("{label} is not in the block"));
            }
        }
    }

    let degree_a = alt_degree(&cert.label_a)?;
    let degree_b = alt_degree(&cert.label_b)?;
    let mut degrees_distinct = degree_a != degree_b;
    if !degrees_distinct {
        failures.push(format!("both degrees equal {degree_a}"));
    }
    for (label, stored, actual) in [
        (&cert.label_a, &cert.degree_a, &degree_a),
        (&cert.label_b, &cert.degree_b, &degree_b),
    ] {
        if stored != actual {
            degrees_distinct = false;
            failures.push(format!(
                "{label}: recorded degree {stored}, actual {actual}"
            ));
        }
    }

    let congruence = if cert.case == WitnessCase::EmptyCore {
        CheckStatus::NotApplicable
    } else {
        let mut ok = true;
        for label in [&cert.label_a, &cert.label_b] {
            let c = bar_product_congruence(label, &cert.core, p);
            if !c.holds_up_to_sign() {
                ok = false;
                failures.push(format!(
                    "{label}: bar lengths prime to {p} give {} mod {p}, core gives {}",
                    c.residue, c.core_residue
                ));
            }
        }
        CheckStatus::from_bool(ok)
    };

    let case_argument = check_case_argument(&cert, &degree_a, &degree_b, &mut failures)?;

    cert.checks = WitnessChecks {
        same_block,
        both_height_zero,
        degrees_distinct,
        congruence: Some(congruence),
        case_argument: Some(case_argument),
    };
    cert.failures = failures;
    Ok(cert)
}

fn check_case_argument(
    cert: &WitnessCertificate,
    degree_a: &BigUint,
    degree_b: &BigUint,
    failures: &mut Vec<String>,
) -> Result<CheckStatus> {
    let h_a = bars(&cert.label_a).h_total;
    let h_b = bars(&cert.label_b).h_total;
    let twice_b = &h_b * 2u32;
    let p = cert.p.get();
    let w = cert.w;
    let mut ok = true;
    let mut require = |cond: bool, msg: String| {
        if !cond {
            ok = false;
            failures.push(msg);
        }
    };
    match cert.case {
        WitnessCase::EmptyCore => {
            require(
                h_a > twice_b,
                format!(
                    "H({}) = {h_a} <= 2 H({}) = {twice_b}",
                    cert.label_a, cert.label_b
                ),
            );
            require(
                degree_a < degree_b,
                format!("degree {degree_a} >= {degree_b}"),
            );
        }
        WitnessCase::TwoClasses => {
            require(
                sigma(&cert.label_a) == sigma(&cert.label_b),
                format!("{} and {} have different signs", cert.label_a, cert.label_b),
            );
            require(
                h_a > h_b,
                format!("H({}) = {h_a} <= H({}) = {h_b}", cert.label_a, cert.label_b),
            );
            require(
                degree_a < degree_b,
                format!("degree {degree_a} >= {degree_b}"),
            );
        }
        WitnessCase::UniqueClassEven => {
            require(
                h_a > h_b,
                format!("H({}) = {h_a} <= H({}) = {h_b}", cert.label_a, cert.label_b),
            );
            require(
                degree_a < degree_b,
                format!("degree {degree_a} >= {degree_b}"),
            );
        }
        WitnessCase::UniqueClassOdd => {
            require(
                h_a != twice_b,
                format!("H({}) = 2 H({})", cert.label_a, cert.label_b),
            );
        }
        WitnessCase::UniqueClassOddP3Small => {
            // core (i), labels (3w + i) and (3w, i)
            let i = cert.core.parts()[0];
            let n = p * w;
            let expected = match i {
                1 => BigRational::from_integer((n - 1).into()),
                2 => BigRational::from_integer(((n + 1) * (n - 2) / 2).into()),
                _ => return Err(Error::Internal(format!("unexpected core {}", cert.core))),
            };
            let actual = BigRational::new(h_a.clone().into(), h_b.clone().into());
            require(
                actual == expected,
                format!("H ratio {actual}, expected {expected}"),
            );
            require(
                h_a > twice_b,
                format!(
                    "H({}) = {h_a} <= 2 H({}) = {twice_b}",
                    cert.label_a, cert.label_b
                ),
            );
            require(
                degree_a < degree_b,
                format!("degree {degree_a} >= {degree_b}"),
            );
        }
        WitnessCase::UniqueClassOddP3Large => {
            let decomp = decompose_core(&cert.core, cert.p)?;
            let [i] = decomp.nonempty_classes()[..] else {
                return Err(Error::Internal(format!(
                    "{} has several classes",
                    cert.core
                )));
            };
            let h_core = BigRational::from_integer(bars(&cert.core).h_total.into());
            let ratio = |label: &BarPartition| {
                BigRational::from_integer(bars(label).h_total.into()) / &h_core
            };
            let shifted_first = ratio(&shift_class_top(&decomp, i as u64, 1)?);
            let added_first = ratio(&add_multiple_part(&decomp, 1)?);
            let expect_shifted = shifted_step_ratio(&decomp, i as u64, 1)?;
            let expect_added = added_step_ratio(&decomp, 1)?;
            require(
                shifted_first == expect_shifted,
                format!("first shifted step {shifted_first}, expected {expect_shifted}"),
            );
            require(
                added_first == expect_added,
                format!("first added step {added_first}, expected {expect_added}"),
            );
            // Equality is possible at the first step; later steps are strict.
            let two = BigRational::from_integer(2.into());
            require(
                shifted_first >= &two * &added_first,
                format!("first shifted step {shifted_first} < 2 * {added_first}"),
            );
            require(
                h_a > twice_b,
                format!(
                    "H({}) = {h_a} <= 2 H({}) = {twice_b}",
                    cert.label_a, cert.label_b
                ),
            );
            require(
                degree_a < degree_b,
                format!("degree {degree_a} >= {degree_b}"),
            );
        }
    }
    Ok(CheckStatus::from_bool(ok))
}

/// One spin block of the double cover of `A_n`, as reported by [`check_conjecture`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockReport {
    pub n: u64,
    pub p: OddPrime,
    pub core: BarPartition,
    pub w: u64,
    pub defect_class: DefectClass,
    pub num_labels: usize,
    pub num_characters: usize,
    /// All height-zero characters share one degree.
    pub equal_degree: bool,
    pub height_zero_degrees: Vec<BigUint>,
    /// Present exactly for non-abelian defect.
    pub witness: Option<WitnessCertificate>,
}

/// Reports every spin `p`-block of the double cover of `A_n`. Fails if a
/// block with non-abelian defect lacks a verified witness.
pub fn check_conjecture(n: u64, p: OddPrime) -> Result<Vec<BlockReport>> {
    if n < 4 {
        return Err(Error::Precondition(format!(
            "n must be at least 4, got {n}"
        )));
    }
    let mut out = Vec::new();
    for block in spin_blocks(n, p, Group::DoubleCoverAlt)? {
        let (equal_degree, height_zero_degrees) = equal_degree_test(&block);
        let witness = if block.defect_class == DefectClass::NonAbelian {
            let cert = select_witness(&block.core, p, block.w)?;
            let cert = verify_witness_in(cert, &block)?;
            if !cert.is_verified() || equal_degree {
                return Err(Error::MissingWitness {
                    core: block.core.to_string(),
                    w: block.w,
                    p: p.get(),
                    detail: if cert.failures.is_empty() {
                        "all height-zero degrees are equal".to_string()
                    } else {
                        cert.failures.join("; ")
                    },
                });
            }
            Some(cert)
        } else {
            None
        };
        out.push(BlockReport {
            n,
            p,
            num_labels: block.labels.len(),
            num_characters: block.characters.len(),
            core: block.core,
            w: block.w,
            defect_class: block.defect_class,
            equal_degree,
            height_zero_degrees,
            witness,
        });
    }
    Ok(out)
}

/// Counts for one prime over `4 <= n <= max_n`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PrimeSummary {
    pub p: u64,
    pub max_n: u64,
    pub defect_zero_blocks: u64,
    pub abelian_blocks: u64,
    pub nonabelian_blocks: u64,
    pub witnesses_verified: u64,
    /// Non-abelian blocks whose height-zero degrees all agree.
    pub equal_degree_nonabelian: u64,
    /// Abelian or defect-zero blocks whose height-zero degrees all agree.
    pub equal_degree_abelian: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub max_n: u64,
    pub summaries: Vec<PrimeSummary>,
    /// Block reports ordered by prime (as given), then `n`, then core.
    pub blocks: Vec<BlockReport>,
}

impl ScanReport {
    pub fn anomalies(&self) -> u64 {
        self.summaries
            .iter()
            .map(|s| s.equal_degree_nonabelian)
            .sum()
    }

    pub fn witnesses(&self) -> impl Iterator<Item = &WitnessCertificate> + '_ {
        self.blocks.iter().filter_map(|b| b.witness.as_ref())
    }
}

/// [`check_conjecture`] for every `4 <= n <= max_n` and every prime.
pub fn scan(max_n: u64, primes: &[OddPrime]) -> Result<ScanReport> {
    scan_with_jobs(max_n, primes, None)
}

/// Like [`scan`] with an explicit worker count; the report does not depend on it.
pub fn scan_with_jobs(max_n: u64, primes: &[OddPrime], jobs: Option<usize>) -> Result<ScanReport> {
    if max_n < 4 {
        return Err(Error::Precondition(format!(
            "max_n must be at least 4, got {max_n}"
        )));
    }
    let tasks: Vec<(OddPrime, u64)> = primes
        .iter()
        .flat_map(|&p| (4..=max_n).map(move |n| (p, n)))
        .collect();
    let run = || -> Result<Vec<Vec<BlockReport>>> {
        tasks
            .par_iter()
            .map(|&(p, n)| check_conjecture(n, p))
            .collect()
    };
    let per_task = match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| Error::Internal(e.to_string()))?
            .install(run)?,
        None => run()?,
    };

    let blocks: Vec<BlockReport> = per_task.into_iter().flatten().collect();
    let summaries = primes
        .iter()
        .map(|&p| {
            let mut s = PrimeSummary {
                p: p.get(),
                max_n,
                ..Default::default()
            };
            for b in blocks.iter().filter(|b| b.p == p) {
                match b.defect_class {
                    DefectClass::DefectZero => s.defect_zero_blocks += 1,
                    DefectClass::Abelian => s.abelian_blocks += 1,
                    DefectClass::NonAbelian => s.nonabelian_blocks += 1,
                }
                if b.witness
                    .as_ref()
                    .is_some_and(WitnessCertificate::is_verified)
                {
                    s.witnesses_verified += 1;
                }
                if b.equal_degree {
                    if b.defect_class == DefectClass::NonAbelian {
                        s.equal_degree_nonabelian += 1;
                    } else {
                        s.equal_degree_abelian += 1;
                    }
                }
            }
            s
        })
        .collect();
    Ok(ScanReport {
        max_n,
        summaries,
        blocks,
    })
}
