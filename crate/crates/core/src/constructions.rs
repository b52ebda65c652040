//! Labels with a prescribed core and weight, and exact step ratios of their
//! bar length products.
//!
//! For a nonempty `p`-bar core `gamma`, the parts fall into residue classes
//! `X_j = {j, j+p, ..., e_j}` mod `p` (with `X_0` empty and at most one of
//! `X_j`, `X_{p-j}` nonempty). Two families of labels of weight `w` are built
//! from it:
//!
//! * [`add_multiple_part`]: `gamma` with the part `p*w` added;
//! * [`shift_class_top`]: `gamma` with the top part `e_i` of class `i` raised
//!   to `e_i + p*w`.
//!
//! Going from weight `w - 1` to `w`, the unmixed and mixed bar length products
//! change by closed-form factors. Those factors are evaluated here as exact
//! rationals and compared against direct bar enumeration.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::barpart::{bar_core_and_weight, bars, is_bar_core, BarPartition};
use crate::error::{Error, Result};
use crate::prime::OddPrime;
use crate::spinchar::{factorial, prime_to_part};

/// Residue-class data of a `p`-bar core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreDecomposition {
    pub p: OddPrime,
    pub gamma: BarPartition,
    /// `classes[j]` lists the parts congruent to `j` mod `p`, increasing.
    pub classes: Vec<Vec<u64>>,
    /// `|X_j| - 1`, or `-1` for an empty class.
    pub d: Vec<i64>,
    /// `j + d_j * p`: the top of a nonempty class, `j - p` for an empty one.
    pub e: Vec<i64>,
}

impl CoreDecomposition {
    pub fn p(&self) -> i64 {
        self.p.get() as i64
    }

    pub fn is_class_empty(&self, j: usize) -> bool {
        self.classes[j].is_empty()
    }

    /// Nonzero residues with a nonempty class, increasing.
    pub fn nonempty_classes(&self) -> Vec<usize> {
        (1..self.classes.len())
            .filter(|&j| !self.is_class_empty(j))
            .collect()
    }

    fn require_class(&self, i: u64) -> Result<usize> {
        let i = i as usize;
        if i == 0 || i >= self.classes.len() || self.is_class_empty(i) {
            return Err(Error::EmptyClass {
                i: i as u64,
                partition: self.gamma.to_string(),
            });
        }
        Ok(i)
    }

    fn require_nonempty_core(&self) -> Result<()> {
        if self.gamma.is_empty() {
            return Err(Error::Precondition("the core must be nonempty".to_string()));
        }
        Ok(())
    }
}

pub fn decompose_core(gamma: &BarPartition, p: OddPrime) -> Result<CoreDecomposition> {
    let not_core = || Error::NotACore {
        partition: gamma.to_string(),
        p: p.get(),
    };
    if !is_bar_core(gamma, p) {
        return Err(not_core());
    }
    let pu = p.get();
    let pi = pu as i64;
    let mut classes = vec![Vec::new(); pu as usize];
    for &a in gamma.parts().iter().rev() {
        classes[(a % pu) as usize].push(a);
    }
    if !classes[0].is_empty() {
        return Err(not_core());
    }
    let mut d = Vec::with_capacity(classes.len());
    let mut e = Vec::with_capacity(classes.len());
    for (j, class) in classes.iter().enumerate() {
        if !class.is_empty() {
            if !classes[pu as usize - j].is_empty() {
                return Err(not_core());
            }
            let gapless = class
                .iter()
                .enumerate()
                .all(|(k, &a)| a == j as u64 + k as u64 * pu);
            if !gapless {
                return Err(not_core());
            }
        }
        let dj = class.len() as i64 - 1;
        d.push(dj);
        e.push(j as i64 + dj * pi);
    }
    Ok(CoreDecomposition {
        p,
        gamma: gamma.clone(),
        classes,
        d,
        e,
    })
}

fn check_construction(label: &BarPartition, decomp: &CoreDecomposition, w: u64) -> Result<()> {
    let (core, weight) = bar_core_and_weight(label, decomp.p)?;
    if core != decomp.gamma || weight != w {
        return Err(Error::Internal(format!(
            "{label} has core {core} and weight {weight}, expected {} and {w}",
            decomp.gamma
        )));
    }
    Ok(())
}

/// The core with a new part `p*w` added; weight 0 gives the core itself.
pub fn add_multiple_part(decomp: &CoreDecomposition, w: u64) -> Result<BarPartition> {
    if w == 0 {
        return Ok(decomp.gamma.clone());
    }
    let label = decomp.gamma.with_part(decomp.p.get() * w)?;
    debug_assert_eq!(label.len(), decomp.gamma.len() + 1);
    check_construction(&label, decomp, w)?;
    Ok(label)
}

/// The core with the top part `e_i` of class `i` replaced by `e_i + p*w`.
pub fn shift_class_top(decomp: &CoreDecomposition, i: u64, w: u64) -> Result<BarPartition> {
    let i = decomp.require_class(i)?;
    if w == 0 {
        return Ok(decomp.gamma.clone());
    }
    let top = decomp.e[i] as u64;
    let label = decomp
        .gamma
        .with_replaced_part(top, top + decomp.p.get() * w)?;
    debug_assert_eq!(label.len(), decomp.gamma.len());
    check_construction(&label, decomp, w)?;
    Ok(label)
}

/// `((p*w), (p*w - 1, 1))`, both of empty core and weight `w`.
pub fn principal_pair(p: OddPrime, w: u64) -> Result<(BarPartition, BarPartition)> {
    if w < 2 {
        return Err(Error::Precondition(format!(
            "principal pair needs w >= 2, got {w}"
        )));
    }
    let n = p.get() * w;
    let single = BarPartition::new(vec![n])?;
    let pair = BarPartition::new(vec![n - 1, 1])?;
    for label in [&single, &pair] {
        let (core, weight) = bar_core_and_weight(label, p)?;
        if !core.is_empty() || weight != w {
            return Err(Error::Internal(format!(
                "{label} has core {core} and weight {weight}"
            )));
        }
    }
    Ok((single, pair))
}

fn int(x: i64) -> BigInt {
    BigInt::from(x)
}

fn rat(x: BigInt) -> BigRational {
    BigRational::from_integer(x)
}

/// Unmixed and mixed parts of a step ratio.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepFactors {
    pub unmixed: BigRational,
    pub mixed: BigRational,
}

impl StepFactors {
    pub fn total(&self) -> BigRational {
        &self.unmixed * &self.mixed
    }
}

fn require_positive_weight(w: u64) -> Result<i64> {
    if w == 0 {
        return Err(Error::Precondition("weight must be at least 1".to_string()));
    }
    Ok(w as i64)
}

/// Mixed bars joining the shifted part to the rest of its own class.
///
/// Those lengths are `e_i + p w + i + k p` for `0 <= k < d_i` and telescope to
/// `(2 e_i + p(w-1)) / (e_i + p(w-1) + i)`; the factor is 1 when the class
/// has a single part. The cross-class product alone misses it.
pub fn same_class_mixed_factor(decomp: &CoreDecomposition, i: u64, w: u64) -> Result<BigRational> {
    let i = decomp.require_class(i)?;
    let w = require_positive_weight(w)?;
    if decomp.d[i] == 0 {
        return Ok(BigRational::one());
    }
    let p = decomp.p();
    let e_i = decomp.e[i];
    Ok(BigRational::new(
        int(2 * e_i + p * (w - 1)),
        int(e_i + p * (w - 1) + i as i64),
    ))
}

/// Closed-form unmixed and mixed factors from weight `w - 1` to `w` for
/// [`shift_class_top`]:
///
/// ```text
/// unmixed = p w * prod_{j != i} |p(w-1) + e_i - e_j|
/// mixed   = prod_{j != i, X_j nonempty} (e_i + e_j + p w) / (e_i + p(w-1) + j)
///           * same_class_mixed_factor
/// ```
pub fn shifted_step_factors(decomp: &CoreDecomposition, i: u64, w: u64) -> Result<StepFactors> {
    let mut factors = cross_class_step_factors(decomp, i, w)?;
    factors.mixed *= same_class_mixed_factor(decomp, i, w)?;
    Ok(factors)
}

/// [`shifted_step_factors`] without the same-class mixed factor. Agrees with
/// the direct quotients only when class `i` has a single part.
pub fn cross_class_step_factors(decomp: &CoreDecomposition, i: u64, w: u64) -> Result<StepFactors> {
    let i = decomp.require_class(i)?;
    let w = require_positive_weight(w)?;
    let p = decomp.p();
    let e = &decomp.e;
    let mut unmixed = int(p * w);
    for j in (0..e.len()).filter(|&j| j != i) {
        unmixed *= int(p * (w - 1) + e[i] - e[j]).abs();
    }
    let mut mixed = BigRational::one();
    for j in decomp.nonempty_classes().into_iter().filter(|&j| j != i) {
        mixed *= BigRational::new(int(e[i] + e[j] + p * w), int(e[i] + p * (w - 1) + j as i64));
    }
    Ok(StepFactors {
        unmixed: rat(unmixed),
        mixed,
    })
}

/// Closed-form total ratio `H(w) / H(w - 1)` for [`shift_class_top`], with
/// the cancellations between the unmixed and mixed factors carried out:
///
/// ```text
/// p w (p(w-1) + e_i + i)
///   * prod_{j != i, X_j nonempty} |p(w-1) + e_i - e_j| (p w + e_i + e_j)
///   * prod_{X_k and X_{p-k} both empty} |p w + e_i - k|
///   * same_class_mixed_factor
/// ```
pub fn shifted_step_ratio(decomp: &CoreDecomposition, i: u64, w: u64) -> Result<BigRational> {
    Ok(cross_class_step_ratio(decomp, i, w)? * same_class_mixed_factor(decomp, i, w)?)
}

/// [`shifted_step_ratio`] without the same-class mixed factor.
pub fn cross_class_step_ratio(decomp: &CoreDecomposition, i: u64, w: u64) -> Result<BigRational> {
    let i = decomp.require_class(i)?;
    let w = require_positive_weight(w)?;
    let p = decomp.p();
    let e = &decomp.e;
    let pu = e.len();
    let mut total = int(p * w) * int(p * (w - 1) + e[i] + i as i64);
    for j in decomp.nonempty_classes().into_iter().filter(|&j| j != i) {
        total *= int(p * (w - 1) + e[i] - e[j]).abs() * int(p * w + e[i] + e[j]);
    }
    for k in 0..pu {
        if decomp.is_class_empty(k) && decomp.is_class_empty((pu - k) % pu) {
            total *= int(p * w + e[i] - k as i64).abs();
        }
    }
    Ok(rat(total))
}

/// Closed-form unmixed and mixed factors from weight `w - 1` to `w` for
/// [`add_multiple_part`]. The first step (`w = 1`) has its own form:
///
/// ```text
/// w = 1:  unmixed = p * prod_{j != 0} |e_j| / prod_i a_i,   mixed = prod_i (a_i + p)
/// w > 1:  unmixed = p w * prod_{j != 0} |p(w-1) - e_j|,
///         mixed   = prod_{j != 0, X_j nonempty} (e_j + p w) / (p(w-1) + j)
/// ```
pub fn added_step_factors(decomp: &CoreDecomposition, w: u64) -> Result<StepFactors> {
    decomp.require_nonempty_core()?;
    let w = require_positive_weight(w)?;
    let p = decomp.p();
    let e = &decomp.e;
    if w == 1 {
        let abs_e: BigInt = e[1..].iter().map(|&x| int(x).abs()).product();
        let parts: BigInt = decomp
            .gamma
            .parts()
            .iter()
            .map(|&a| BigInt::from(a))
            .product();
        let mixed: BigInt = decomp
            .gamma
            .parts()
            .iter()
            .map(|&a| BigInt::from(a) + int(p))
            .product();
        Ok(StepFactors {
            unmixed: BigRational::new(int(p) * abs_e, parts),
            mixed: rat(mixed),
        })
    } else {
        let mut unmixed = int(p * w);
        for &ej in &e[1..] {
            unmixed *= int(p * (w - 1) - ej).abs();
        }
        let mut mixed = BigRational::one();
        for j in decomp.nonempty_classes() {
            mixed *= BigRational::new(int(e[j] + p * w), int(p * (w - 1) + j as i64));
        }
        Ok(StepFactors {
            unmixed: rat(unmixed),
            mixed,
        })
    }
}

/// Closed-form total ratio `H(w) / H(w - 1)` for [`add_multiple_part`]:
///
/// ```text
/// w = 1:  p * prod_{j != 0} |e_j| * prod_i (a_i + p) / a_i
/// w > 1:  p w * prod_{j != 0} |p(w-1) - e_j| * prod_{j != 0} (p w + e_j) / (p(w-1) + j)
/// ```
pub fn added_step_ratio(decomp: &CoreDecomposition, w: u64) -> Result<BigRational> {
    decomp.require_nonempty_core()?;
    let w = require_positive_weight(w)?;
    let p = decomp.p();
    let e = &decomp.e;
    if w == 1 {
        let mut total = rat(int(p) * e[1..].iter().map(|&x| int(x).abs()).product::<BigInt>());
        for &a in decomp.gamma.parts() {
            total *= BigRational::new(BigInt::from(a + p as u64), BigInt::from(a));
        }
        Ok(total)
    } else {
        let mut total = rat(int(p * w));
        for (j, &ej) in e.iter().enumerate().skip(1) {
            total *= rat(int(p * (w - 1) - ej).abs());
            total *= BigRational::new(int(p * w + ej), int(p * (w - 1) + j as i64));
        }
        Ok(total)
    }
}

/// Exact quotients of the unmixed, mixed and total bar length products.
pub fn direct_step_factors(from: &BarPartition, to: &BarPartition) -> StepFactors {
    let a = bars(from);
    let b = bars(to);
    let q = |num: BigUint, den: BigUint| BigRational::new(num.into(), den.into());
    StepFactors {
        unmixed: q(b.h_unmixed, a.h_unmixed),
        mixed: q(b.h_mixed, a.h_mixed),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RatioIdentity {
    ShiftedUnmixed,
    ShiftedMixed,
    ShiftedTotal,
    AddedUnmixed,
    AddedMixed,
    AddedTotal,
}

impl RatioIdentity {
    pub fn as_str(self) -> &'static str {
        match self {
            RatioIdentity::ShiftedUnmixed => "shifted_unmixed",
            RatioIdentity::ShiftedMixed => "shifted_mixed",
            RatioIdentity::ShiftedTotal => "shifted_total",
            RatioIdentity::AddedUnmixed => "added_unmixed",
            RatioIdentity::AddedMixed => "added_mixed",
            RatioIdentity::AddedTotal => "added_total",
        }
    }
}

impl fmt::Display for RatioIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioCheck {
    pub identity: RatioIdentity,
    /// Residue class for shifted labels, `None` for the added-part family.
    pub class: Option<u64>,
    pub w: u64,
    pub direct: BigRational,
    pub closed_form: BigRational,
}

impl RatioCheck {
    pub fn passed(&self) -> bool {
        self.direct == self.closed_form
    }
}

/// Both congruence forms for one constructed label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceCheck {
    pub label: BarPartition,
    pub w: u64,
    /// Bar lengths prime to `p`, against `H(gamma)`.
    pub bar_product: Congruence,
    /// Prime-to-`p` part of `H(label)`, against `H(gamma) * (w!)_{p'}`.
    pub full_part: Congruence,
}

impl CongruenceCheck {
    pub fn new(label: &BarPartition, gamma: &BarPartition, p: OddPrime, w: u64) -> Self {
        CongruenceCheck {
            label: label.clone(),
            w,
            bar_product: bar_product_congruence(label, gamma, p),
            full_part: prime_to_p_part_congruence(label, gamma, p, w),
        }
    }

    pub fn passed(&self) -> bool {
        self.bar_product.holds_up_to_sign() && self.full_part.holds_up_to_sign()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioReport {
    pub gamma: BarPartition,
    pub p: OddPrime,
    pub w: u64,
    pub checks: Vec<RatioCheck>,
    pub congruences: Vec<CongruenceCheck>,
    pub notes: Vec<String>,
}

impl RatioReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(RatioCheck::passed)
            && self.congruences.iter().all(CongruenceCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RatioCheck> + '_ {
        self.checks.iter().filter(|c| !c.passed())
    }
}

/// Product of the bar lengths of `lambda` that are prime to `p`.
pub fn prime_to_p_bar_product(lambda: &BarPartition, p: OddPrime) -> BigUint {
    lambda
        .bar_lengths()
        .into_iter()
        .filter(|l| l % p.get() != 0)
        .fold(BigUint::one(), |acc, l| acc * l)
}

fn residue(x: &BigUint, p: OddPrime) -> u64 {
    let r = x.mod_floor(&BigUint::from(p.get()));
    r.iter_u64_digits().next().unwrap_or(0)
}

/// Compares the product of bar lengths of `label` prime to `p` with `H(gamma)` mod `p`.
pub fn bar_product_congruence(
    label: &BarPartition,
    gamma: &BarPartition,
    p: OddPrime,
) -> Congruence {
    Congruence {
        p,
        residue: residue(&prime_to_p_bar_product(label, p), p),
        core_residue: residue(&bars(gamma).h_total, p),
    }
}

/// The prime-to-`p` part of the full product `H(label)`. It carries an extra
/// factor `(w!)_{p'}` from the lengths `p, 2p, ..., wp`, so it is compared with
/// `H(gamma) * (w!)_{p'}` rather than `H(gamma)` alone.
pub fn prime_to_p_part_congruence(
    label: &BarPartition,
    gamma: &BarPartition,
    p: OddPrime,
    w: u64,
) -> Congruence {
    let target = bars(gamma).h_total * prime_to_part(&factorial(w), p.get());
    Congruence {
        p,
        residue: residue(&prime_to_part(&bars(label).h_total, p.get()), p),
        core_residue: residue(&target, p),
    }
}

/// Residues of two quantities mod `p`, expected to agree up to sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Congruence {
    pub p: OddPrime,
    pub residue: u64,
    pub core_residue: u64,
}

impl Congruence {
    pub fn holds_up_to_sign(&self) -> bool {
        let p = self.p.get();
        self.residue != 0
            && (self.residue == self.core_residue
                || (self.residue + self.core_residue).is_multiple_of(p))
    }
}

/// Checks every closed-form step ratio that applies to `gamma` at weight `w`
/// against the direct quotients, plus both congruence forms for each
/// constructed label.
pub fn verify_ratio_identities(gamma: &BarPartition, p: OddPrime, w: u64) -> Result<RatioReport> {
    let decomp = decompose_core(gamma, p)?;
    require_positive_weight(w)?;
    let mut report = RatioReport {
        gamma: gamma.clone(),
        p,
        w,
        checks: Vec::new(),
        congruences: Vec::new(),
        notes: Vec::new(),
    };

    let added = add_multiple_part(&decomp, w)?;
    report
        .congruences
        .push(CongruenceCheck::new(&added, gamma, p, w));
    if gamma.is_empty() {
        report
            .notes
            .push("empty core: added-part step ratios need a nonempty core".to_string());
        report
            .notes
            .push("empty core: no nonempty residue class, no shifted labels".to_string());
        return Ok(report);
    }

    let direct = direct_step_factors(&add_multiple_part(&decomp, w - 1)?, &added);
    let closed = added_step_factors(&decomp, w)?;
    let total = added_step_ratio(&decomp, w)?;
    report.checks.extend([
        RatioCheck {
            identity: RatioIdentity::AddedUnmixed,
            class: None,
            w,
            direct: direct.unmixed.clone(),
            closed_form: closed.unmixed,
        },
        RatioCheck {
            identity: RatioIdentity::AddedMixed,
            class: None,
            w,
            direct: direct.mixed.clone(),
            closed_form: closed.mixed,
        },
        RatioCheck {
            identity: RatioIdentity::AddedTotal,
            class: None,
            w,
            direct: direct.total(),
            closed_form: total,
        },
    ]);

    for i in decomp.nonempty_classes() {
        let i = i as u64;
        let shifted = shift_class_top(&decomp, i, w)?;
        let direct = direct_step_factors(&shift_class_top(&decomp, i, w - 1)?, &shifted);
        let closed = shifted_step_factors(&decomp, i, w)?;
        let total = shifted_step_ratio(&decomp, i, w)?;
        report.checks.extend([
            RatioCheck {
                identity: RatioIdentity::ShiftedUnmixed,
                class: Some(i),
                w,
                direct: direct.unmixed.clone(),
                closed_form: closed.unmixed,
            },
            RatioCheck {
                identity: RatioIdentity::ShiftedMixed,
                class: Some(i),
                w,
                direct: direct.mixed.clone(),
                closed_form: closed.mixed,
            },
            RatioCheck {
                identity: RatioIdentity::ShiftedTotal,
                class: Some(i),
                w,
                direct: direct.total(),
                closed_form: total,
            },
        ]);
        report
            .congruences
            .push(CongruenceCheck::new(&shifted, gamma, p, w));
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComparisonCase {
    /// At least two nonempty classes; `i1`, `i2` have the two largest tops.
    TwoClasses { i1: u64, i2: u64 },
    /// Exactly one nonempty class `i`; compared with the added-part label.
    UniqueClass { i: u64 },
}

/// Strict comparison of bar length products for two labels of one block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub case: ComparisonCase,
    /// The label expected to have the larger product.
    pub left: BarPartition,
    pub right: BarPartition,
    pub h_left: BigUint,
    pub h_right: BigUint,
    pub verified: bool,
    /// Two-class case only: whether the factor pairing `i1` with `i2` is
    /// strictly larger on the `i1` side. It is an equality exactly at `w = 1`.
    pub pair_factor_strict: Option<bool>,
}

/// Picks the comparison pair for a nonempty core and checks `H(left) > H(right)`.
pub fn compare_constructions(gamma: &BarPartition, p: OddPrime, w: u64) -> Result<Comparison> {
    let decomp = decompose_core(gamma, p)?;
    decomp.require_nonempty_core()?;
    let wi = require_positive_weight(w)?;
    let mut classes = decomp.nonempty_classes();
    classes.sort_by_key(|&j| std::cmp::Reverse(decomp.e[j]));
    if classes.windows(2).any(|c| decomp.e[c[0]] == decomp.e[c[1]]) {
        return Err(Error::Internal(format!("repeated class top in {gamma}")));
    }
    let (case, left, right, pair_factor_strict) = match classes[..] {
        [i] => (
            ComparisonCase::UniqueClass { i: i as u64 },
            shift_class_top(&decomp, i as u64, w)?,
            add_multiple_part(&decomp, w)?,
            None,
        ),
        [i1, i2, ..] => {
            let p = decomp.p();
            let (e1, e2) = (decomp.e[i1], decomp.e[i2]);
            let side = |a: i64, b: i64| int(p * (wi - 1) + a - b).abs() * int(p * wi + a + b);
            (
                ComparisonCase::TwoClasses {
                    i1: i1 as u64,
                    i2: i2 as u64,
                },
                shift_class_top(&decomp, i1 as u64, w)?,
                shift_class_top(&decomp, i2 as u64, w)?,
                Some(side(e1, e2) > side(e2, e1)),
            )
        }
        [] => unreachable!("nonempty core has a nonempty class"),
    };
    let h_left = bars(&left).h_total;
    let h_right = bars(&right).h_total;
    Ok(Comparison {
        case,
        verified: h_left > h_right,
        left,
        right,
        h_left,
        h_right,
        pair_factor_strict,
    })
}

/// Unique-class case: the shifted label's step ratio strictly exceeds the
/// added-part label's step ratio at weight `w`, both from direct quotients.
pub fn unique_class_step_dominates(gamma: &BarPartition, p: OddPrime, w: u64) -> Result<bool> {
    let decomp = decompose_core(gamma, p)?;
    require_positive_weight(w)?;
    let [i] = decomp.nonempty_classes()[..] else {
        return Err(Error::Precondition(format!(
            "{gamma} does not have exactly one nonempty residue class"
        )));
    };
    let i = i as u64;
    let shifted = direct_step_factors(
        &shift_class_top(&decomp, i, w - 1)?,
        &shift_class_top(&decomp, i, w)?,
    );
    let added = direct_step_factors(
        &add_multiple_part(&decomp, w - 1)?,
        &add_multiple_part(&decomp, w)?,
    );
    Ok(shifted.total() > added.total())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalPairCheck {
    pub p: OddPrime,
    pub w: u64,
    pub single: BarPartition,
    pub pair: BarPartition,
    pub h_single: BigUint,
    pub h_pair: BigUint,
    /// `H(single) > 2 H(pair)`.
    pub holds: bool,
}

pub fn principal_pair_check(p: OddPrime, w: u64) -> Result<PrincipalPairCheck> {
    let (single, pair) = principal_pair(p, w)?;
    let h_single = bars(&single).h_total;
    let h_pair = bars(&pair).h_total;
    let holds = h_single > &h_pair * 2u32;
    Ok(PrincipalPairCheck {
        p,
        w,
        single,
        pair,
        h_single,
        h_pair,
        holds,
    })
}
