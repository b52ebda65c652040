//! Spin characters of the double covers, as labels with degrees.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::barpart::{bars, BarPartition};
use crate::error::{Error, Result};
use crate::prime::OddPrime;

/// Which double cover a character belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Group {
    DoubleCoverSym,
    DoubleCoverAlt,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::DoubleCoverSym => "S",
            Group::DoubleCoverAlt => "A",
        })
    }
}

/// `(-1)^(n - m)` as a sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpinCharacter {
    pub label: BarPartition,
    pub group: Group,
    /// 0 or 1 for an associate pair, 0 when the label gives a single character.
    pub associate_index: u8,
    pub degree: BigUint,
    pub sigma: Sign,
}

impl SpinCharacter {
    pub fn n(&self) -> u64 {
        self.label.size()
    }
}

pub fn sigma(lambda: &BarPartition) -> Sign {
    if (lambda.size() - lambda.len() as u64).is_multiple_of(2) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Degree of a spin character of the double cover of `S_n` labelled by `lambda`:
/// `2^floor((n - m)/2) * n! / H(lambda)`.
pub fn spin_degree_sym(lambda: &BarPartition) -> Result<BigUint> {
    let n = lambda.size();
    let m = lambda.len() as u64;
    let numerator = factorial(n) << ((n - m) / 2);
    let (q, r) = numerator.div_rem(&bars(lambda).h_total);
    if !r.is_zero() {
        return Err(Error::Internal(format!(
            "bar length product of {lambda} does not divide the degree numerator"
        )));
    }
    Ok(q)
}

/// The spin characters carried by `lambda` in `group`, associates listed separately.
/// The alternating cover needs `n >= 2`.
pub fn characters_of_label(lambda: &BarPartition, group: Group) -> Result<Vec<SpinCharacter>> {
    if group == Group::DoubleCoverAlt && lambda.size() < 2 {
        return Err(Error::Precondition(format!(
            "alternating spin characters need n >= 2, got label {lambda}"
        )));
    }
    let d = spin_degree_sym(lambda)?;
    let s = sigma(lambda);
    let make = |associate_index: u8, degree: BigUint| SpinCharacter {
        label: lambda.clone(),
        group,
        associate_index,
        degree,
        sigma: s,
    };
    Ok(match (group, s) {
        (Group::DoubleCoverSym, Sign::Plus) => vec![make(0, d)],
        (Group::DoubleCoverSym, Sign::Minus) => vec![make(0, d.clone()), make(1, d)],
        (Group::DoubleCoverAlt, Sign::Plus) => {
            if d.is_odd() {
                return Err(Error::Internal(format!(
                    "{lambda} should split on restriction but has odd degree {d}"
                )));
            }
            let half = d >> 1u32;
            vec![make(0, half.clone()), make(1, half)]
        }
        (Group::DoubleCoverAlt, Sign::Minus) => vec![make(0, d)],
    })
}

/// Exponent of `p` in `x` (zero for `x = 0` by convention).
pub fn valuation(x: &BigUint, p: u64) -> u64 {
    if x.is_zero() {
        return 0;
    }
    let p = BigUint::from(p);
    let mut x = x.clone();
    let mut k = 0;
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() {
            return k;
        }
        x = q;
        k += 1;
    }
}

/// Part of `x` prime to `p`.
pub fn prime_to_part(x: &BigUint, p: u64) -> BigUint {
    let p = BigUint::from(p);
    let mut x = x.clone();
    if x.is_zero() {
        return x;
    }
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() {
            return x;
        }
        x = q;
    }
}

pub fn degree_valuation(chi: &SpinCharacter, p: OddPrime) -> u64 {
    valuation(&chi.degree, p.get())
}
