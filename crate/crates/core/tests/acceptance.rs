//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use barspin::barpart::{bars_of_length, is_bar_core};
use barspin::constructions::{principal_pair_check, verify_ratio_identities};
use barspin::spinchar::factorial;
use barspin::*;
use common::*;
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn p(p: u64) -> OddPrime {
    OddPrime::new(p).unwrap()
}

fn bp(parts: &[u64]) -> BarPartition {
    BarPartition::new(parts.to_vec()).unwrap()
}

fn cores_up_to(prime: OddPrime, max: u64) -> Vec<BarPartition> {
    (0..=max)
        .flat_map(enumerate_bar_partitions)
        .filter(|l| is_bar_core(l, prime))
        .collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

/// Instances of the ratio sweep: `p in {3,5}`, cores of size at most 12, `1 <= w <= 4`.
fn ratio_sweep() -> Vec<(BarPartition, OddPrime, u64)> {
    let mut out = Vec::new();
    for prime in [3, 5].map(p) {
        for gamma in cores_up_to(prime, 12) {
            for w in 1..=4 {
                out.push((gamma.clone(), prime, w));
            }
        }
    }
    out
}

fn ratio_identities() -> Outcome {
    let mut checks = 0;
    for (gamma, prime, w) in ratio_sweep() {
        let report = verify_ratio_identities(&gamma, prime, w).map_err(e)?;
        if let Some(bad) = report.failures().next() {
            return Err(format!(
                "core {gamma} p={prime} w={w} {}: direct {} closed {}",
                bad.identity.as_str(),
                bad.direct,
                bad.closed_form
            ));
        }
        checks += report.checks.len();
    }
    let four_one = verify_ratio_identities(&bp(&[4, 1]), p(3), 1).map_err(e)?;
    let direct = BigRational::new(oracle_h(&[7, 1]).into(), oracle_h(&[4, 1]).into());
    ensure(
        four_one
            .checks
            .iter()
            .any(|c| c.class == Some(1) && c.closed_form == direct),
        || "closed form for core (4,1) does not give H(7,1)/H(4,1)".into(),
    )?;
    Ok(format!("{checks} exact identities"))
}

fn construction_inequalities() -> Outcome {
    let mut count = 0;
    for (gamma, prime, w) in ratio_sweep() {
        if gamma.is_empty() {
            continue;
        }
        let cmp = compare_constructions(&gamma, prime, w).map_err(e)?;
        ensure(cmp.verified, || {
            format!(
                "core {gamma} p={prime} w={w}: H({}) = {} <= H({}) = {}",
                cmp.left, cmp.h_left, cmp.right, cmp.h_right
            )
        })?;
        count += 1;
    }
    let h81 = oracle_h(&[8, 1]);
    let h63 = oracle_h(&[6, 3]);
    ensure(
        h81 == BigUint::from(51840u32) && h63 == BigUint::from(12960u32),
        || format!("H(8,1) = {h81}, H(6,3) = {h63}"),
    )?;
    let worked = compare_constructions(&bp(&[3, 1]), p(5), 1).map_err(e)?;
    ensure(
        worked.left == bp(&[8, 1]) && worked.right == bp(&[6, 3]) && worked.verified,
        || {
            format!(
                "core (3,1) p=5 w=1 compared {} with {}",
                worked.left, worked.right
            )
        },
    )?;
    Ok(format!("{count} strict inequalities, 51840 > 12960"))
}

fn principal_pair_inequality() -> Outcome {
    let mut count = 0;
    for prime in [3, 5, 7].map(p) {
        for w in 2..=10 {
            let c = principal_pair_check(prime, w).map_err(e)?;
            ensure(
                c.h_single == oracle_h(c.single.parts()) && c.h_pair == oracle_h(c.pair.parts()),
                || format!("bar products disagree with oracle at p={prime} w={w}"),
            )?;
            ensure(c.holds, || {
                format!("p={prime} w={w}: {} <= 2 * {}", c.h_single, c.h_pair)
            })?;
            count += 1;
        }
    }
    for (w, single, pair) in [(2, 720u32, 180u32), (3, 362880, 51840)] {
        let c = principal_pair_check(p(3), w).map_err(e)?;
        ensure(
            c.h_single == single.into() && c.h_pair == pair.into(),
            || format!("p=3 w={w}: got {} and {}", c.h_single, c.h_pair),
        )?;
    }
    Ok(format!("{count} cases, 720 > 2*180, 362880 > 2*51840"))
}

fn desk_scale_witnesses() -> Outcome {
    let mut verified = 0;
    let mut nonabelian = 0;
    for (prime, max_n) in [(p(3), 30), (p(5), 40)] {
        let report = scan(max_n, &[prime]).map_err(e)?;
        for b in &report.blocks {
            if b.defect_class != DefectClass::NonAbelian {
                continue;
            }
            nonabelian += 1;
            let cert = b
                .witness
                .as_ref()
                .ok_or_else(|| format!("no witness for n={} core {}", b.n, b.core))?;
            ensure(cert.is_verified() && cert.degree_a != cert.degree_b, || {
                format!("n={} p={prime} core {}: {:?}", b.n, b.core, cert.failures)
            })?;
            verified += 1;
        }
    }
    for (core, a, b) in [(BarPartition::empty(), 8u32, 56u32), (bp(&[1]), 16, 64)] {
        let cert = build_witness(&core, p(3), 3).map_err(e)?;
        let mut got = [cert.degree_a.clone(), cert.degree_b.clone()];
        got.sort();
        ensure(cert.is_verified() && got == [a.into(), b.into()], || {
            format!("core {core} p=3 w=3: degrees {} and {}", got[0], got[1])
        })?;
    }
    Ok(format!(
        "{verified}/{nonabelian} non-abelian blocks witnessed, 8 vs 56, 16 vs 64"
    ))
}

fn character_counts() -> Outcome {
    for n in 1..=20u64 {
        let fact = factorial(n);
        for group in [Group::DoubleCoverSym, Group::DoubleCoverAlt] {
            // The alternating cover is only defined from n = 2 on.
            if group == Group::DoubleCoverAlt && n < 2 {
                continue;
            }
            let mut total = BigUint::zero();
            for lambda in enumerate_bar_partitions(n) {
                for chi in characters_of_label(&lambda, group).map_err(e)? {
                    total += &chi.degree * &chi.degree;
                }
            }
            let expected = match group {
                Group::DoubleCoverSym => fact.clone(),
                Group::DoubleCoverAlt => &fact / 2u32,
            };
            ensure(total == expected, || {
                format!("n={n} group {group}: {total} != {expected}")
            })?;
        }
    }
    Ok("sums of squared degrees equal n! and n!/2 for n <= 20 (A from n = 2)".into())
}

fn core_machinery() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut labels = 0;
    for prime in [3, 5, 7].map(p) {
        for n in 0..=20 {
            for lambda in enumerate_bar_partitions(n) {
                let table = bars(&lambda);
                ensure(table.bars.len() as u64 == n, || {
                    format!("{lambda}: {} bars", table.bars.len())
                })?;
                let (core, w) = bar_core_and_weight(&lambda, prime).map_err(e)?;
                ensure(n == core.size() + prime.get() * w, || {
                    format!("{lambda} p={prime}: size mismatch")
                })?;
                let (oc, ow) = oracle_core(lambda.parts(), prime.get());
                ensure(core.parts() == &oc[..] && w == ow, || {
                    format!("{lambda} p={prime}: oracle disagrees")
                })?;
                for _ in 0..100 {
                    let mut cur = lambda.clone();
                    let mut steps = 0;
                    while let Some(bar) =
                        bars_of_length(&cur, prime.get()).choose(&mut rng).cloned()
                    {
                        cur = remove_bar(&cur, &bar).map_err(e)?;
                        steps += 1;
                    }
                    ensure(cur == core && steps == w, || {
                        format!("{lambda} p={prime}: random order gave {cur} after {steps} steps")
                    })?;
                }
                labels += 1;
            }
        }
    }
    Ok(format!(
        "{labels} label/prime pairs, 100 random removal orders each"
    ))
}

fn height_pattern() -> Outcome {
    let mut blocks = 0;
    for prime in [3, 5, 7].map(p) {
        for n in 2..=24 {
            for group in [Group::DoubleCoverSym, Group::DoubleCoverAlt] {
                for b in spin_blocks(n, prime, group).map_err(e)? {
                    let max = b.label_heights.iter().copied().max().unwrap_or(0);
                    match b.defect_class {
                        DefectClass::DefectZero => {}
                        DefectClass::Abelian => ensure(max == 0, || {
                            format!(
                                "n={n} p={prime} core {}: positive height with w={}",
                                b.core, b.w
                            )
                        })?,
                        DefectClass::NonAbelian => ensure(max > 0, || {
                            format!(
                                "n={n} p={prime} core {}: all heights zero with w={}",
                                b.core, b.w
                            )
                        })?,
                    }
                    blocks += 1;
                }
            }
        }
    }
    let b = spin_block(&BarPartition::empty(), p(3), 3, Group::DoubleCoverSym).map_err(e)?;
    let l = bp(&[6, 2, 1]);
    let deg = spin_degree_sym(&l).map_err(e)?;
    ensure(
        deg == BigUint::from(240u32) && b.height_of(&l) == Some(1),
        || format!("(6,2,1): degree {deg}, height {:?}", b.height_of(&l)),
    )?;
    ensure(valuation(&deg, 3) == 1, || {
        "oracle valuation of 240 at 3 is not 1".into()
    })?;
    Ok(format!(
        "{blocks} blocks, (6,2,1) has degree 240 and height 1"
    ))
}

fn congruences() -> Outcome {
    let mut count = 0;
    for (gamma, prime, w) in ratio_sweep() {
        let report = verify_ratio_identities(&gamma, prime, w).map_err(e)?;
        for c in &report.congruences {
            ensure(c.bar_product.holds_up_to_sign(), || {
                format!(
                    "core {gamma} p={prime} w={w} label {}: prime-to-p bar product",
                    c.label
                )
            })?;
            ensure(c.full_part.holds_up_to_sign(), || {
                format!(
                    "core {gamma} p={prime} w={w} label {}: prime-to-p part of H",
                    c.label
                )
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} constructed labels"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("ratio identities", ratio_identities),
        ("construction inequalities", construction_inequalities),
        ("principal pair inequality", principal_pair_inequality),
        ("desk-scale witnesses", desk_scale_witnesses),
        ("character counts", character_counts),
        ("core machinery", core_machinery),
        ("height check", height_pattern),
        ("congruences", congruences),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail} ({secs:.1}s)", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {detail} ({secs:.1}s)", k + 1);
            }
        }
    }
    if failed == 0 {
        println!("criterion 9: PASS summary: criteria 1-8 all pass");
        ExitCode::SUCCESS
    } else {
        println!("criterion 9: FAIL summary: {failed} of criteria 1-8 failed");
        ExitCode::FAILURE
    }
}
