mod common;

use std::collections::BTreeSet;

use barspin::barpart::{bars_of_length, count_bars_divisible_by, is_bar_core};
use barspin::constructions::{
    add_multiple_part, added_step_ratio, direct_step_factors, shift_class_top, shifted_step_ratio,
    unique_class_step_dominates,
};
use barspin::spinchar::factorial;
use barspin::*;
use common::*;
use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

fn p(p: u64) -> OddPrime {
    OddPrime::new(p).unwrap()
}

fn bar_partition_strategy(max_part: u64) -> impl Strategy<Value = BarPartition> {
    prop::collection::btree_set(1..=max_part, 0..8)
        .prop_map(|s| BarPartition::new(s.into_iter().collect::<Vec<_>>()).unwrap())
}

fn prime_strategy() -> impl Strategy<Value = OddPrime> {
    prop::sample::select(vec![3u64, 5, 7, 11, 13]).prop_map(p)
}

fn random_core(lambda: &BarPartition, prime: OddPrime, rng: &mut StdRng) -> (BarPartition, u64) {
    let mut current = lambda.clone();
    let mut w = 0;
    loop {
        let candidates = bars_of_length(&current, prime.get());
        let Some(bar) = candidates.choose(rng) else {
            return (current, w);
        };
        current = remove_bar(&current, bar).unwrap();
        w += 1;
    }
}

proptest! {
    #[test]
    fn bar_multiset_has_n_elements(lambda in bar_partition_strategy(30)) {
        let table = bars(&lambda);
        prop_assert_eq!(table.bars.len() as u64, lambda.size());
        let mut lengths: Vec<u64> = table.lengths().collect();
        lengths.sort_unstable();
        prop_assert_eq!(lengths, oracle_bar_lengths(lambda.parts()));
        prop_assert_eq!(&table.h_total, &(&table.h_unmixed * &table.h_mixed));
        prop_assert_eq!(table.h_total, oracle_h(lambda.parts()));
    }

    #[test]
    fn core_matches_runner_oracle(lambda in bar_partition_strategy(30), prime in prime_strategy()) {
        let (core, w) = bar_core_and_weight(&lambda, prime).unwrap();
        let (oc, ow) = oracle_core(lambda.parts(), prime.get());
        prop_assert_eq!(core.parts(), &oc[..]);
        prop_assert_eq!(w, ow);
        prop_assert_eq!(lambda.size(), core.size() + prime.get() * w);
        prop_assert!(is_bar_core(&core, prime));
        prop_assert_eq!(bar_core_and_weight(&core, prime).unwrap(), (core.clone(), 0));
    }

    #[test]
    fn core_is_order_independent(lambda in bar_partition_strategy(25), prime in prime_strategy(), seed in any::<u64>()) {
        let expected = bar_core_and_weight(&lambda, prime).unwrap();
        let mut rng = StdRng::seed_from_u64(seed);
        for _ in 0..5 {
            prop_assert_eq!(random_core(&lambda, prime, &mut rng), expected.clone());
        }
    }

    #[test]
    fn valuation_of_h_is_weight_sum(lambda in bar_partition_strategy(40), prime in prime_strategy()) {
        let tower = weight_tower(&lambda, prime);
        prop_assert_eq!(tower.valuation, valuation(&bars(&lambda).h_total, prime.get()));
        prop_assert_eq!(tower.weight(1), count_bars_divisible_by(&lambda, prime.get()));
    }

    #[test]
    fn remove_bar_reduces_size(lambda in bar_partition_strategy(20), pick in any::<prop::sample::Index>()) {
        let table = bars(&lambda);
        prop_assume!(!table.bars.is_empty());
        let bar = pick.get(&table.bars);
        let smaller = remove_bar(&lambda, bar).unwrap();
        prop_assert_eq!(smaller.size(), lambda.size() - bar.length);
    }

    #[test]
    fn text_round_trip(lambda in bar_partition_strategy(50)) {
        prop_assert_eq!(lambda.to_string().parse::<BarPartition>().unwrap(), lambda);
    }
}

#[test]
fn single_part_bars_are_one_to_a() {
    for a in 1..=25u64 {
        let lambda = BarPartition::new(vec![a]).unwrap();
        let table = bars(&lambda);
        let mut lengths: Vec<u64> = table.lengths().collect();
        lengths.sort_unstable();
        assert_eq!(lengths, (1..=a).collect::<Vec<_>>());
        assert!(table.bars.iter().all(|b| !b.is_mixed()));
        assert_eq!(table.h_total, factorial(a));
    }
}

#[test]
fn enumeration_matches_bitmask_oracle() {
    for n in 0..=18 {
        let ours: Vec<Vec<u64>> = enumerate_bar_partitions(n)
            .iter()
            .map(|l| l.parts().to_vec())
            .collect();
        let mut oracle = oracle_distinct_partitions(n);
        oracle.sort_by(|a, b| b.cmp(a));
        assert_eq!(ours, oracle, "n = {n}");
    }
}

#[test]
fn removable_length_p_bar_exists_whenever_weight_positive() {
    for prime in [3, 5, 7].map(p) {
        for n in 0..=20 {
            for lambda in enumerate_bar_partitions(n) {
                if count_bars_divisible_by(&lambda, prime.get()) > 0 {
                    assert!(
                        !bars_of_length(&lambda, prime.get()).is_empty(),
                        "{lambda} at p = {prime}"
                    );
                }
            }
        }
    }
}

#[test]
fn splitting_is_well_defined_and_valuations_link() {
    for n in 2..=22u64 {
        for lambda in enumerate_bar_partitions(n) {
            let d = spin_degree_sym(&lambda).unwrap();
            if sigma(&lambda) == Sign::Plus {
                assert!(d.is_even(), "{lambda}");
            }
            for prime in [3, 5, 7].map(p) {
                let lhs = valuation(&d, prime.get());
                let rhs =
                    valuation(&factorial(n), prime.get()) - weight_tower(&lambda, prime).valuation;
                assert_eq!(lhs, rhs, "{lambda} p = {prime}");
            }
        }
    }
}

#[test]
fn blocks_partition_the_labels_and_heights_agree() {
    for prime in [3, 5, 7].map(p) {
        for n in 2..=20 {
            let sym = spin_blocks(n, prime, Group::DoubleCoverSym).unwrap();
            let alt = spin_blocks(n, prime, Group::DoubleCoverAlt).unwrap();
            let total: usize = sym.iter().map(|b| b.labels.len()).sum();
            assert_eq!(total, enumerate_bar_partitions(n).len());
            assert_eq!(sym.len(), alt.len());
            for (bs, ba) in sym.iter().zip(&alt) {
                assert_eq!(bs.core, ba.core);
                assert_eq!(heights(bs), heights(ba));
                assert_eq!(
                    bs.w == 0,
                    bs.labels.len() == 1 && bs.defect_class == DefectClass::DefectZero
                );
                for l in &bs.labels {
                    let (core, w) = bar_core_and_weight(l, prime).unwrap();
                    assert_eq!((core, w), (bs.core.clone(), bs.w));
                }
                assert_eq!(bs.label_heights.iter().min(), Some(&0));
                let zero: BTreeSet<_> = heights(bs)
                    .into_iter()
                    .filter(|&(_, h)| h == 0)
                    .map(|(l, _)| l)
                    .collect();
                assert_eq!(
                    height_zero_by_criterion(bs),
                    zero,
                    "n = {n} p = {prime} core {}",
                    bs.core
                );
            }
        }
    }
}

fn cores_up_to(prime: OddPrime, max: u64) -> Vec<BarPartition> {
    (0..=max)
        .flat_map(enumerate_bar_partitions)
        .filter(|l| is_bar_core(l, prime))
        .collect()
}

#[test]
fn construction_soundness_and_bar_types() {
    for prime in [3, 5, 7].map(p) {
        let pu = prime.get();
        for gamma in cores_up_to(prime, 12) {
            let d = decompose_core(&gamma, prime).unwrap();
            for w in 1..=4 {
                let added = add_multiple_part(&d, w).unwrap();
                assert_eq!(added.len(), gamma.len() + 1);
                assert_eq!(
                    bar_core_and_weight(&added, prime).unwrap(),
                    (gamma.clone(), w)
                );
                let pbars: Vec<Bar> = bars(&added)
                    .bars
                    .into_iter()
                    .filter(|b| b.length % pu == 0)
                    .collect();
                assert_eq!(
                    pbars
                        .iter()
                        .filter(|b| matches!(b.kind, BarKind::Type2 { .. }))
                        .count(),
                    1
                );
                assert!(pbars.iter().all(|b| !b.is_mixed()));
                for i in d.nonempty_classes() {
                    let shifted = shift_class_top(&d, i as u64, w).unwrap();
                    assert_eq!(shifted.len(), gamma.len());
                    assert_eq!(
                        bar_core_and_weight(&shifted, prime).unwrap(),
                        (gamma.clone(), w)
                    );
                    assert!(bars(&shifted)
                        .bars
                        .iter()
                        .filter(|b| b.length % pu == 0)
                        .all(|b| matches!(b.kind, BarKind::Type1 { .. })));
                }
            }
        }
    }
}

#[test]
fn closed_forms_telescope() {
    for prime in [3, 5].map(p) {
        for gamma in cores_up_to(prime, 10).into_iter().filter(|g| !g.is_empty()) {
            let d = decompose_core(&gamma, prime).unwrap();
            let h_gamma = BigRational::from_integer(bars(&gamma).h_total.into());
            let mut added = BigRational::one();
            for w in 1..=4 {
                added *= added_step_ratio(&d, w).unwrap();
                let label = add_multiple_part(&d, w).unwrap();
                assert_eq!(
                    BigRational::from_integer(bars(&label).h_total.into()) / &h_gamma,
                    added
                );
            }
            for i in d.nonempty_classes() {
                let mut acc = BigRational::one();
                for w in 1..=4 {
                    acc *= shifted_step_ratio(&d, i as u64, w).unwrap();
                    let label = shift_class_top(&d, i as u64, w).unwrap();
                    assert_eq!(
                        BigRational::from_integer(bars(&label).h_total.into()) / &h_gamma,
                        acc
                    );
                }
            }
        }
    }
}

#[test]
fn unique_class_step_ratios_dominate() {
    for prime in [3, 5, 7].map(p) {
        for gamma in cores_up_to(prime, 14) {
            let d = decompose_core(&gamma, prime).unwrap();
            if d.nonempty_classes().len() != 1 {
                continue;
            }
            for w in 1..=6 {
                assert!(
                    unique_class_step_dominates(&gamma, prime, w).unwrap(),
                    "{gamma} w = {w}"
                );
            }
        }
    }
}

#[test]
fn direct_step_factors_multiply_to_total() {
    let a = BarPartition::new(vec![4, 1]).unwrap();
    let b = BarPartition::new(vec![7, 1]).unwrap();
    let f = direct_step_factors(&a, &b);
    assert_eq!(
        f.total(),
        BigRational::new(oracle_h(&[7, 1]).into(), oracle_h(&[4, 1]).into())
    );
}

#[test]
fn empty_core_parity_dichotomy() {
    for prime in [3, 5, 7].map(p) {
        for w in 2..=6u64 {
            let n = prime.get() * w;
            let single = BarPartition::new(vec![n]).unwrap();
            let pair = BarPartition::new(vec![n - 1, 1]).unwrap();
            let chi0 = spin_degree_sym(&single).unwrap();
            let chi1 = spin_degree_sym(&pair).unwrap();
            let cert = build_witness(&BarPartition::empty(), prime, w).unwrap();
            assert!(cert.is_verified());
            if n % 2 == 1 {
                assert_eq!(cert.degree_a, &chi0 / 2u32);
                assert_eq!(cert.degree_b, chi1);
                assert!(&chi0 / 2u32 < chi1);
            } else {
                assert_eq!(cert.degree_a, chi0);
                assert_eq!(cert.degree_b, &chi1 / 2u32);
                assert!(chi0 < &chi1 / 2u32);
            }
        }
    }
}

#[test]
fn two_class_witnesses_share_sign() {
    for prime in [5, 7].map(p) {
        for gamma in cores_up_to(prime, 12) {
            let d = decompose_core(&gamma, prime).unwrap();
            if d.nonempty_classes().len() < 2 {
                continue;
            }
            let cert = build_witness(&gamma, prime, prime.get()).unwrap();
            assert_eq!(cert.case, WitnessCase::TwoClasses);
            assert_eq!(sigma(&cert.label_a), sigma(&cert.label_b));
            assert!(cert.is_verified(), "{gamma}: {:?}", cert.failures);
        }
    }
}

#[test]
fn p3_unique_class_odd_branches_verified() {
    let three = p(3);
    let mut seen = BTreeSet::new();
    for gamma in cores_up_to(three, 16).into_iter().filter(|g| !g.is_empty()) {
        for w in 3..=5 {
            let cert = build_witness(&gamma, three, w).unwrap();
            assert!(cert.is_verified(), "{gamma} w = {w}: {:?}", cert.failures);
            seen.insert(cert.case.as_str());
        }
    }
    assert!(seen.contains("UniqueClassOddP3Small"));
    assert!(seen.contains("UniqueClassOddP3Large"));
    assert!(seen.contains("UniqueClassEven"));
    // Parts from both classes would sum to a multiple of 3.
    assert!(!seen.contains("TwoClasses"));
}

#[test]
fn unique_class_odd_for_larger_primes() {
    let five = p(5);
    let mut seen = false;
    for gamma in cores_up_to(five, 10).into_iter().filter(|g| !g.is_empty()) {
        let cert = build_witness(&gamma, five, 5).unwrap();
        assert!(cert.is_verified(), "{gamma}: {:?}", cert.failures);
        seen |= cert.case == WitnessCase::UniqueClassOdd;
    }
    assert!(seen);
}

#[test]
fn degrees_are_positive_integers() {
    for n in 1..=25 {
        for lambda in enumerate_bar_partitions(n) {
            assert!(spin_degree_sym(&lambda).unwrap() >= BigUint::one());
        }
    }
}
