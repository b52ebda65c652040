//! Exact combinatorics of spin characters and spin blocks of the double
//! covers of the symmetric and alternating groups, for odd primes.
//!
//! Characters are modelled by bar partition labels and degrees. Blocks are
//! sets of labels sharing a `p`-bar core. The [`witness`] module finds, in
//! every block of the double cover of `A_n` with non-abelian defect, two
//! height-zero characters of distinct degrees and verifies the pair exactly.
//!
//! ```
//! use barspin::{bar_core_and_weight, build_witness, BarPartition, OddPrime};
//!
//! let p = OddPrime::new(3)?;
//! let lambda: BarPartition = "8,1".parse()?;
//! let (core, w) = bar_core_and_weight(&lambda, p)?;
//! assert!(core.is_empty() && w == 3);
//!
//! let cert = build_witness(&core, p, w)?;
//! assert!(cert.is_verified());
//! assert_eq!(cert.degree_a.to_string(), "8");
//! assert_eq!(cert.degree_b.to_string(), "56");
//! # Ok::<(), barspin::Error>(())
//! ```

pub mod barpart;
pub mod blocks;
pub mod constructions;
pub mod error;
pub mod prime;
pub mod spinchar;
pub mod witness;

pub use barpart::{
    bar_core_and_weight, bars, enumerate_bar_partitions, labels_with_core_and_weight, remove_bar,
    weight_tower, Bar, BarKind, BarPartition, BarTable, WeightTower,
};
pub use blocks::{
    equal_degree_test, height_zero_by_criterion, heights, spin_block, spin_blocks, DefectClass,
    SpinBlock,
};
pub use constructions::{
    compare_constructions, decompose_core, principal_pair_check, verify_ratio_identities,
    Comparison, ComparisonCase, CoreDecomposition, PrincipalPairCheck, RatioReport,
};
pub use error::{Error, Result};
pub use prime::OddPrime;
pub use spinchar::{characters_of_label, sigma, spin_degree_sym, Group, Sign, SpinCharacter};
pub use witness::{
    build_witness, check_conjecture, scan, scan_with_jobs, verify_witness, BlockReport,
    CheckStatus, ScanReport, WitnessCase, WitnessCertificate,
};
