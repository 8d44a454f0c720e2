//! Weighted integer composition counts over commutative rings.
//!
//! A composition of `n` is an ordered sequence of positive parts summing to
//! `n`. Assign part `p` the weight `r(p-1)` from a weight sequence over a
//! commutative ring and weight each composition by the product of its
//! parts' weights; `C(n, k)` is the total weight over compositions into
//! exactly `k` parts, and `C(n)` sums over `k`. Indicator weights (0/1)
//! recover plain part-restricted counting; larger weights count colored
//! parts.
//!
//! The crate computes these counts four independent ways and cross-checks
//! them:
//!
//! * a two-variable recurrence filled by dynamic programming
//!   ([`compositions::build_table`], [`compositions::count_rec`]);
//! * coefficient extraction from powers of the truncated weight series
//!   ([`series::TruncatedSeries`], [`compositions::count_via_gf`]);
//! * per-family closed formulas ([`compositions::closed`]);
//! * a brute-force enumeration oracle ([`compositions::oracle_count`]),
//!   the ground truth for everything else.
//!
//! All arithmetic is exact: arbitrary-precision integers or canonical
//! residues mod `p` ([`ring::Integers`], [`ring::Modular`]). There is no
//! floating point anywhere.

pub mod compositions;
pub mod ring;
pub mod series;
pub mod weights;

pub use compositions::{
    build_table, count_all_rec, count_all_via_gf, count_rec, count_via_gf, oracle_count,
    oracle_count_all, verify_family, CheckEntry, CompositionTable, OracleError, VerificationReport,
    DEFAULT_ORACLE_MAX,
};
pub use ring::{
    binomial, fibonacci, multinomial, ring_hom_mod, CommutativeRing, Integers, Modular,
};
pub use series::TruncatedSeries;
pub use weights::{canonical_families, FamilyError, FamilySpec, NamedFamily, WeightRule};

pub use num_bigint::BigInt;
