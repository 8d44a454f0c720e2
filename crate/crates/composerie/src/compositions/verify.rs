//! Cross-validation of every counting route against every other.
//!
//! [`verify_family`] runs, for one weight family, the full identity suite:
//! recurrence vs generating-function coefficients cell by cell, recurrence
//! vs the enumeration oracle within the oracle bound, the family's closed
//! formulas where they exist, the row-sum and total-recurrence identities,
//! and the Fibonacci identities for the families that have them. Failures
//! become report entries, never panics, so a report can always be emitted.

use super::closed::*;
use super::oracle::oracle_count;
use super::{build_table, count_all_rec, count_all_via_gf, count_via_gf};
use crate::ring::{fibonacci, CommutativeRing, Integers};
use crate::weights::{FamilySpec, NamedFamily, WeightRule};
use num_bigint::BigInt;
use num_traits::One;
use std::fmt::Display;

/// One exact-equality check: passes iff expected and actual are the same
/// ring element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckEntry {
    pub identity: String,
    pub n: u64,
    pub k: Option<u64>,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl CheckEntry {
    pub fn compare<T: Display + PartialEq>(
        identity: &str,
        n: u64,
        k: Option<u64>,
        expected: &T,
        actual: &T,
    ) -> Self {
        CheckEntry {
            identity: identity.to_string(),
            n,
            k,
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass: expected == actual,
        }
    }
}

/// Every check run for one family, in deterministic order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VerificationReport {
    pub family: String,
    pub max_n: u64,
    pub checks: Vec<CheckEntry>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Checks `F(n) = sum closed_residue(n, k, 2)` over the k of n's parity.
pub fn fibonacci_odd_identity(n: u64) -> CheckEntry {
    CheckEntry::compare(
        "fib/odd-parts-sum",
        n,
        None,
        &fibonacci(n),
        &fibonacci_odd_parts_sum(n),
    )
}

/// Checks `F(2n+1)` against the two-colored-ones family both ways: the
/// total recurrence and the per-k closed-formula sum.
pub fn fibonacci_two_ones_identity(n: u64) -> Vec<CheckEntry> {
    let expected = fibonacci(2 * n + 1);
    let rule = NamedFamily::TwoTypeOnes { extra_ones: 1 }
        .to_weights()
        .expect("valid family");
    let via_recurrence = count_all_rec(&Integers, &rule, n);
    vec![
        CheckEntry::compare(
            "fib/two-type-ones-total",
            n,
            None,
            &expected,
            &via_recurrence,
        ),
        CheckEntry::compare(
            "fib/two-type-ones-sum",
            n,
            None,
            &expected,
            &fibonacci_two_ones_sum(n),
        ),
    ]
}

// The closed formulas applicable to one cell of the given family.
fn closed_cell_values(family: &FamilySpec, n: u64, k: u64) -> Vec<(&'static str, BigInt)> {
    let named = match family {
        FamilySpec::Named(f) => f,
        FamilySpec::Explicit { .. } => return vec![],
    };
    match named {
        NamedFamily::AllOnes => vec![("closed/all-ones", closed_all_ones(n, k))],
        NamedFamily::Bounded { .. } => vec![],
        NamedFamily::AllowedSet { parts } => {
            let extras: Vec<u64> = parts.iter().copied().filter(|&p| p != 1).collect();
            vec![("closed/allowed-set", closed_allowed_set(n, k, &extras))]
        }
        NamedFamily::OneOrM { m } => {
            vec![("closed/allowed-set", closed_allowed_set(n, k, &[*m]))]
        }
        NamedFamily::ResidueOneMod { modulus } => {
            vec![("closed/residue", closed_residue(n, k, *modulus))]
        }
        NamedFamily::NoPart { part } => {
            let mut out = vec![("closed/no-m", closed_no_m(n, k, *part))];
            if *part == 2 {
                out.push(("closed/no-2", closed_no_two(n, k)));
            }
            if *part == 3 {
                out.push(("closed/no-3", closed_no_three(n, k)));
            }
            out
        }
        NamedFamily::TwoTypeOnes { extra_ones } => {
            vec![(
                "closed/two-type-ones",
                closed_two_type_ones(n, k, *extra_ones),
            )]
        }
        NamedFamily::BinomialWeights { m } => {
            vec![("closed/binomial-weights", closed_binomial_weights(n, k, *m))]
        }
        NamedFamily::PyramidalWeights { m } => {
            vec![(
                "closed/pyramidal-weights",
                closed_pyramidal_weights(n, k, *m),
            )]
        }
        NamedFamily::Squares => vec![("closed/squares", closed_square_weights(n, k))],
    }
}

/// Runs the full identity suite for `family` up to `max_n`, with oracle
/// comparisons limited to n <= `oracle_max`.
///
/// The family spec must carry valid parameters (validate or parse first).
pub fn verify_family<R: CommutativeRing>(
    ring: &R,
    family: &FamilySpec,
    max_n: u64,
    oracle_max: u64,
) -> VerificationReport {
    let rule: WeightRule = family
        .to_weights()
        .expect("family parameters were validated");
    let table = build_table(ring, &rule, max_n);
    let mut checks = Vec::new();

    for n in 0..=max_n {
        for k in 0..=n {
            let rec = table.cell(n, k);
            let gf = count_via_gf(ring, &rule, n, k);
            checks.push(CheckEntry::compare("rec-vs-gf", n, Some(k), rec, &gf));
            if n <= oracle_max {
                let oracle = oracle_count(ring, &rule, n, k, oracle_max)
                    .expect("n is within the oracle bound");
                checks.push(CheckEntry::compare(
                    "rec-vs-oracle",
                    n,
                    Some(k),
                    rec,
                    &oracle,
                ));
            }
            if n >= 1 {
                for (name, value) in closed_cell_values(family, n, k) {
                    let mapped = ring.from_integer(&value);
                    checks.push(CheckEntry::compare(name, n, Some(k), rec, &mapped));
                }
            }
        }
    }

    // Row totals: the per-row sum of the triangle must match the
    // one-dimensional total recurrence and the summed coefficient route.
    for n in 0..=max_n {
        let total = table.row_total(n);
        checks.push(CheckEntry::compare(
            "row-sum-vs-total-recurrence",
            n,
            None,
            total,
            &count_all_rec(ring, &rule, n),
        ));
        checks.push(CheckEntry::compare(
            "total-via-gf",
            n,
            None,
            total,
            &count_all_via_gf(ring, &rule, n),
        ));
    }

    // Family-specific identities.
    match family {
        FamilySpec::Named(NamedFamily::AllOnes) => {
            for n in 1..=max_n {
                let doubled = ring.from_integer(&(BigInt::one() << (n - 1)));
                checks.push(CheckEntry::compare(
                    "all-ones-doubling",
                    n,
                    None,
                    table.row_total(n),
                    &doubled,
                ));
            }
        }
        FamilySpec::Named(NamedFamily::OneOrM { m }) => {
            for n in 0..=max_n {
                let closed = ring.from_integer(&closed_one_or_m_all(n, *m));
                checks.push(CheckEntry::compare(
                    "closed/one-or-m-total",
                    n,
                    None,
                    table.row_total(n),
                    &closed,
                ));
            }
        }
        FamilySpec::Named(NamedFamily::ResidueOneMod { modulus: 2 }) => {
            for n in 1..=max_n {
                let fib_n = ring.from_integer(&fibonacci(n));
                checks.push(CheckEntry::compare(
                    "fib/odd-parts-total",
                    n,
                    None,
                    table.row_total(n),
                    &fib_n,
                ));
                checks.push(fibonacci_odd_identity(n));
            }
        }
        FamilySpec::Named(NamedFamily::TwoTypeOnes { extra_ones: 1 }) => {
            for n in 1..=max_n {
                let fib_odd = ring.from_integer(&fibonacci(2 * n + 1));
                checks.push(CheckEntry::compare(
                    "fib/two-type-ones-total",
                    n,
                    None,
                    table.row_total(n),
                    &fib_odd,
                ));
                checks.extend(fibonacci_two_ones_identity(n));
            }
        }
        FamilySpec::Named(NamedFamily::NoPart { part: 2 }) => {
            for k in 1..=12u64 {
                checks.push(CheckEntry::compare(
                    "closed/no-2-shift-eight",
                    k + 8,
                    Some(k),
                    &no_two_shift_eight(k),
                    &closed_no_two(k + 8, k),
                ));
                if k + 8 <= oracle_max {
                    let oracle =
                        oracle_count(&Integers, &rule, k + 8, k, oracle_max).expect("within bound");
                    checks.push(CheckEntry::compare(
                        "oracle/no-2-shift-eight",
                        k + 8,
                        Some(k),
                        &no_two_shift_eight(k),
                        &oracle,
                    ));
                }
            }
        }
        _ => {}
    }

    VerificationReport {
        family: family.to_string(),
        max_n,
        checks,
    }
}
