//! Counting weighted compositions four independent ways.
//!
//! C(n, k) is the weighted count of compositions of `n` into exactly `k`
//! positive parts, where part `p` carries the weight r(p-1) and a
//! composition's weight is the product of its parts' weights. The routes:
//!
//! * the two-variable recurrence
//!   `C(n,k) = sum_{i=0}^{n-k} r(i) C(n-i-1, k-1)` ([`count_rec`],
//!   [`build_table`]), with `C(0,0) = 1`, `C(n,0) = 0` for `n > 0`;
//! * coefficient extraction: `C(n,k)` is the coefficient of `x^(n-k)` in
//!   `(sum_i r(i) x^i)^k` ([`count_via_gf`]);
//! * per-family closed formulas ([`closed`]);
//! * exhaustive enumeration of the compositions themselves ([`oracle`]),
//!   the ground truth everything else is checked against.
//!
//! The total count C(n) sums over k and obeys its own recurrence
//! `C(n) = sum_{i=0}^{n-1} r(i) C(n-i-1)` with `C(0) = 1`.

pub mod closed;
pub mod oracle;
pub mod verify;

pub use closed::*;
pub use oracle::{oracle_count, oracle_count_all, OracleError, DEFAULT_ORACLE_MAX};
pub use verify::{
    fibonacci_odd_identity, fibonacci_two_ones_identity, verify_family, CheckEntry,
    VerificationReport,
};

use crate::ring::CommutativeRing;
use crate::series::TruncatedSeries;
use crate::weights::WeightRule;

/// The triangle C(n, k) for 0 <= k <= n <= max_n, plus the row totals C(n).
#[derive(Clone, PartialEq, Debug)]
pub struct CompositionTable<R: CommutativeRing> {
    ring: R,
    cells: Vec<Vec<R::Elem>>,
    row_totals: Vec<R::Elem>,
}

impl<R: CommutativeRing> CompositionTable<R> {
    pub fn max_n(&self) -> u64 {
        (self.cells.len() - 1) as u64
    }

    /// C(n, k). Panics outside the stored triangle (k > n or n > max_n).
    pub fn cell(&self, n: u64, k: u64) -> &R::Elem {
        assert!(
            n <= self.max_n() && k <= n,
            "cell ({n},{k}) outside the triangle with max_n {}",
            self.max_n()
        );
        &self.cells[n as usize][k as usize]
    }

    /// The total count C(n), the sum of row n over k = 1..=n (1 at n = 0).
    pub fn row_total(&self, n: u64) -> &R::Elem {
        &self.row_totals[n as usize]
    }

    pub fn rows(&self) -> &[Vec<R::Elem>] {
        &self.cells
    }
}

/// Fills the whole triangle up to `max_n` by dynamic programming over the
/// recurrence, sharing every subresult, and accumulates the row totals.
pub fn build_table<R: CommutativeRing>(
    ring: &R,
    rule: &WeightRule,
    max_n: u64,
) -> CompositionTable<R> {
    let n_max = usize::try_from(max_n).expect("max_n fits in usize");
    let weights: Vec<R::Elem> = (0..n_max as u64).map(|i| rule.weight_in(ring, i)).collect();

    let mut cells: Vec<Vec<R::Elem>> = Vec::with_capacity(n_max + 1);
    cells.push(vec![ring.one()]);
    for n in 1..=n_max {
        let mut row = Vec::with_capacity(n + 1);
        row.push(ring.zero());
        for k in 1..=n {
            let mut acc = ring.zero();
            for i in 0..=(n - k) {
                let below = &cells[n - i - 1][k - 1];
                acc = ring.add(&acc, &ring.mul(&weights[i], below));
            }
            row.push(acc);
        }
        cells.push(row);
    }

    let row_totals = cells
        .iter()
        .enumerate()
        .map(|(n, row)| {
            if n == 0 {
                ring.one()
            } else {
                row.iter()
                    .skip(1)
                    .fold(ring.zero(), |acc, c| ring.add(&acc, c))
            }
        })
        .collect();

    CompositionTable {
        ring: ring.clone(),
        cells,
        row_totals,
    }
}

/// C(n, k) via the recurrence. Total in n and k: out-of-triangle pairs
/// (k > n) count zero.
pub fn count_rec<R: CommutativeRing>(ring: &R, rule: &WeightRule, n: u64, k: u64) -> R::Elem {
    if k > n {
        return ring.zero();
    }
    build_table(ring, rule, n).cell(n, k).clone()
}

/// The total count C(n) via its one-dimensional recurrence.
pub fn count_all_rec<R: CommutativeRing>(ring: &R, rule: &WeightRule, n: u64) -> R::Elem {
    let n = usize::try_from(n).expect("n fits in usize");
    let mut totals: Vec<R::Elem> = Vec::with_capacity(n + 1);
    totals.push(ring.one());
    for m in 1..=n {
        let mut acc = ring.zero();
        for i in 0..m {
            let w = rule.weight_in(ring, i as u64);
            acc = ring.add(&acc, &ring.mul(&w, &totals[m - i - 1]));
        }
        totals.push(acc);
    }
    totals.pop().expect("at least one total")
}

/// C(n, k) as the coefficient of x^(n-k) in the k-th power of the weight
/// series, truncated at order n-k+1.
pub fn count_via_gf<R: CommutativeRing>(ring: &R, rule: &WeightRule, n: u64, k: u64) -> R::Elem {
    if k > n {
        return ring.zero();
    }
    let target = usize::try_from(n - k).expect("n - k fits in usize");
    let series = TruncatedSeries::from_weights(ring.clone(), rule, target + 1);
    series.pow(k).coeff(target).clone()
}

/// The total count C(n) as the sum over k of the coefficient route.
pub fn count_all_via_gf<R: CommutativeRing>(ring: &R, rule: &WeightRule, n: u64) -> R::Elem {
    if n == 0 {
        return ring.one();
    }
    (1..=n).fold(ring.zero(), |acc, k| {
        ring.add(&acc, &count_via_gf(ring, rule, n, k))
    })
}
