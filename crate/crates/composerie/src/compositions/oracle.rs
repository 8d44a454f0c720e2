//! The brute-force enumeration oracle: walk every composition of `n` into
//! `k` positive parts and sum the weight products directly. This is the
//! defining sum made literal, so it grounds every other counting route.
//!
//! The search space is 2^(n-1) compositions over all k, so the oracle
//! refuses `n` beyond a configurable bound instead of silently running
//! long.

use crate::ring::CommutativeRing;
use crate::weights::WeightRule;
use thiserror::Error;

/// Default ceiling on `n` for oracle enumeration (2^17 compositions).
pub const DEFAULT_ORACLE_MAX: u64 = 18;

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum OracleError {
    #[error(
        "oracle enumeration rejected: n = {n} exceeds the bound {bound}; the search grows \
         as 2^(n-1), raise the bound (--oracle-max or COMPOSERIE_ORACLE_MAX) only if you \
         accept the cost"
    )]
    BoundExceeded { n: u64, bound: u64 },
}

/// The weighted count of compositions of `n` into exactly `k` parts, by
/// exhaustive enumeration. Errors if `n > bound`.
pub fn oracle_count<R: CommutativeRing>(
    ring: &R,
    rule: &WeightRule,
    n: u64,
    k: u64,
    bound: u64,
) -> Result<R::Elem, OracleError> {
    if n > bound {
        return Err(OracleError::BoundExceeded { n, bound });
    }
    if k == 0 {
        return Ok(if n == 0 { ring.one() } else { ring.zero() });
    }
    if k > n {
        return Ok(ring.zero());
    }
    let weights: Vec<R::Elem> = (0..n).map(|i| rule.weight_in(ring, i)).collect();
    let mut total = ring.zero();
    enumerate(ring, &weights, n, k, &ring.one(), &mut total);
    Ok(total)
}

fn enumerate<R: CommutativeRing>(
    ring: &R,
    weights: &[R::Elem],
    remaining: u64,
    parts_left: u64,
    acc: &R::Elem,
    total: &mut R::Elem,
) {
    if parts_left == 1 {
        // The last part is forced to be `remaining` (>= 1 by construction).
        let w = &weights[(remaining - 1) as usize];
        *total = ring.add(total, &ring.mul(acc, w));
        return;
    }
    for part in 1..=(remaining - (parts_left - 1)) {
        let acc = ring.mul(acc, &weights[(part - 1) as usize]);
        enumerate(ring, weights, remaining - part, parts_left - 1, &acc, total);
    }
}

/// The weighted count of all compositions of `n`, summed over every k.
pub fn oracle_count_all<R: CommutativeRing>(
    ring: &R,
    rule: &WeightRule,
    n: u64,
    bound: u64,
) -> Result<R::Elem, OracleError> {
    if n > bound {
        return Err(OracleError::BoundExceeded { n, bound });
    }
    if n == 0 {
        return Ok(ring.one());
    }
    let mut total = ring.zero();
    for k in 1..=n {
        total = ring.add(&total, &oracle_count(ring, rule, n, k, bound)?);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Integers;
    use crate::weights::FamilySpec;
    use num_bigint::BigInt;

    fn rule(spec: &str) -> WeightRule {
        spec.parse::<FamilySpec>().unwrap().to_weights().unwrap()
    }

    fn count(spec: &str, n: u64, k: u64) -> BigInt {
        oracle_count(&Integers, &rule(spec), n, k, DEFAULT_ORACLE_MAX).unwrap()
    }

    #[test]
    fn hand_checked_counts() {
        // 4 = 1+3 = 2+2 = 3+1
        assert_eq!(count("all-ones", 4, 2), BigInt::from(3));
        // 5 into three parts of {1,2}: the arrangements of 2+2+1
        assert_eq!(count("one-or-m:2", 5, 3), BigInt::from(3));
        // two slots, each holding one of two colored 1s
        assert_eq!(count("two-type-ones:1", 2, 2), BigInt::from(4));
        // squared part weights: 1+5, 2+4, 3+3, 4+2, 5+1
        let direct: i64 = (1..=5).map(|p| p * p * (6 - p) * (6 - p)).sum();
        assert_eq!(count("squares", 6, 2), BigInt::from(direct));
    }

    #[test]
    fn empty_composition_and_degenerate_shapes() {
        assert_eq!(count("all-ones", 0, 0), BigInt::from(1));
        assert_eq!(count("all-ones", 3, 0), BigInt::from(0));
        assert_eq!(count("all-ones", 2, 5), BigInt::from(0));
    }

    #[test]
    fn totals_sum_over_k() {
        let total = oracle_count_all(&Integers, &rule("all-ones"), 6, 18).unwrap();
        assert_eq!(total, BigInt::from(32));
        assert_eq!(
            oracle_count_all(&Integers, &rule("residue-1-mod:2"), 6, 18).unwrap(),
            BigInt::from(8)
        );
    }

    #[test]
    fn bound_is_enforced() {
        let err = oracle_count(&Integers, &rule("all-ones"), 19, 2, 18).unwrap_err();
        assert!(matches!(
            err,
            OracleError::BoundExceeded { n: 19, bound: 18 }
        ));
        assert!(oracle_count(&Integers, &rule("all-ones"), 19, 2, 19).is_ok());
    }
}
