//! Closed-form counts for the named weight families, all exact over the
//! integers. Every formula here is cross-checked against the enumeration
//! oracle by the verification suite; summation terms that fall out of
//! range contribute zero through the total binomial convention.

use crate::ring::{binomial, fibonacci, multinomial};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Binomial with both arguments signed; zero outside 0 <= k <= n.
fn binom_ii(n: i128, k: i128) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    binomial(n as u64, k as i64)
}

fn int_pow(base: u64, exp: u64) -> BigInt {
    num_traits::pow(
        BigInt::from(base),
        usize::try_from(exp).expect("exponent fits"),
    )
}

/// Every part allowed: C(n, k) = C(n-1, k-1) ways to place the k-1 bars.
pub fn closed_all_ones(n: u64, k: u64) -> BigInt {
    if n == 0 {
        return if k == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    binom_ii(n as i128 - 1, k as i128 - 1)
}

/// Parts in {1, m1, ..., ms}: a sum of multinomials over the nonnegative
/// solutions of `i0 + i1 + ... + is = k` and
/// `(m1-1) i1 + ... + (ms-1) is = n - k`, where ij counts the parts equal
/// to mj. `extras` holds m1..ms (distinct, each >= 2).
pub fn closed_allowed_set(n: u64, k: u64, extras: &[u64]) -> BigInt {
    debug_assert!(extras.iter().all(|&m| m >= 2));
    if k > n {
        return BigInt::zero();
    }
    let mut total = BigInt::zero();
    let mut counts = vec![0u64; extras.len()];
    enumerate_allowed(n - k, k, extras, 0, &mut counts, &mut total, k);
    total
}

fn enumerate_allowed(
    weight_left: u64,
    slots_left: u64,
    extras: &[u64],
    idx: usize,
    counts: &mut Vec<u64>,
    total: &mut BigInt,
    k: u64,
) {
    if idx == extras.len() {
        if weight_left == 0 {
            // The remaining slots are parts equal to 1.
            let mut parts = Vec::with_capacity(counts.len() + 1);
            parts.push(slots_left);
            parts.extend_from_slice(counts);
            *total += multinomial(k, &parts);
        }
        return;
    }
    let step = extras[idx] - 1;
    let max_count = (weight_left / step).min(slots_left);
    for c in 0..=max_count {
        counts[idx] = c;
        enumerate_allowed(
            weight_left - step * c,
            slots_left - c,
            extras,
            idx + 1,
            counts,
            total,
            k,
        );
    }
    counts[idx] = 0;
}

/// Total count of compositions with every part 1 or m:
/// `sum_j C(n - (m-1) j, j)` over j = 0..floor(n/m).
pub fn closed_one_or_m_all(n: u64, m: u64) -> BigInt {
    assert!(m >= 2, "m must be at least 2");
    (0..=n / m)
        .map(|j| binom_ii(n as i128 - (m as i128 - 1) * j as i128, j as i128))
        .sum()
}

/// Parts congruent to 1 mod m: `C((n-k)/m + k - 1, (n-k)/m)` when
/// m divides n - k, else 0.
pub fn closed_residue(n: u64, k: u64, m: u64) -> BigInt {
    assert!(m >= 1, "modulus must be at least 1");
    if n == 0 {
        return if k == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    if k > n || !(n - k).is_multiple_of(m) {
        return BigInt::zero();
    }
    let q = ((n - k) / m) as i128;
    binom_ii(q + k as i128 - 1, q)
}

/// Compositions of n into k parts, none equal to 2:
/// 1 on the diagonal, else `sum_i C(k,i) C(n-k-i-1, i-1)` over
/// i = 1..floor((n-k)/2), where i counts the parts >= 3.
pub fn closed_no_two(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    if k == n {
        return BigInt::one();
    }
    let gap = (n - k) as i128;
    (1..=gap / 2)
        .map(|i| binomial(k, i as i64) * binom_ii(gap - i - 1, i - 1))
        .sum()
}

/// Compositions of n into k parts, none equal to the forbidden value
/// `m >= 2`. Expands `[(1 + x + ... + x^(m-2)) + x^m (1 + x + ...)]^k`:
/// choose i slots for parts > m (which contribute a stars-and-bars
/// factor), distribute the rest over the parts 1..m-1 (a multinomial),
/// and match the leftover degree j; the i = 0 term survives only at j = 0.
pub fn closed_no_m(n: u64, k: u64, m: u64) -> BigInt {
    assert!(m >= 2, "the forbidden part must be at least 2");
    if k > n {
        return BigInt::zero();
    }
    let gap = n - k;
    let mut total = BigInt::zero();
    for i in 0..=k {
        if m as u128 * i as u128 > gap as u128 {
            break;
        }
        let budget = gap - m * i;
        let mut counts = vec![0u64; (m - 2) as usize];
        let choose_large = binomial(k, i as i64);
        enumerate_small_parts(budget, k - i, i, 0, &mut counts, &choose_large, &mut total);
    }
    total
}

// Distributes `slots` small-part slots over part sizes 2..=m-1 (index t in
// counts[] means parts of size t+2, weighing t+1 degrees each beyond the
// mandatory 1); leftover slots are parts equal to 1.
fn enumerate_small_parts(
    budget: u64,
    slots: u64,
    large: u64,
    idx: usize,
    counts: &mut Vec<u64>,
    choose_large: &BigInt,
    total: &mut BigInt,
) {
    if idx == counts.len() {
        let used: u64 = counts
            .iter()
            .enumerate()
            .map(|(t, &c)| (t as u64 + 1) * c)
            .sum();
        debug_assert!(used <= budget);
        let j = budget - used;
        let tail = if large == 0 {
            if j == 0 {
                BigInt::one()
            } else {
                return;
            }
        } else {
            binom_ii(j as i128 + large as i128 - 1, j as i128)
        };
        let mut parts = Vec::with_capacity(counts.len() + 1);
        parts.push(slots - counts.iter().sum::<u64>());
        parts.extend_from_slice(counts);
        let small_slots: u64 = slots;
        *total += choose_large * multinomial(small_slots, &parts) * tail;
        return;
    }
    let degree = idx as u64 + 1;
    let free: u64 = counts[..idx]
        .iter()
        .enumerate()
        .map(|(t, &c)| (t as u64 + 1) * c)
        .sum();
    let remaining_slots = slots - counts[..idx].iter().sum::<u64>();
    let max_count = ((budget - free) / degree).min(remaining_slots);
    for c in 0..=max_count {
        counts[idx] = c;
        enumerate_small_parts(budget, slots, large, idx + 1, counts, choose_large, total);
    }
    counts[idx] = 0;
}

/// Compositions of n into k parts with no part equal to 3: the double sum
/// `sum_j sum_i C(k,i) C(k-i,j) C(n-2k+j-i-1, i-1)` (j counting the 1s,
/// i the parts >= 4) plus the all-{1,2} term `C(k, 2k-n)`.
pub fn closed_no_three(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let (n, k) = (n as i128, k as i128);
    let mut total = BigInt::zero();
    let ones_only = 2 * k - n;
    if (0..=k).contains(&ones_only) {
        total += binom_ii(k, ones_only);
    }
    for j in 0..=k {
        let top = n - 2 * k + j;
        for i in 1..=(k - j).min(top / 2) {
            total += binom_ii(k, i) * binom_ii(k - i, j) * binom_ii(top - i - 1, i - 1);
        }
    }
    total
}

/// 1 + m colors of the part 1: `(1+m)^n` on the diagonal, else
/// `sum_{i=1}^k C(k,i) C(n-k+i-1, i-1) m^(k-i)` where i counts the
/// parts >= 2 together with the uncolored-1 slots.
pub fn closed_two_type_ones(n: u64, k: u64, m: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    if k == n {
        return int_pow(1 + m, k);
    }
    let gap = (n - k) as i128;
    (1..=k)
        .map(|i| {
            binomial(k, i as i64) * binom_ii(gap + i as i128 - 1, i as i128 - 1) * int_pow(m, k - i)
        })
        .sum()
}

/// Weights r(i) = C(m, i): the k-th power telescopes to (1+x)^(mk), so
/// C(n, k) = C(mk, n-k).
pub fn closed_binomial_weights(n: u64, k: u64, m: u64) -> BigInt {
    assert!(m >= 1, "m must be at least 1");
    binom_ii(m as i128 * k as i128, n as i128 - k as i128)
}

/// Weights r(i) = C(i+m-1, i): C(n, k) = C(n-k+mk-1, n-k).
pub fn closed_pyramidal_weights(n: u64, k: u64, m: u64) -> BigInt {
    assert!(m >= 1, "m must be at least 1");
    if n == 0 {
        return if k == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    let gap = n as i128 - k as i128;
    binom_ii(gap + m as i128 * k as i128 - 1, gap)
}

/// Weights r(i) = (i+1)^2. The weight series is (1+x)/(1-x)^3, so the
/// k-th power expands to
/// `sum_i C(k,i) C(n-k-i+3k-1, n-k-i)` over i = 0..min(k, n-k).
pub fn closed_square_weights(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    if n == 0 {
        return BigInt::one();
    }
    let gap = (n - k) as i128;
    let k = k as i128;
    (0..=k.min(gap))
        .map(|i| binom_ii(k, i) * binom_ii(gap - i + 3 * k - 1, gap - i))
        .sum()
}

/// The quartic form of the no-2 count at n = k + 8:
/// `k + 5 C(k,2) + 6 C(k,3) + C(k,4)`.
pub fn no_two_shift_eight(k: u64) -> BigInt {
    BigInt::from(k) + 5 * binomial(k, 2) + 6 * binomial(k, 3) + binomial(k, 4)
}

/// Fibonacci numbers as sums of residue-class counts:
/// `F(n) = sum_k C((n-k)/2 + k - 1, (n-k)/2)` over k of n's parity.
pub fn fibonacci_odd_parts_sum(n: u64) -> BigInt {
    (1..=n)
        .filter(|k| (n - k).is_multiple_of(2))
        .map(|k| closed_residue(n, k, 2))
        .sum()
}

pub use crate::ring::fibonacci as fibonacci_number;

/// F(2n+1) recovered from the two-colored-ones counts summed over k.
pub fn fibonacci_two_ones_sum(n: u64) -> BigInt {
    (1..=n).map(|k| closed_two_type_ones(n, k, 1)).sum()
}

/// Convenience for tests and the verifier: F(n) with F(1) = F(2) = 1.
pub fn fib(n: u64) -> BigInt {
    fibonacci(n)
}
