//! Commutative rings with identity, plus the combinatorial helpers
//! (binomial, multinomial, Fibonacci) shared by every counting formula.
//!
//! Two rings are provided: [`Integers`] (arbitrary precision) and
//! [`Modular`] (canonical residues modulo a fixed `p >= 2`). Only
//! division-free operations are exposed; nothing here assumes inverses
//! exist.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt::{Debug, Display};

/// A commutative ring with 1.
///
/// The carrier is a value (not just a type) so that rings with runtime
/// parameters, like residues mod `p`, fit the same interface. Laws expected
/// of implementors: `add` and `mul` are associative and commutative,
/// `zero`/`one` are the respective identities, `mul` distributes over
/// `add`, and `from_integer` is a ring homomorphism from the integers.
#[allow(clippy::wrong_self_convention)] // the carrier is a value; `from_*` reads right
pub trait CommutativeRing: Clone + PartialEq + Debug {
    type Elem: Clone + Eq + Debug + Display + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// The canonical homomorphism from the integers, `1 + 1 + ... + 1`.
    fn from_integer(&self, x: &BigInt) -> Self::Elem;

    fn from_u64(&self, x: u64) -> Self::Elem {
        self.from_integer(&BigInt::from(x))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
}

/// The ring of integers, at arbitrary precision.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Integers;

impl CommutativeRing for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn from_integer(&self, x: &BigInt) -> BigInt {
        x.clone()
    }
}

/// Integers modulo `modulus`, stored as canonical residues `0 <= v < modulus`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Modular {
    modulus: u64,
}

impl Modular {
    /// Panics if `modulus < 2`.
    pub fn new(modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2, got {modulus}");
        Modular { modulus }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

impl CommutativeRing for Modular {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.modulus
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.modulus as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.modulus as u128) as u64
    }

    fn from_integer(&self, x: &BigInt) -> u64 {
        ring_hom_mod(x, self.modulus)
    }
}

/// Canonical residue of `x` modulo `p`: the unique `r` with
/// `0 <= r < p` and `x = r (mod p)`. A ring homomorphism in `x`.
///
/// Panics if `p < 2`.
pub fn ring_hom_mod(x: &BigInt, p: u64) -> u64 {
    assert!(p >= 2, "modulus must be at least 2, got {p}");
    let m = BigInt::from(p);
    let mut r = x % &m;
    if r < BigInt::zero() {
        r += &m;
    }
    r.to_u64().expect("canonical residue fits in u64")
}

/// Binomial coefficient C(n, k), exact.
///
/// Out-of-range arguments follow the total convention: the result is 0
/// for `k < 0` or `k > n`, which lets summation formulas skip invalid
/// terms without per-call guards.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    // Partial products C(n-k+j, j) stay integral, so each division is exact.
    let mut result = BigInt::one();
    for j in 1..=k {
        result *= BigInt::from(n - k + j);
        result /= BigInt::from(j);
    }
    result
}

fn factorial(n: u64) -> BigInt {
    let mut result = BigInt::one();
    for j in 2..=n {
        result *= BigInt::from(j);
    }
    result
}

/// Multinomial coefficient k!/(i0!·i1!·...·is!) when the parts sum to `k`,
/// and 0 otherwise.
pub fn multinomial(k: u64, parts: &[u64]) -> BigInt {
    let sum: u128 = parts.iter().map(|&p| p as u128).sum();
    if sum != k as u128 {
        return BigInt::zero();
    }
    let mut result = factorial(k);
    for &p in parts {
        result /= factorial(p);
    }
    result
}

/// Fibonacci number F(n) under the convention F(1) = F(2) = 1.
///
/// Panics if `n == 0`; the sequence starts at F(1) here.
pub fn fibonacci(n: u64) -> BigInt {
    assert!(
        n >= 1,
        "fibonacci(0) is undefined; the sequence starts at F(1) = 1"
    );
    let (mut prev, mut curr) = (BigInt::zero(), BigInt::one());
    for _ in 1..n {
        let next = &prev + &curr;
        prev = curr;
        curr = next;
    }
    curr
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binomial_small_cases() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(10, 5), BigInt::from(252));
        assert_eq!(binomial(30, 15), BigInt::from(155_117_520u64));
    }

    #[test]
    fn binomial_out_of_range_is_zero() {
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(0, 1), BigInt::zero());
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        // Independent additive construction of the triangle up to n = 64.
        let mut row = vec![BigInt::one()];
        for n in 1..=64u64 {
            let mut next = vec![BigInt::one()];
            for k in 1..n as usize {
                next.push(&row[k - 1] + &row[k]);
            }
            next.push(BigInt::one());
            row = next;
            for (k, expected) in row.iter().enumerate() {
                assert_eq!(&binomial(n, k as i64), expected, "C({n},{k})");
            }
        }
    }

    #[test]
    fn binomial_pascal_rule() {
        for n in 1..=64u64 {
            for k in 1..=n as i64 {
                assert_eq!(
                    binomial(n, k),
                    binomial(n - 1, k - 1) + binomial(n - 1, k),
                    "Pascal rule at ({n},{k})"
                );
            }
        }
    }

    #[test]
    fn multinomial_small_cases() {
        assert_eq!(multinomial(3, &[1, 1, 1]), BigInt::from(6));
        assert_eq!(multinomial(4, &[4]), BigInt::from(1));
        assert_eq!(multinomial(6, &[2, 2, 2]), BigInt::from(90));
        assert_eq!(
            multinomial(5, &[2, 2]),
            BigInt::zero(),
            "parts must sum to k"
        );
        assert_eq!(multinomial(0, &[]), BigInt::one());
    }

    // Enumerates (in test code, independent of the library oracle) every way
    // to write k as an ordered list of at most `max_len` nonnegative parts.
    fn part_lists(k: u64, max_len: usize) -> Vec<Vec<u64>> {
        if max_len == 0 {
            return if k == 0 { vec![vec![]] } else { vec![] };
        }
        let mut out = Vec::new();
        for first in 0..=k {
            for mut rest in part_lists(k - first, max_len - 1) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn multinomial_matches_product_of_binomials() {
        for k in 0..=12u64 {
            for parts in part_lists(k, 5) {
                let mut expected = BigInt::one();
                let mut remaining = k;
                for &p in &parts {
                    expected *= binomial(remaining, p as i64);
                    remaining -= p;
                }
                assert_eq!(multinomial(k, &parts), expected, "k={k} parts={parts:?}");
            }
        }
    }

    #[test]
    fn fibonacci_values() {
        assert_eq!(fibonacci(1), BigInt::one());
        assert_eq!(fibonacci(2), BigInt::one());
        assert_eq!(fibonacci(10), BigInt::from(55));
        for n in 3..=40u64 {
            assert_eq!(fibonacci(n), fibonacci(n - 1) + fibonacci(n - 2));
        }
    }

    #[test]
    #[should_panic(expected = "fibonacci(0) is undefined")]
    fn fibonacci_rejects_zero() {
        fibonacci(0);
    }

    #[test]
    fn ring_hom_mod_small_cases() {
        assert_eq!(ring_hom_mod(&BigInt::from(17), 5), 2);
        assert_eq!(ring_hom_mod(&BigInt::from(0), 7), 0);
        assert_eq!(ring_hom_mod(&BigInt::from(-3), 7), 4);
    }

    #[test]
    #[should_panic(expected = "modulus must be at least 2")]
    fn ring_hom_mod_rejects_small_modulus() {
        ring_hom_mod(&BigInt::from(1), 1);
    }

    #[test]
    #[should_panic(expected = "modulus must be at least 2")]
    fn modular_rejects_small_modulus() {
        Modular::new(0);
    }

    fn check_ring_axioms<R: CommutativeRing>(ring: &R, a: &R::Elem, b: &R::Elem, c: &R::Elem) {
        assert_eq!(ring.add(a, b), ring.add(b, a));
        assert_eq!(ring.mul(a, b), ring.mul(b, a));
        assert_eq!(ring.add(a, &ring.add(b, c)), ring.add(&ring.add(a, b), c));
        assert_eq!(ring.mul(a, &ring.mul(b, c)), ring.mul(&ring.mul(a, b), c));
        assert_eq!(ring.mul(&ring.one(), a), *a);
        assert_eq!(ring.mul(&ring.zero(), a), ring.zero());
        assert_eq!(ring.add(a, &ring.neg(a)), ring.zero());
        assert_eq!(
            ring.mul(a, &ring.add(b, c)),
            ring.add(&ring.mul(a, b), &ring.mul(a, c))
        );
    }

    proptest! {
        #[test]
        fn integer_ring_axioms(a in -1000i64..1000, b in -1000i64..1000, c in -1000i64..1000) {
            let ring = Integers;
            check_ring_axioms(&ring, &BigInt::from(a), &BigInt::from(b), &BigInt::from(c));
        }

        #[test]
        fn modular_ring_axioms(a: u64, b: u64, c: u64, p in 2u64..1_000_000) {
            let ring = Modular::new(p);
            check_ring_axioms(&ring, &(a % p), &(b % p), &(c % p));
        }

        #[test]
        fn hom_commutes_with_ring_ops(x in -1_000_000_000i64..1_000_000_000,
                                      y in -1_000_000_000i64..1_000_000_000,
                                      p in 2u64..1_000_000) {
            let ring = Modular::new(p);
            let (bx, by) = (BigInt::from(x), BigInt::from(y));
            prop_assert_eq!(ring_hom_mod(&(&bx + &by), p),
                            ring.add(&ring_hom_mod(&bx, p), &ring_hom_mod(&by, p)));
            prop_assert_eq!(ring_hom_mod(&(&bx * &by), p),
                            ring.mul(&ring_hom_mod(&bx, p), &ring_hom_mod(&by, p)));
        }
    }

    #[test]
    fn hom_property_many_random_pairs() {
        // 10^3 fixed-seed random pairs, both operations.
        use rand::{Rng, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
        let ring = Modular::new(97);
        for _ in 0..1000 {
            let x = BigInt::from(rng.gen::<i128>());
            let y = BigInt::from(rng.gen::<i128>());
            assert_eq!(
                ring_hom_mod(&(&x + &y), 97),
                ring.add(&ring_hom_mod(&x, 97), &ring_hom_mod(&y, 97))
            );
            assert_eq!(
                ring_hom_mod(&(&x * &y), 97),
                ring.mul(&ring_hom_mod(&x, 97), &ring_hom_mod(&y, 97))
            );
        }
    }
}
