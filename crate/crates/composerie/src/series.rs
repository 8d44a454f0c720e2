//! Truncated formal power series over a commutative ring.
//!
//! A series is kept modulo x^order. Multiplication is schoolbook
//! convolution, which is exact over any ring; powers use binary
//! exponentiation on top of it. Every operation truncates to the smallest
//! input order, and reading a coefficient at or beyond the order panics —
//! an under-sized truncation should fail loudly, not return zero.

use crate::ring::CommutativeRing;
use crate::weights::WeightRule;

/// Coefficients c0..c_{order-1} of a series modulo x^order; order >= 1.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedSeries<R: CommutativeRing> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: CommutativeRing> TruncatedSeries<R> {
    /// Panics if `coeffs` is empty.
    pub fn new(ring: R, coeffs: Vec<R::Elem>) -> Self {
        assert!(!coeffs.is_empty(), "series order must be at least 1");
        TruncatedSeries { ring, coeffs }
    }

    /// The constant series 1, truncated to `order`.
    pub fn one(ring: R, order: usize) -> Self {
        assert!(order >= 1, "series order must be at least 1");
        let mut coeffs = vec![ring.zero(); order];
        coeffs[0] = ring.one();
        TruncatedSeries { ring, coeffs }
    }

    /// The series whose coefficient of x^i is the weight r(i), for i < order.
    pub fn from_weights(ring: R, rule: &WeightRule, order: usize) -> Self {
        assert!(order >= 1, "series order must be at least 1");
        let coeffs = (0..order as u64)
            .map(|i| rule.weight_in(&ring, i))
            .collect();
        TruncatedSeries { ring, coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    /// The coefficient of x^n.
    ///
    /// Panics if `n >= order`: the caller truncated too early and the value
    /// is simply not present.
    pub fn coeff(&self, n: usize) -> &R::Elem {
        assert!(
            n < self.coeffs.len(),
            "coefficient {n} requested from a series truncated at order {}; \
             increase the truncation order",
            self.coeffs.len()
        );
        &self.coeffs[n]
    }

    /// Cauchy product, truncated to the smaller input order.
    ///
    /// Panics if the factors live over different rings.
    pub fn mul(&self, other: &Self) -> Self {
        assert!(
            self.ring == other.ring,
            "cannot multiply series over different rings"
        );
        let order = self.order().min(other.order());
        let ring = &self.ring;
        let mut coeffs = Vec::with_capacity(order);
        for i in 0..order {
            let mut acc = ring.zero();
            for j in 0..=i {
                acc = ring.add(&acc, &ring.mul(&self.coeffs[j], &other.coeffs[i - j]));
            }
            coeffs.push(acc);
        }
        TruncatedSeries {
            ring: ring.clone(),
            coeffs,
        }
    }

    /// k-th power by binary exponentiation; k = 0 gives the series 1.
    pub fn pow(&self, k: u64) -> Self {
        self.pow_counted(k).0
    }

    /// Like [`pow`](Self::pow), also reporting how many series
    /// multiplications were performed: floor(log2 k) squarings plus
    /// popcount(k) - 1 extra products, for k >= 1.
    pub fn pow_counted(&self, k: u64) -> (Self, u64) {
        if k == 0 {
            return (Self::one(self.ring.clone(), self.order()), 0);
        }
        let mut result = self.clone();
        let mut muls = 0;
        let top_bit = 63 - k.leading_zeros();
        for bit in (0..top_bit).rev() {
            result = result.mul(&result);
            muls += 1;
            if (k >> bit) & 1 == 1 {
                result = result.mul(self);
                muls += 1;
            }
        }
        (result, muls)
    }

    /// k-th power by k - 1 successive multiplications. Same contract as
    /// [`pow`](Self::pow); kept as an independent baseline and cross-check.
    pub fn pow_naive(&self, k: u64) -> Self {
        self.pow_naive_counted(k).0
    }

    pub fn pow_naive_counted(&self, k: u64) -> (Self, u64) {
        if k == 0 {
            return (Self::one(self.ring.clone(), self.order()), 0);
        }
        let mut result = self.clone();
        let mut muls = 0;
        for _ in 1..k {
            result = result.mul(self);
            muls += 1;
        }
        (result, muls)
    }
}
