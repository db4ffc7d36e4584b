//! Exact Bernoulli numbers.
//!
//! The Bernoulli numbers are defined by the generating function
//! x/(e^x - 1) = Σ B_n x^n/n!, which is equivalent to the recurrence
//!
//! ```text
//! Σ_{n=0}^{N-1} C(N,n)·B_n = 0          for all N > 1,
//! ```
//!
//! solved here for the highest-index term:
//! B_{N-1} = -(1/N)·Σ_{n=0}^{N-2} C(N,n)·B_n. Everything is exact rational
//! arithmetic; binomial coefficients are built multiplicatively as exact
//! integers. B_1 = -1/2, and B_n = 0 for every odd n ≥ 3.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact binomial coefficient C(n, k).
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::ZERO;
    }
    let k = k.min(n - k);
    let mut c = BigInt::one();
    for i in 0..k {
        // exact at every step: C(n, i+1) = C(n, i)·(n-i)/(i+1)
        c = c * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    c
}

/// Memo table of B_0..B_{computed_upto}, extendable in place.
///
/// Extension is append-only: entries already present are never recomputed,
/// so a table extended from N to N' agrees bit-for-bit with a fresh table
/// for N' on indices 0..=N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<BigRational>,
}

impl BernoulliTable {
    /// Table containing just B_0 = 1.
    pub fn new() -> Self {
        BernoulliTable {
            values: alloc::vec![BigRational::one()],
        }
    }

    /// Fresh table with B_0..B_n.
    pub fn up_to(n: usize) -> Self {
        let mut t = Self::new();
        t.extend_to(n);
        t
    }

    /// Highest index currently stored.
    pub fn computed_upto(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> Option<&BigRational> {
        self.values.get(n)
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    /// Ensures B_0..B_n are present; no-op if they already are.
    pub fn extend_to(&mut self, n: usize) {
        while self.values.len() <= n {
            let m = self.values.len(); // computing B_m via the relation with N = m+1
            let big_n = (m + 1) as u64;
            let mut sum = BigRational::zero();
            let mut binom = BigInt::one(); // C(m+1, i), starting at i = 0
            for (i, b) in self.values.iter().take(m).enumerate() {
                if !b.is_zero() {
                    sum += b * BigRational::from_integer(binom.clone());
                }
                binom = binom * BigInt::from(big_n - i as u64) / BigInt::from(i as u64 + 1);
            }
            let b_m = -sum / BigRational::from_integer(BigInt::from(big_n));
            self.values.push(b_m);
        }
    }
}

impl Default for BernoulliTable {
    fn default() -> Self {
        Self::new()
    }
}

/// Fresh exact table B_0..B_n.
pub fn bernoulli_upto(n: usize) -> BernoulliTable {
    BernoulliTable::up_to(n)
}

/// Exact B_n, served from a process-global memo table under `std`.
///
/// Concurrent callers serialize on the table lock; extension is idempotent,
/// so the observable behavior is that of a pure function.
#[cfg(feature = "std")]
pub fn bernoulli(n: usize) -> BigRational {
    use std::sync::{Mutex, OnceLock};
    static TABLE: OnceLock<Mutex<BernoulliTable>> = OnceLock::new();
    let table = TABLE.get_or_init(|| Mutex::new(BernoulliTable::new()));
    let mut guard = table.lock().unwrap_or_else(|poisoned| poisoned.into_inner());
    guard.extend_to(n);
    guard.get(n).expect("extended table").clone()
}

/// Exact B_n, recomputed per call (no global state without `std`).
#[cfg(not(feature = "std"))]
pub fn bernoulli(n: usize) -> BigRational {
    BernoulliTable::up_to(n).get(n).expect("extended table").clone()
}
