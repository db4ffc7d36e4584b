//! Exact rational values of zeta at non-positive integers.
//!
//! For k ≥ 1, ζ(-k) = -B_{k+1}/(k+1); the k = 0 case is the separate known
//! value ζ(0) = -1/2 (the general formula does not cover it). The trivial
//! zeros ζ(-2m) = 0 fall out of the vanishing of odd-index Bernoulli numbers.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::bernoulli::bernoulli;

/// Exact ζ(-k) as a rational number.
pub fn zeta_neg_int(k: u32) -> BigRational {
    if k == 0 {
        return BigRational::new(BigInt::from(-1), BigInt::from(2));
    }
    let b = bernoulli(k as usize + 1);
    -b / BigRational::from_integer(BigInt::from(k + 1))
}

/// ζ(-k) bundled with its argument index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialValue {
    pub k: u32,
    pub value: BigRational,
}

impl SpecialValue {
    pub fn new(k: u32) -> Self {
        SpecialValue {
            k,
            value: zeta_neg_int(k),
        }
    }
}
