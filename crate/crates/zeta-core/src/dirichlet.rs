//! Base-case evaluation of ζ(s) for Re(s) ≥ 2 by direct summation.
//!
//! The partial sum Σ_{n≤N} n^{-s} is corrected with the tail integral
//! ∫_{N+1/2}^∞ x^{-s} dx = (N+1/2)^{1-s}/(s-1), the same series-vs-integral
//! comparison that underlies the continuation identity. The midpoint
//! comparison error on each unit interval is at most max|f''|/24 with
//! f(x) = x^{-s}, which gives the rigorous bound
//!
//! ```text
//! |Σ_{n>N} n^{-s} - (N+1/2)^{1-s}/(s-1)| ≤ |s(s+1)|/(24(σ+1)) · (N-1/2)^{-(σ+1)}
//! ```
//!
//! so the work for tolerance t scales like t^{-1/(σ+1)} instead of the
//! t^{-1/(σ-1)} a bare partial sum would need.

use alloc::format;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::numeric::{int_pow_neg, pow_real, KahanSum};
use crate::types::{require_finite, require_pos_tol, Complex, EvaluationResult, Method, Result, ZetaError};

/// Left edge of the direct-summation domain; the ladder lifts every other
/// argument into this region.
pub const BASE_SIGMA: f64 = 2.0;

const EPS: f64 = f64::EPSILON;

/// Number of terms needed so the tail-comparison bound is ≤ `target`.
fn terms_needed(s: Complex, target: f64) -> u64 {
    let sigma = s.re;
    let coeff = s.norm() * (s + 1.0).norm() / (24.0 * (sigma + 1.0));
    if coeff <= target {
        return 2;
    }
    // (N - 1/2)^{-(σ+1)} ≤ target/coeff
    let n = (coeff / target).powf(1.0 / (sigma + 1.0)) + 0.5;
    let n = if n.is_finite() { n.ceil() } else { f64::MAX };
    n.clamp(2.0, 1e9) as u64
}

/// ζ(s) for Re(s) ≥ 2 with |value - ζ(s)| ≤ tol.
///
/// Errors with `Domain` when Re(s) < 2; the truncation policy guarantees
/// `err_estimate ≤ tol` whenever tol is above the double-precision floor.
pub fn zeta_direct(s: Complex, tol: f64) -> Result<EvaluationResult> {
    require_finite(s)?;
    require_pos_tol(tol)?;
    if s.re < BASE_SIGMA {
        return Err(ZetaError::Domain {
            reason: format!("zeta_direct requires Re(s) >= {BASE_SIGMA}, got Re(s) = {}", s.re),
        });
    }
    // Evaluate in the upper half-plane and conjugate back, so conjugate
    // symmetry holds bit-for-bit regardless of libm internals.
    if s.im < 0.0 {
        let r = zeta_direct(s.conj(), tol)?;
        return Ok(EvaluationResult {
            value: r.value.conj(),
            ..r
        });
    }

    let tol = tol.max(1e-15);
    let n_terms = terms_needed(s, tol / 2.0);
    let mut partial = KahanSum::new();
    for n in 1..=n_terms {
        partial.add(int_pow_neg(n, s));
    }
    let tail = pow_real(n_terms as f64 + 0.5, Complex::new(1.0, 0.0) - s) / (s - 1.0);
    let value = partial.value() + tail;

    // truncation commitment + per-term pow rounding (≈2 ulp each, decaying
    // like n^{-σ}, so bounded by 2·eps·ζ(2)) + tail rounding
    let rounding = 4.0 * EPS + EPS * tail.norm();
    Ok(EvaluationResult {
        value,
        method: Method::Direct,
        depth_k: 0,
        err_estimate: tol / 2.0 + rounding,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_left_of_base() {
        assert!(matches!(
            zeta_direct(Complex::new(1.9, 0.0), 1e-10),
            Err(ZetaError::Domain { .. })
        ));
    }

    #[test]
    fn rejects_non_finite() {
        assert!(zeta_direct(Complex::new(f64::NAN, 0.0), 1e-10).is_err());
        assert!(zeta_direct(Complex::new(2.0, f64::INFINITY), 1e-10).is_err());
        assert!(zeta_direct(Complex::new(2.0, 0.0), 0.0).is_err());
    }

    #[test]
    fn large_sigma_is_one() {
        let r = zeta_direct(Complex::new(100.0, 0.0), 1e-12).unwrap();
        assert!((r.value.re - 1.0).abs() <= 1e-12);
        assert!(r.value.im.abs() <= 1e-12);
        assert_eq!(r.method, Method::Direct);
        assert_eq!(r.depth_k, 0);
    }

    #[test]
    fn err_estimate_within_request() {
        let r = zeta_direct(Complex::new(2.0, 5.0), 1e-10).unwrap();
        assert!(r.err_estimate <= 1e-10);
    }
}
