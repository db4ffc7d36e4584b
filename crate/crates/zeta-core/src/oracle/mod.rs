//! Independent reference evaluator.
//!
//! Implements the globally convergent double series
//!
//! ```text
//! ζ(s) = 1/(1-2^{1-s}) · Σ_{n≥0} 2^{-(n+1)} Σ_{j=0}^{n} (-1)^j C(n,j) (j+1)^{-s}
//! ```
//!
//! which shares no machinery with the ladder relation, so agreement between
//! the two is meaningful evidence of correctness. The outer terms decay
//! roughly geometrically; the inner alternating sums are evaluated with
//! exact binomial integers against 288-bit fixed-point powers (see
//! [`fixed`](self)) because double precision loses everything to
//! cancellation once n grows past ~40.
//!
//! This is a verification tool, not a fast path: the CLI `check` command and
//! the consistency suites are its consumers.

mod fixed;

use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::types::{require_finite, require_pos_tol, Complex, EvaluationResult, Method, Result, ZetaError};

use fixed::{int_pow_neg_s, two_pow_one_minus_s, Consts, Fx, FxComplex};

/// Outer-iteration cap.
const MAX_OUTER: usize = 256;

/// ζ(s) by the globally convergent double series, to absolute accuracy tol.
///
/// Domain: |s-1| ≥ 1e-9 and 1-2^{1-s} bounded away from zero (this excludes
/// the points s = 1 - 2πik/ln 2 on the line σ = 1). Errors with
/// `Convergence` if the outer cap of 256 terms is reached before the term
/// bound; in practice that means Re(s) below roughly -35.
pub fn zeta_hasse(s: Complex, tol: f64) -> Result<EvaluationResult> {
    require_finite(s)?;
    require_pos_tol(tol)?;
    if (s - 1.0).norm() < 1e-9 {
        return Err(ZetaError::Domain {
            reason: format!("oracle requires |s - 1| >= 1e-9, got s = {s}"),
        });
    }
    if s.re.abs() > 256.0 || s.im.abs() > 1e6 {
        return Err(ZetaError::Domain {
            reason: format!("oracle supports |Re(s)| <= 256 and |Im(s)| <= 1e6, got s = {s}"),
        });
    }

    let consts = Consts::new();
    let prefactor = {
        let one = FxComplex {
            re: Fx::one(),
            im: Fx::zero(),
        };
        one.sub(&two_pow_one_minus_s(s, &consts))
    };
    let pre_mag = prefactor.to_complex().norm();
    if pre_mag < 5e-10 {
        return Err(ZetaError::Domain {
            reason: format!("oracle prefactor 1 - 2^(1-s) vanishes near s = {s}"),
        });
    }

    // Division by the prefactor amplifies absolute error by 1/|1-2^{1-s}|,
    // so the outer truncation threshold absorbs it.
    let threshold = tol * pre_mag / 4.0;

    let mut powers: Vec<FxComplex> = Vec::new();
    let mut binom_row: Vec<BigInt> = Vec::with_capacity(MAX_OUTER + 1);
    let mut sum = FxComplex::zero();
    let mut small_streak = 0;

    for n in 0..=MAX_OUTER {
        // extend Pascal's row in place: row[j] = C(n, j)
        binom_row.push(BigInt::from(1));
        for j in (1..n).rev() {
            let prev = binom_row[j - 1].clone();
            binom_row[j] += prev;
        }
        while powers.len() <= n {
            let j1 = (powers.len() + 1) as u32;
            powers.push(int_pow_neg_s(j1, s, &consts));
        }

        // exact alternating inner sum at the fixed-point scale
        let mut inner_re = BigInt::ZERO;
        let mut inner_im = BigInt::ZERO;
        for (j, c) in binom_row.iter().enumerate() {
            let g = &powers[j];
            if j % 2 == 0 {
                inner_re += c * &g.re.0;
                inner_im += c * &g.im.0;
            } else {
                inner_re -= c * &g.re.0;
                inner_im -= c * &g.im.0;
            }
        }
        let outer = FxComplex {
            re: Fx(inner_re),
            im: Fx(inner_im),
        }
        .scale2(-(n as i64 + 1));
        sum = sum.add(&outer);

        if outer.norm1() <= threshold {
            small_streak += 1;
            if small_streak >= 2 && n >= 8 {
                let value = sum.div(&prefactor).to_complex();
                return Ok(EvaluationResult {
                    value,
                    method: Method::Direct,
                    depth_k: 0,
                    err_estimate: tol,
                });
            }
        } else {
            small_streak = 0;
        }
    }

    Err(ZetaError::Convergence {
        terms_used: MAX_OUTER + 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_at_zero_and_minus_one() {
        // finite differences of degree-d polynomials vanish for n > d, so
        // these come out exactly
        let z0 = zeta_hasse(Complex::new(0.0, 0.0), 1e-10).unwrap();
        assert!((z0.value.re + 0.5).abs() <= 1e-14, "{}", z0.value);
        assert!(z0.value.im.abs() <= 1e-14);

        let z1 = zeta_hasse(Complex::new(-1.0, 0.0), 1e-10).unwrap();
        assert!((z1.value.re + 1.0 / 12.0).abs() <= 1e-14);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            zeta_hasse(Complex::new(1.0, 0.0), 1e-10),
            Err(ZetaError::Domain { .. })
        ));
        assert!(matches!(
            zeta_hasse(Complex::new(1.0 + 1e-10, 0.0), 1e-10),
            Err(ZetaError::Domain { .. })
        ));
        // an eta zero on the line σ = 1: s = 1 - 2πi/ln 2
        let eta_zero = Complex::new(1.0, -2.0 * core::f64::consts::PI / core::f64::consts::LN_2);
        assert!(matches!(
            zeta_hasse(eta_zero, 1e-10),
            Err(ZetaError::Domain { .. })
        ));
        assert!(zeta_hasse(Complex::new(1.0, 1.0), 1e-10).is_ok());
    }

    #[test]
    fn deep_left_half_plane_hits_cap() {
        assert!(matches!(
            zeta_hasse(Complex::new(-60.0, 0.0), 1e-10),
            Err(ZetaError::Convergence { .. })
        ));
    }
}
