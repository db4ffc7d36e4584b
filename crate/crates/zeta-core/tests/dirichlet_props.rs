//! Direct-summation module: frozen values against the brute-force oracle,
//! conjugate symmetry, refinement monotonicity, and the series tail bound.

mod common;

use proptest::prelude::*;

use zeta_core::dirichlet::zeta_direct;
use zeta_core::{Complex, ZetaError};

#[test]
fn frozen_reference_values_match_brute_force() {
    // pin the constants used across the suites to the independent oracle
    assert!((common::brute_zeta_real(2.0) - common::ZETA_2).abs() <= 1e-13);
    assert!((common::brute_zeta_real(3.0) - common::ZETA_3).abs() <= 1e-13);
    let half = common::cvz_zeta(Complex::new(0.5, 0.0), 60);
    assert!((half.re - common::ZETA_HALF).abs() <= 1e-13);
    assert!(half.im.abs() <= 1e-13);
}

#[test]
fn zeta_2_and_3() {
    let z2 = zeta_direct(Complex::new(2.0, 0.0), 1e-10).unwrap();
    assert!((z2.value.re - common::ZETA_2).abs() <= 1e-10);
    let z3 = zeta_direct(Complex::new(3.0, 0.0), 1e-10).unwrap();
    assert!((z3.value.re - common::ZETA_3).abs() <= 1e-10);
}

#[test]
fn hundred_is_one_to_twelve_digits() {
    let r = zeta_direct(Complex::new(100.0, 0.0), 1e-12).unwrap();
    assert!((r.value - Complex::new(1.0, 0.0)).norm() <= 1e-12);
}

#[test]
fn refinement_is_monotone() {
    // decreasing tol must not move the value away from the reference
    for s in [
        Complex::new(2.0, 0.0),
        Complex::new(2.5, 3.0),
        Complex::new(4.0, -1.0),
    ] {
        let reference = common::cvz_zeta(s, 60);
        let mut prev = f64::INFINITY;
        for tol in [1e-4, 1e-6, 1e-8, 1e-10, 1e-12] {
            let err = (zeta_direct(s, tol).unwrap().value - reference).norm();
            assert!(
                err <= prev + 2e-15,
                "refinement regressed at s = {s}, tol = {tol:e}: {err:e} after {prev:e}"
            );
            prev = err;
        }
    }
}

#[test]
fn tail_bound_honored_by_partial_sums() {
    // |Σ_{n>N} n^{-s}| ≤ N^{1-σ}/(σ-1), checked against a 10N-term sum
    let partial = |s: Complex, n: u64| -> Complex {
        let mut acc = Complex::new(0.0, 0.0);
        for m in 1..=n {
            acc += (-s * (m as f64).ln()).exp();
        }
        acc
    };
    for s in [
        Complex::new(2.0, 0.0),
        Complex::new(2.0, 2.0),
        Complex::new(3.5, -1.0),
    ] {
        for n in [10u64, 100, 1000] {
            let gap = (partial(s, 10 * n) - partial(s, n)).norm();
            let bound = (n as f64).powf(1.0 - s.re) / (s.re - 1.0);
            assert!(gap <= bound, "tail bound violated at s = {s}, N = {n}");
        }
    }
}

#[test]
fn domain_and_argument_errors() {
    assert!(matches!(
        zeta_direct(Complex::new(1.99, 5.0), 1e-8),
        Err(ZetaError::Domain { .. })
    ));
    assert!(zeta_direct(Complex::new(2.0, 0.0), -1.0).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn conjugate_symmetry_is_exact(sigma in 2.0f64..12.0, t in 0.01f64..20.0, tol_exp in 6i32..12) {
        let tol = 10f64.powi(-tol_exp);
        let s = Complex::new(sigma, t);
        let a = zeta_direct(s, tol).unwrap().value;
        let b = zeta_direct(s.conj(), tol).unwrap().value;
        prop_assert_eq!(a.conj(), b);
    }

    #[test]
    fn err_estimate_within_tol(sigma in 2.0f64..30.0, t in -10.0f64..10.0, tol_exp in 5i32..12) {
        let tol = 10f64.powi(-tol_exp);
        let r = zeta_direct(Complex::new(sigma, t), tol).unwrap();
        prop_assert!(r.err_estimate <= tol);
    }
}
