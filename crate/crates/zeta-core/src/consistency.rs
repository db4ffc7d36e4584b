//! Cross-validation suites: ladder vs. exact values, ladder vs. the
//! independent oracle, and depth-stability of the recursion.
//!
//! These back both the test suite and the CLI `check` command, which exists
//! so end users can reproduce the correctness evidence on their own build.

use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::ladder::{min_depth, zeta, zeta_at_depth, LadderConfig};
use crate::oracle::zeta_hasse;
use crate::special_values::zeta_neg_int;
use crate::types::{Complex, Result};

/// Outcome of one suite: the worst absolute deviation observed.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub points: usize,
    pub max_err: f64,
    /// Argument at which the maximum was attained.
    pub worst_at: Option<Complex>,
}

impl SuiteReport {
    fn record(&mut self, s: Complex, err: f64) {
        self.points += 1;
        if err > self.max_err {
            self.max_err = err;
            self.worst_at = Some(s);
        }
    }
}

/// The standard 20×10 evaluation grid: Re ∈ [-6, 4], Im ∈ [-5, 5].
///
/// The imaginary spacing skips the real axis, so every point keeps
/// |s - 1| ≥ 0.55 and the grid has exactly 200 usable points.
pub fn standard_grid() -> Vec<Complex> {
    let mut grid = Vec::with_capacity(200);
    for i in 0..20 {
        let re = -6.0 + 10.0 * (i as f64) / 19.0;
        for j in 0..10 {
            let im = -5.0 + 10.0 * (j as f64) / 9.0;
            let s = Complex::new(re, im);
            if (s - 1.0).norm() >= 0.5 {
                grid.push(s);
            }
        }
    }
    grid
}

/// |zeta(-k) - ζ(-k)_exact| over k = 0..=10.
///
/// With `inject_fault` the k = 5 expected value is perturbed by 1e-3, which
/// a healthy build must detect; this validates that the comparison has teeth.
pub fn suite_ladder_vs_exact(cfg: &LadderConfig, inject_fault: bool) -> Result<SuiteReport> {
    let mut report = SuiteReport {
        name: "ladder_vs_exact",
        points: 0,
        max_err: 0.0,
        worst_at: None,
    };
    for k in 0..=10u32 {
        let s = Complex::new(-(f64::from(k)), 0.0);
        let numeric = zeta(s, cfg)?.value;
        let mut exact = zeta_neg_int(k).to_f64().expect("small rational fits f64");
        if inject_fault && k == 5 {
            exact += 1e-3;
        }
        let err = (numeric - Complex::new(exact, 0.0)).norm();
        report.record(s, err);
    }
    Ok(report)
}

/// |zeta(s) - zeta_hasse(s)| over the standard grid.
pub fn suite_ladder_vs_oracle(cfg: &LadderConfig, oracle_tol: f64) -> Result<SuiteReport> {
    let mut report = SuiteReport {
        name: "ladder_vs_oracle",
        points: 0,
        max_err: 0.0,
        worst_at: None,
    };
    for s in standard_grid() {
        let a = zeta(s, cfg)?.value;
        let b = zeta_hasse(s, oracle_tol)?.value;
        report.record(s, (a - b).norm());
    }
    Ok(report)
}

/// |zeta at depth k_min - zeta at depth k_min+2| over the standard grid.
pub fn suite_cross_depth(cfg: &LadderConfig) -> Result<SuiteReport> {
    let mut report = SuiteReport {
        name: "cross_depth",
        points: 0,
        max_err: 0.0,
        worst_at: None,
    };
    for s in standard_grid() {
        let k = min_depth(s, cfg);
        let a = zeta_at_depth(s, k, cfg)?.value;
        let b = zeta_at_depth(s, k + 2, cfg)?.value;
        report.record(s, (a - b).norm());
    }
    Ok(report)
}
