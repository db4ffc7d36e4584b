//! Shared value and error types.

use alloc::string::String;
use core::fmt;

/// Complex argument s = σ + it, double precision.
pub type Complex = num_complex::Complex64;

/// How a value was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Direct Dirichlet-series summation (Re(s) ≥ 2).
    Direct,
    /// The binomial continuation recursion.
    Ladder,
    /// Exact rational arithmetic.
    Exact,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::Ladder => "ladder",
            Method::Exact => "exact",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A computed complex value together with provenance and an error commitment.
///
/// `err_estimate` is the absolute-error bound the implementation commits to
/// under its truncation policy (interpreted relative to |value| once the
/// value exceeds 1 in magnitude). It accounts for rounding at double
/// precision; it cannot drop below roughly 1e-15.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvaluationResult {
    pub value: Complex,
    pub method: Method,
    /// Ladder depth used (0 for direct/exact evaluations).
    pub depth_k: u32,
    pub err_estimate: f64,
}

/// Errors reported by evaluation routines.
#[derive(Debug, Clone, PartialEq)]
pub enum ZetaError {
    /// The argument is within the configured guard radius of the pole s = 1.
    Pole { s: Complex },
    /// The argument lies outside an operation's domain.
    Domain { reason: String },
    /// A truncation rule was not met within the configured term cap.
    Convergence { terms_used: usize },
    /// The supplied configuration violates one of its invariants.
    Config { reason: String },
}

impl fmt::Display for ZetaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZetaError::Pole { s } => write!(f, "pole: zeta has a simple pole at s = 1 (got s = {s})"),
            ZetaError::Domain { reason } => write!(f, "domain: {reason}"),
            ZetaError::Convergence { terms_used } => {
                write!(f, "convergence: truncation rule unmet after {terms_used} terms")
            }
            ZetaError::Config { reason } => write!(f, "config: {reason}"),
        }
    }
}

impl core::error::Error for ZetaError {}

impl ZetaError {
    /// Short machine-readable tag, used by the CLI error records.
    pub fn kind(&self) -> &'static str {
        match self {
            ZetaError::Pole { .. } => "pole",
            ZetaError::Domain { .. } => "domain",
            ZetaError::Convergence { .. } => "convergence",
            ZetaError::Config { .. } => "config",
        }
    }
}

pub type Result<T> = core::result::Result<T, ZetaError>;

/// Rejects NaN/infinite arguments up front so the numeric kernels can assume
/// finite inputs.
pub(crate) fn require_finite(s: Complex) -> Result<()> {
    if s.re.is_finite() && s.im.is_finite() {
        Ok(())
    } else {
        Err(ZetaError::Domain {
            reason: alloc::format!("argument must be finite, got {s}"),
        })
    }
}

pub(crate) fn require_pos_tol(tol: f64) -> Result<()> {
    if tol.is_finite() && tol > 0.0 {
        Ok(())
    } else {
        Err(ZetaError::Config {
            reason: alloc::format!("tolerance must be a positive finite number, got {tol}"),
        })
    }
}
