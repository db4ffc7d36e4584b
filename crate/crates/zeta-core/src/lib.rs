//! Riemann zeta function evaluation by elementary analytic continuation.
//!
//! The defining Dirichlet series ζ(s) = Σ n^{-s} converges only for
//! Re(s) > 1. This crate continues ζ to the whole plane (minus the simple
//! pole at s = 1) with nothing heavier than the binomial theorem: comparing
//! the series with the integral ∫_1^∞ x^{-s} dx = 1/(s-1) term by term and
//! expanding each ∫_0^1 (1+x/n)^{-s} dx binomially yields a relation
//!
//! ```text
//! 1/(s-1) = ζ(s) + Σ_{r=0}^{k} c_r(s)·ζ(s+r+1) + T(s,k)
//! ```
//!
//! whose remainder T(s,k) converges for Re(s) > -(k+1). Solving for ζ(s)
//! steps the domain of definition one strip to the left per unit of depth k;
//! the [`ladder`] module implements that recursion. The same machinery gives
//! exact rational values at the non-positive integers, ζ(-k) = -B_{k+1}/(k+1),
//! carried out in exact arithmetic by [`bernoulli`] and [`special_values`].
//!
//! Module map:
//!
//! - [`bernoulli`] — exact Bernoulli numbers B_n from the generating-function
//!   recurrence, memoized.
//! - [`special_values`] — exact rational ζ(-k).
//! - [`dirichlet`] — base-case evaluation for Re(s) ≥ 2 by direct summation
//!   with a rigorous integral tail bound.
//! - [`ladder`] — the continuation engine for arbitrary s ≠ 1, including the
//!   pole-subtracted entire function ζ*(s) = ζ(s) - 1/(s-1).
//! - [`oracle`] — an independent reference evaluator (globally convergent
//!   double series) used by consistency checks; deliberately not derived
//!   from the ladder relation.
//! - [`consistency`] — the cross-validation suites wired into the CLI
//!   `check` command.
//!
//! The crate is `no_std`-compatible (with `alloc`); the default `std`
//! feature enables the process-global Bernoulli memo table.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod bernoulli;
pub mod consistency;
pub mod dirichlet;
pub mod ladder;
mod numeric;
pub mod oracle;
pub mod rational;
pub mod special_values;
mod types;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use types::{Complex, EvaluationResult, Method, Result, ZetaError};
