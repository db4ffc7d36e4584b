//! The continuation engine: evaluates ζ(s) for every s ≠ 1.
//!
//! Expanding each term of 1/(s-1) = Σ_n n^{-s}·∫_0^1 (1+x/n)^{-s} dx
//! binomially through order k+1 and integrating yields
//!
//! ```text
//! 1/(s-1) = ζ(s) + Σ_{r=0}^{k} c_r(s)·ζ(s+r+1) + T(s,k),
//! c_r(s) = (-1)^{r+1}·s(s+1)···(s+r)/(r+2)!,
//! ```
//!
//! where the remainder T(s,k) converges for Re(s) > -(k+1). Solving for
//! ζ(s) expresses it through values one strip to the right, which the
//! recursion lifts until the direct-summation region Re(s) ≥ 2 is reached.
//!
//! Arithmetic near the pole and the removable singularities runs through
//! the subtracted form ζ*(s) = ζ(s) - 1/(s-1), which is entire. Whenever a
//! recursion argument s+r+1 falls within `pole_window` of 1, the would-be
//! 0·∞ product c_r(s)·1/(s+r) is replaced by its analytic value
//! d_r(s) = c_r(s)/(s+r) with the factor (s+r) cancelled symbolically.
//!
//! The remainder is summed term by term in closed form. Each term is
//! n^{-s}·R_n with R_n the tail of the integrated binomial series; R_n is
//! evaluated from the tail series itself (a product recurrence, no
//! subtractive cancellation) except at n = 1 where n^{-s} = 1 and the
//! direct difference I_n(s) - partial series is harmless.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::dirichlet::{zeta_direct, BASE_SIGMA};
use crate::numeric::{exp_scaled_m1, int_pow_neg, KahanSum};
use crate::types::{require_finite, Complex, EvaluationResult, Method, Result, ZetaError};

const EPS: f64 = f64::EPSILON;

/// Slack kept from the convergence boundary Re(s) = -(k+1) of T(s,k).
const BOUNDARY_SLACK: f64 = 0.05;

/// Deepest supported ladder; factorials up to (k+2)! must stay finite and
/// double precision is long gone by then anyway.
const MAX_DEPTH: u32 = 100;

/// Tolerances and safety limits for the continuation.
///
/// `tol` is the target absolute error for |value| ≤ 1 and relative beyond
/// that. `pole_window` is the radius around argument-value 1 inside which
/// recursion switches to the subtracted-pole path; `pole_guard` is the
/// radius around s = 1 reported as the pole itself.
#[derive(Debug, Clone, PartialEq)]
pub struct LadderConfig {
    pub tol: f64,
    pub base_sigma: f64,
    /// Per-remainder-sum term cap.
    pub max_terms: usize,
    pub pole_window: f64,
    pub pole_guard: f64,
}

impl Default for LadderConfig {
    fn default() -> Self {
        LadderConfig {
            tol: 1e-10,
            base_sigma: BASE_SIGMA,
            max_terms: 20_000_000,
            pole_window: 0.5,
            pole_guard: 1e-12,
        }
    }
}

impl LadderConfig {
    pub fn with_tol(tol: f64) -> Self {
        LadderConfig {
            tol,
            ..Self::default()
        }
    }

    /// Checks 0 < pole_guard < pole_window ≤ 0.5, base_sigma ≥ 2, tol > 0.
    pub fn validate(&self) -> Result<()> {
        let ok = self.tol.is_finite()
            && self.tol > 0.0
            && self.base_sigma >= 2.0
            && self.base_sigma.is_finite()
            && self.pole_guard > 0.0
            && self.pole_guard < self.pole_window
            && self.pole_window <= 0.5
            && self.max_terms > 0;
        if ok {
            Ok(())
        } else {
            Err(ZetaError::Config {
                reason: format!("invalid ladder config: {self:?}"),
            })
        }
    }
}

/// Minimum legal depth for s: the smallest k with both
/// Re(s) + k + 1 ≥ base_sigma (the top rung reaches the direct region) and
/// Re(s) > -(k+1) (inside T's convergence half-plane with slack ≥ 1).
pub fn min_depth(s: Complex, cfg: &LadderConfig) -> u32 {
    let k = (cfg.base_sigma - s.re).ceil();
    if k <= 0.0 {
        0
    } else {
        k.min(f64::from(u32::MAX)) as u32
    }
}

/// Coefficient of ζ(s+r+1) in the depth-k relation:
/// c_r(s) = (-1)^{r+1}·s(s+1)···(s+r)/(r+2)!.
///
/// Evaluated as a product of the bounded factors (s+j)/(j+2); no factorial
/// is ever materialized, so there is no overflow for any supported depth.
pub fn coeff_c(s: Complex, r: u32) -> Complex {
    let mut p = Complex::new(1.0, 0.0);
    for j in 0..=r {
        p *= (s + f64::from(j)) / f64::from(j + 2);
    }
    if r % 2 == 0 {
        -p
    } else {
        p
    }
}

/// c_r(s)/(s+r) with the factor (s+r) cancelled analytically:
/// d_r(s) = (-1)^{r+1}·s(s+1)···(s+r-1)/(r+2)!.
///
/// A polynomial in s, finite everywhere including s = -r; by construction
/// d_r(s)·(s+r) = c_r(s) identically.
pub fn coeff_d(s: Complex, r: u32) -> Complex {
    let mut p = Complex::new(1.0, 0.0);
    for j in 0..r {
        p *= (s + f64::from(j)) / f64::from(j + 2);
    }
    p /= f64::from(r + 2);
    if r % 2 == 0 {
        -p
    } else {
        p
    }
}

/// Coefficient b_r(s) = (-1)^r·s(s+1)···(s+r-1)/r! of the binomial series
/// (1+x/n)^{-s} = Σ_r b_r(s)·(x/n)^r; b_0 = 1.
pub fn binomial_series_coeff(s: Complex, r: u32) -> Complex {
    let mut p = Complex::new(1.0, 0.0);
    for j in 0..r {
        p *= -(s + f64::from(j)) / f64::from(j + 1);
    }
    p
}

/// I_n(s) = ∫_0^1 (1+x/n)^{-s} dx in closed form:
/// n·((1+1/n)^{1-s} - 1)/(1-s), with the limit n·ln(1+1/n) at s = 1.
///
/// For |1-s| < 1e-6 the closed form loses digits to cancellation and the
/// series of (e^{wu}-1)/w in w = 1-s, u = ln(1+1/n) is used instead.
pub fn integral_i(s: Complex, n: u64) -> Complex {
    let nf = n as f64;
    if s == Complex::new(0.0, 0.0) {
        return Complex::new(1.0, 0.0); // integrand is identically 1
    }
    let u = (1.0 / nf).ln_1p();
    let w = Complex::new(1.0, 0.0) - s;
    if w.norm() < 1e-6 {
        // n·u·(1 + wu/2! + (wu)²/3! + (wu)³/4!); next term < 1e-26
        let z = w * u;
        let series = Complex::new(1.0, 0.0) + z / 2.0 + z * z / 6.0 + z * z * z / 24.0;
        nf * u * series
    } else {
        nf * exp_scaled_m1(w, u) / w
    }
}

/// Remainder sum value and bookkeeping: value ≈ T(s,k) = (s+k)·A_{k+1}(s).
#[derive(Debug, Clone, PartialEq)]
pub struct RemainderSum {
    pub s: Complex,
    pub k: u32,
    pub value: Complex,
    pub terms_used: usize,
    pub tail_bound: f64,
}

/// Per-n tail of the integrated binomial series,
/// R_n = I_n(s) - Σ_{r=0}^{k+1} b_r(s)/((r+1)·n^r) = Σ_{r≥k+2} b_r(s)/((r+1)·n^r).
///
/// Computed from the tail series via the exact product recurrence
/// u_{r+1} = u_r·(-(s+r))/((r+1)·n); for n ≥ 2 the ratio tends to 1/n, so
/// convergence is eventually geometric. Falls back to the direct difference
/// when the iteration cap is hit (extreme |s|) — and always at n = 1, where
/// the n^{-s} prefactor is 1 and the difference loses nothing.
fn series_tail(s: Complex, k: u32, n: u64, trunc_coeffs: &[Complex]) -> Complex {
    const CAP: usize = 800;
    if n >= 2 {
        let nf = n as f64;
        let mut u = Complex::new(1.0, 0.0);
        for j in 0..k + 2 {
            u *= -(s + f64::from(j)) / (f64::from(j + 1) * nf);
        }
        let mut acc = u / f64::from(k + 3);
        let mut r = k + 2;
        let mut small_streak = 0;
        for _ in 0..CAP {
            u *= -(s + f64::from(r)) / (f64::from(r + 1) * nf);
            r += 1;
            let term = u / f64::from(r + 1);
            acc += term;
            if term.norm() <= 4.0 * EPS * acc.norm() {
                small_streak += 1;
                if small_streak >= 2 {
                    return acc;
                }
            } else {
                small_streak = 0;
            }
        }
        // fall through: direct difference
    }
    let mut series = KahanSum::new();
    let nf = n as f64;
    let mut inv_pow = 1.0;
    for c in trunc_coeffs {
        series.add(c * inv_pow);
        inv_pow /= nf;
    }
    integral_i(s, n) - series.value()
}

/// Remainder plus the data the error propagation needs: the sum of term
/// magnitudes bounds the accumulated rounding.
struct RemainderInner {
    value: Complex,
    tail_bound: f64,
    terms_used: usize,
    abs_sum: f64,
}

fn remainder_t_impl(s: Complex, k: u32, tol: f64, max_terms: usize) -> Result<RemainderInner> {
    let sigma = s.re;
    let decay = sigma + f64::from(k) + 1.0; // tail integral exponent
    // b_r(s)/(r+1) for r = 0..=k+1, for the direct-difference branch
    let trunc_coeffs: Vec<Complex> = (0..=k + 1)
        .map(|r| binomial_series_coeff(s, r) / f64::from(r + 1))
        .collect();

    let mut sum = KahanSum::new();
    let mut abs_sum = 0.0;
    let mut small_streak = 0;
    let mut n: u64 = 0;
    loop {
        n += 1;
        if n as usize > max_terms {
            return Err(ZetaError::Convergence {
                terms_used: max_terms,
            });
        }
        let term = int_pow_neg(n, s) * series_tail(s, k, n, &trunc_coeffs);
        sum.add(term);
        let mag = term.norm();
        abs_sum += mag;
        if mag <= tol / (4.0 * n as f64) {
            small_streak += 1;
            // stop once the decay-based tail estimate is inside budget too
            let tail_bound = mag * n as f64 / decay;
            if small_streak >= 3 && tail_bound <= tol / 4.0 {
                return Ok(RemainderInner {
                    value: sum.value(),
                    tail_bound,
                    terms_used: n as usize,
                    abs_sum,
                });
            }
        } else {
            small_streak = 0;
        }
    }
}

/// T(s,k), the depth-k remainder, summed until three consecutive terms fall
/// under tol/(4n) and the integral-comparison tail estimate
/// |term_N|·N/(σ+k+1) is at most tol/4.
///
/// Requires Re(s) > -(k+1) + 0.05; errors with `Convergence` if the rule is
/// not met within `cfg.max_terms` (which happens legitimately for shallow k
/// near the convergence boundary at tight tolerances).
pub fn remainder_t(s: Complex, k: u32, cfg: &LadderConfig) -> Result<RemainderSum> {
    cfg.validate()?;
    require_finite(s)?;
    if k > MAX_DEPTH {
        return Err(ZetaError::Domain {
            reason: format!("depth k = {k} exceeds the supported maximum {MAX_DEPTH}"),
        });
    }
    if s.re <= -(f64::from(k) + 1.0) + BOUNDARY_SLACK {
        return Err(ZetaError::Domain {
            reason: format!(
                "remainder T(s,k) needs Re(s) > -(k+1) + {BOUNDARY_SLACK}; got Re(s) = {}, k = {k}",
                s.re
            ),
        });
    }
    let inner = remainder_t_impl(s, k, cfg.tol, cfg.max_terms)?;
    Ok(RemainderSum {
        s,
        k,
        value: inner.value,
        terms_used: inner.terms_used,
        tail_bound: inner.tail_bound,
    })
}

/// A value with its propagated first-order error bound.
#[derive(Debug, Clone, Copy)]
struct Evaluated {
    v: Complex,
    err: f64,
}

/// Recursive evaluator for one top-level argument.
///
/// Every recursion argument is s + m for an integer m ≥ 0, so memoization
/// keys on the offset m; results are then deterministic and identical
/// whether or not a memo hit occurs. Alongside each value a forward error
/// bound is carried: rung truncation errors enter multiplied by |c_r(s)|
/// and rounding enters as machine epsilon times the magnitudes actually
/// summed. Far to the left the coefficients grow combinatorially and the
/// bound grows with them, which is what the reported `err_estimate` must
/// reflect.
struct Evaluator<'c> {
    cfg: &'c LadderConfig,
    s_top: Complex,
    inner_tol: f64,
    star_memo: BTreeMap<u32, Evaluated>,
    zeta_memo: BTreeMap<u32, Evaluated>,
}

/// Hard floor for internal truncation targets; below this, double-precision
/// rounding dominates and tightening buys nothing.
const INNER_TOL_FLOOR: f64 = 2e-15;

impl<'c> Evaluator<'c> {
    fn new(cfg: &'c LadderConfig, s_top: Complex, inner_tol: f64) -> Self {
        Evaluator {
            cfg,
            s_top,
            inner_tol,
            star_memo: BTreeMap::new(),
            zeta_memo: BTreeMap::new(),
        }
    }

    fn arg(&self, m: u32) -> Complex {
        Complex::new(self.s_top.re + f64::from(m), self.s_top.im)
    }

    fn pole_term(&self, m: u32) -> Complex {
        let s = self.arg(m);
        1.0 / (s - 1.0)
    }

    /// ζ*(s_top + m) = ζ(s_top + m) - 1/(s_top + m - 1).
    fn star(&mut self, m: u32, forced_k: Option<u32>) -> Result<Evaluated> {
        if forced_k.is_none() {
            if let Some(e) = self.star_memo.get(&m) {
                return Ok(*e);
            }
            let s = self.arg(m);
            if s.re >= self.cfg.base_sigma {
                let direct = zeta_direct(s, self.inner_tol)?;
                let pole = self.pole_term(m);
                let e = Evaluated {
                    v: direct.value - pole,
                    err: direct.err_estimate + EPS * pole.norm(),
                };
                self.star_memo.insert(m, e);
                return Ok(e);
            }
        }
        let s = self.arg(m);
        let k = forced_k.unwrap_or_else(|| min_depth(s, self.cfg));
        let rem = remainder_t_impl(s, k, self.inner_tol, self.cfg.max_terms)?;
        let mut acc = rem.value;
        // root-sum-square accumulation: truncation and rounding sources at
        // the different rungs are not aligned, and the quadrature model
        // tracks the observed deviations with two orders of headroom while
        // the L1 model overstates them by ten
        let mut var = (rem.tail_bound + 4.0 * EPS * rem.abs_sum).powi(2);
        let mut mag = rem.value.norm();
        for r in 0..=k {
            let c = coeff_c(s, r);
            // s + r: distance of the rung argument s+r+1 from the pole
            let sr = self.arg(m + r);
            let contribution = if sr.norm() >= self.cfg.pole_window {
                let rung = self.zeta(m + r + 1)?;
                var += (c.norm() * rung.err).powi(2);
                c * rung.v
            } else {
                let rung = self.star(m + r + 1, None)?;
                var += (c.norm() * rung.err).powi(2);
                c * rung.v + coeff_d(s, r)
            };
            acc += contribution;
            mag += contribution.norm();
        }
        // rounding of the k+2-term accumulation itself
        var += (4.0 * EPS * mag).powi(2);
        let e = Evaluated { v: -acc, err: var.sqrt() };
        if forced_k.is_none() {
            self.star_memo.insert(m, e);
        }
        Ok(e)
    }

    /// ζ(s_top + m); only ever called with the argument at least
    /// `pole_window` away from 1.
    fn zeta(&mut self, m: u32) -> Result<Evaluated> {
        if let Some(e) = self.zeta_memo.get(&m) {
            return Ok(*e);
        }
        let s = self.arg(m);
        let e = if s.re >= self.cfg.base_sigma {
            let direct = zeta_direct(s, self.inner_tol)?;
            Evaluated {
                v: direct.value,
                err: direct.err_estimate,
            }
        } else {
            let star = self.star(m, None)?;
            let pole = self.pole_term(m);
            Evaluated {
                v: star.v + pole,
                err: star.err + EPS * pole.norm(),
            }
        };
        self.zeta_memo.insert(m, e);
        Ok(e)
    }
}

fn check_entry(s: Complex, cfg: &LadderConfig) -> Result<()> {
    cfg.validate()?;
    require_finite(s)?;
    Ok(())
}

fn depth_error(s: Complex, k: u32, cfg: &LadderConfig) -> Option<ZetaError> {
    if k > MAX_DEPTH {
        return Some(ZetaError::Domain {
            reason: format!("depth k = {k} exceeds the supported maximum {MAX_DEPTH}"),
        });
    }
    let min = min_depth(s, cfg);
    if k < min {
        return Some(ZetaError::Domain {
            reason: format!("forced depth k = {k} is below the minimum legal depth {min}"),
        });
    }
    None
}

/// The committed bound: the requested tolerance wherever the propagated
/// bound sits below it, and the (doubled) propagated bound once double
/// precision genuinely cannot deliver the request — far to the left the
/// estimate grows with the combinatorial coefficient sums instead of lying.
fn commit_err(cfg: &LadderConfig, propagated: f64) -> f64 {
    let doubled = 2.0 * propagated;
    if doubled <= cfg.tol {
        cfg.tol
    } else {
        doubled
    }
}

fn star_result(k: u32, e: Evaluated, cfg: &LadderConfig, direct: bool) -> EvaluationResult {
    EvaluationResult {
        value: e.v,
        method: if direct { Method::Direct } else { Method::Ladder },
        depth_k: k,
        err_estimate: commit_err(cfg, e.err),
    }
}

/// Runs the recursion, then retries once with a tighter internal budget if
/// the propagated bound missed the requested tolerance. One retry reaches
/// the floor whenever the request is attainable at all; beyond the floor
/// the bound is reported as it stands.
fn eval_star_adaptive(s: Complex, k: u32, forced: Option<u32>, cfg: &LadderConfig) -> Result<Evaluated> {
    let inner = (cfg.tol / (8.0 * (f64::from(k) + 2.0))).max(INNER_TOL_FLOOR);
    let mut ev = Evaluator::new(cfg, s, inner);
    let e = ev.star(0, forced)?;
    if 2.0 * e.err <= cfg.tol || inner <= INNER_TOL_FLOOR {
        return Ok(e);
    }
    let shrink = (cfg.tol / (4.0 * e.err)).clamp(1e-8, 1.0);
    let mut ev = Evaluator::new(cfg, s, (inner * shrink).max(INNER_TOL_FLOOR));
    ev.star(0, forced)
}

/// The entire function ζ*(s) = ζ(s) - 1/(s-1).
///
/// Finite for every finite s, including s = 1 (where it equals the
/// Euler–Mascheroni constant) and the removable points s = 0, -1, -2, ….
pub fn zeta_star(s: Complex, cfg: &LadderConfig) -> Result<EvaluationResult> {
    check_entry(s, cfg)?;
    let k = min_depth(s, cfg);
    if let Some(e) = depth_error(s, k, cfg) {
        return Err(e);
    }
    if s.re >= cfg.base_sigma {
        let direct = zeta_direct(s, cfg.tol)?;
        let pole = 1.0 / (s - 1.0);
        let e = Evaluated {
            v: direct.value - pole,
            err: direct.err_estimate + EPS * pole.norm(),
        };
        return Ok(star_result(0, e, cfg, true));
    }
    let e = eval_star_adaptive(s, k, None, cfg)?;
    Ok(star_result(k, e, cfg, false))
}

/// ζ*(s) evaluated with a caller-chosen ladder depth at the top level
/// (must be at least the minimum legal depth).
pub fn zeta_star_at_depth(s: Complex, k: u32, cfg: &LadderConfig) -> Result<EvaluationResult> {
    check_entry(s, cfg)?;
    if let Some(e) = depth_error(s, k, cfg) {
        return Err(e);
    }
    let e = eval_star_adaptive(s, k, Some(k), cfg)?;
    Ok(star_result(k, e, cfg, false))
}

fn finish_zeta(s: Complex, star: EvaluationResult) -> EvaluationResult {
    let pole = 1.0 / (s - 1.0);
    EvaluationResult {
        value: star.value + pole,
        method: star.method,
        depth_k: star.depth_k,
        err_estimate: star.err_estimate + EPS * pole.norm(),
    }
}

/// ζ(s) anywhere except within `pole_guard` of s = 1.
///
/// Uses direct summation for Re(s) ≥ base_sigma and the ladder elsewhere;
/// the value is assembled as ζ*(s) + 1/(s-1) so that accuracy is uniform
/// near the pole.
pub fn zeta(s: Complex, cfg: &LadderConfig) -> Result<EvaluationResult> {
    check_entry(s, cfg)?;
    if (s - 1.0).norm() < cfg.pole_guard {
        return Err(ZetaError::Pole { s });
    }
    if s.re >= cfg.base_sigma {
        return zeta_direct(s, cfg.tol);
    }
    Ok(finish_zeta(s, zeta_star(s, cfg)?))
}

/// ζ(s) with a caller-chosen top-level ladder depth.
pub fn zeta_at_depth(s: Complex, k: u32, cfg: &LadderConfig) -> Result<EvaluationResult> {
    check_entry(s, cfg)?;
    if (s - 1.0).norm() < cfg.pole_guard {
        return Err(ZetaError::Pole { s });
    }
    Ok(finish_zeta(s, zeta_star_at_depth(s, k, cfg)?))
}
