//! Small complex-arithmetic helpers shared by the evaluation kernels.

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::types::Complex;

/// base^e for real base > 0, as exp(e·ln base).
///
/// Computed from the real logarithm so that conjugating `e` conjugates the
/// result exactly (sin is odd, cos is even at the bit level).
pub(crate) fn pow_real(base: f64, e: Complex) -> Complex {
    let l = base.ln();
    Complex::from_polar((e.re * l).exp(), e.im * l)
}

/// n^{-s} for integer n ≥ 1.
pub(crate) fn int_pow_neg(n: u64, s: Complex) -> Complex {
    pow_real(n as f64, -s)
}

/// exp(w·u) - 1 for real u, avoiding cancellation when |w·u| is small:
/// e^a·cos b - 1 = expm1(a) - e^a·2·sin²(b/2).
pub(crate) fn exp_scaled_m1(w: Complex, u: f64) -> Complex {
    let a = w.re * u;
    let b = w.im * u;
    let ea = a.exp();
    let half_sin = (b / 2.0).sin();
    Complex::new(a.exp_m1() - ea * 2.0 * half_sin * half_sin, ea * b.sin())
}

/// Compensated (Kahan) accumulator for complex sums.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct KahanSum {
    sum: Complex,
    carry: Complex,
}

impl KahanSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, term: Complex) {
        let y = term - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }

    pub fn value(&self) -> Complex {
        self.sum
    }
}
