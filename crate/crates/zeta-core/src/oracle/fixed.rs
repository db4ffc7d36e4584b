//! Fixed-point multiprecision reals and complexes for the oracle.
//!
//! The Hasse inner sums Σ_j (-1)^j C(n,j)·(j+1)^{-s} cancel catastrophically:
//! partial sums reach ~2^n·max|(j+1)^{-s}| while the result is exponentially
//! small, so every input must carry far more than double precision. Values
//! here are BigInt mantissas at a fixed scale of 2^-288 (≈ 86 decimal
//! digits); binomial weights then multiply in exactly and the cancellation
//! happens in exact integer arithmetic.
//!
//! Only what the oracle needs is implemented: ring ops, division, exp,
//! sin/cos, and ln of small integers. Truncation error per operation is one
//! unit at 2^-288, which is dozens of orders below anything the oracle
//! reports.

use num_bigint::BigInt;
use num_traits::{Float, Signed, ToPrimitive, Zero};

use crate::types::Complex;

/// Fractional bits of the fixed-point scale.
pub(crate) const FRAC: u32 = 288;

/// A real number represented as mant·2^-288.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Fx(pub(crate) BigInt);

impl Fx {
    pub fn zero() -> Self {
        Fx(BigInt::ZERO)
    }

    pub fn one() -> Self {
        Fx(BigInt::from(1) << FRAC)
    }

    /// Exact conversion (f64 values are dyadic rationals).
    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            return Fx::zero();
        }
        let (mant, exp, sign) = Float::integer_decode(x);
        let m = BigInt::from(mant) * BigInt::from(sign as i64);
        let shift = exp as i64 + FRAC as i64;
        if shift >= 0 {
            Fx(m << (shift as u64))
        } else {
            Fx(m >> ((-shift) as u64))
        }
    }

    pub fn to_f64(&self) -> f64 {
        let bits = self.0.bits();
        if bits == 0 {
            return 0.0;
        }
        if bits <= 900 {
            self.0.to_f64().unwrap_or(0.0) * 2.0f64.powi(-(FRAC as i32))
        } else {
            let shift = bits - 512;
            let head = (&self.0 >> shift).to_f64().unwrap_or(0.0);
            head * 2.0f64.powi(shift as i32 - FRAC as i32)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn neg(&self) -> Self {
        Fx(-&self.0)
    }

    pub fn add(&self, o: &Fx) -> Self {
        Fx(&self.0 + &o.0)
    }

    pub fn sub(&self, o: &Fx) -> Self {
        Fx(&self.0 - &o.0)
    }

    pub fn mul(&self, o: &Fx) -> Self {
        Fx((&self.0 * &o.0) >> FRAC)
    }

    pub fn mul_i64(&self, v: i64) -> Self {
        Fx(&self.0 * BigInt::from(v))
    }

    pub fn div(&self, o: &Fx) -> Self {
        Fx((&self.0 << FRAC) / &o.0)
    }

    pub fn div_u32(&self, d: u32) -> Self {
        Fx(&self.0 / BigInt::from(d))
    }

    /// Exact scale by 2^k (k may be negative).
    pub fn scale2(&self, k: i64) -> Self {
        if k >= 0 {
            Fx(&self.0 << (k as u64))
        } else {
            Fx(&self.0 >> ((-k) as u64))
        }
    }

    pub fn abs(&self) -> Self {
        Fx(self.0.abs())
    }
}

/// Complex number over `Fx`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct FxComplex {
    pub re: Fx,
    pub im: Fx,
}

impl FxComplex {
    pub fn zero() -> Self {
        FxComplex {
            re: Fx::zero(),
            im: Fx::zero(),
        }
    }

    pub fn add(&self, o: &FxComplex) -> Self {
        FxComplex {
            re: self.re.add(&o.re),
            im: self.im.add(&o.im),
        }
    }

    pub fn sub(&self, o: &FxComplex) -> Self {
        FxComplex {
            re: self.re.sub(&o.re),
            im: self.im.sub(&o.im),
        }
    }

    pub fn div(&self, o: &FxComplex) -> Self {
        let d = o.re.mul(&o.re).add(&o.im.mul(&o.im));
        let re = self.re.mul(&o.re).add(&self.im.mul(&o.im));
        let im = self.im.mul(&o.re).sub(&self.re.mul(&o.im));
        FxComplex {
            re: re.div(&d),
            im: im.div(&d),
        }
    }

    pub fn scale2(&self, k: i64) -> Self {
        FxComplex {
            re: self.re.scale2(k),
            im: self.im.scale2(k),
        }
    }

    /// |re| + |im|, an upper bound on the magnitude within a factor √2.
    pub fn norm1(&self) -> f64 {
        self.re.abs().to_f64() + self.im.abs().to_f64()
    }

    pub fn to_complex(&self) -> Complex {
        Complex::new(self.re.to_f64(), self.im.to_f64())
    }
}

/// Shared constants, computed once per oracle call.
pub(crate) struct Consts {
    pub ln2: Fx,
    pub half_pi: Fx,
}

impl Consts {
    pub fn new() -> Self {
        // ln 2 = 2·atanh(1/3); π = 16·atan(1/5) - 4·atan(1/239)
        let ln2 = atanh_inv_u32(3).scale2(1);
        let pi = atan_inv_u32(5)
            .scale2(4)
            .sub(&atan_inv_u32(239).scale2(2));
        let half_pi = pi.scale2(-1);
        Consts { ln2, half_pi }
    }
}

/// atanh(1/x) = Σ_{j≥0} x^{-(2j+1)}/(2j+1) for integer x ≥ 2.
fn atanh_inv_u32(x: u32) -> Fx {
    let xx = x * x;
    let mut p = Fx::one().div_u32(x);
    let mut acc = p.clone();
    let mut j = 1u32;
    while !p.is_zero() {
        p = p.div_u32(xx);
        acc = acc.add(&p.div_u32(2 * j + 1));
        j += 1;
    }
    acc
}

/// atan(1/x) = Σ_{j≥0} (-1)^j x^{-(2j+1)}/(2j+1) for integer x ≥ 2.
fn atan_inv_u32(x: u32) -> Fx {
    let xx = x * x;
    let mut p = Fx::one().div_u32(x);
    let mut acc = p.clone();
    let mut j = 1u32;
    while !p.is_zero() {
        p = p.div_u32(xx);
        let term = p.div_u32(2 * j + 1);
        if j % 2 == 1 {
            acc = acc.sub(&term);
        } else {
            acc = acc.add(&term);
        }
        j += 1;
    }
    acc
}

/// exp(x) by range reduction x = q·ln2 + r, |r| ≤ ln2/2, then Taylor.
pub(crate) fn exp_fx(x: &Fx, c: &Consts) -> Fx {
    let q = (x.to_f64() / core::f64::consts::LN_2).round();
    debug_assert!(q.abs() < 9e15);
    let q = q as i64;
    let r = x.sub(&c.ln2.mul_i64(q));
    let mut term = Fx::one();
    let mut acc = Fx::one();
    let mut k = 1u32;
    while !term.is_zero() && k < 500 {
        term = term.mul(&r).div_u32(k);
        acc = acc.add(&term);
        k += 1;
    }
    acc.scale2(q)
}

/// (sin x, cos x) by quadrant reduction mod π/2, then Taylor on |r| ≤ π/4.
pub(crate) fn sincos_fx(x: &Fx, c: &Consts) -> (Fx, Fx) {
    let q = (x.to_f64() / (core::f64::consts::PI / 2.0)).round();
    debug_assert!(q.abs() < 9e15);
    let qi = q as i64;
    let r = x.sub(&c.half_pi.mul_i64(qi));
    let r2 = r.mul(&r);

    let mut sin = r.clone();
    let mut term = r.clone();
    let mut k = 1u32;
    while !term.is_zero() && k < 400 {
        term = term.mul(&r2).div_u32(2 * k * (2 * k + 1)).neg();
        sin = sin.add(&term);
        k += 1;
    }

    let mut cos = Fx::one();
    let mut term = Fx::one();
    let mut k = 1u32;
    while !term.is_zero() && k < 400 {
        term = term.mul(&r2).div_u32(2 * k * (2 * k - 1)).neg();
        cos = cos.add(&term);
        k += 1;
    }

    match qi.rem_euclid(4) {
        0 => (sin, cos),
        1 => (cos, sin.neg()),
        2 => (sin.neg(), cos.neg()),
        _ => (cos.neg(), sin),
    }
}

/// ln m for integer m ≥ 1: split off the power of two, then
/// ln r = 2·atanh((r-1)/(r+1)) on r ∈ [1,2).
pub(crate) fn ln_u32_fx(m: u32, c: &Consts) -> Fx {
    debug_assert!(m >= 1);
    if m == 1 {
        return Fx::zero();
    }
    let e = 31 - m.leading_zeros();
    let r = Fx(BigInt::from(m) << (FRAC - e));
    let one = Fx::one();
    let z = r.sub(&one).div(&r.add(&one));
    let z2 = z.mul(&z);
    let mut p = z.clone();
    let mut acc = z;
    let mut j = 1u32;
    while !p.is_zero() && j < 400 {
        p = p.mul(&z2);
        acc = acc.add(&p.div_u32(2 * j + 1));
        j += 1;
    }
    acc.scale2(1).add(&c.ln2.mul_i64(e as i64))
}

/// exp of a complex fixed-point number: e^re·(cos im + i·sin im).
pub(crate) fn exp_complex(z: &FxComplex, c: &Consts) -> FxComplex {
    let mag = exp_fx(&z.re, c);
    let (sin, cos) = sincos_fx(&z.im, c);
    FxComplex {
        re: mag.mul(&cos),
        im: mag.mul(&sin),
    }
}

/// m^{-s} for integer m ≥ 1 at full working precision.
pub(crate) fn int_pow_neg_s(m: u32, s: Complex, c: &Consts) -> FxComplex {
    let l = ln_u32_fx(m, c);
    let z = FxComplex {
        re: l.mul(&Fx::from_f64(-s.re)),
        im: l.mul(&Fx::from_f64(-s.im)),
    };
    exp_complex(&z, c)
}

/// 2^{1-s} = exp((1-s)·ln 2).
pub(crate) fn two_pow_one_minus_s(s: Complex, c: &Consts) -> FxComplex {
    let z = FxComplex {
        re: c.ln2.mul(&Fx::from_f64(1.0 - s.re)),
        im: c.ln2.mul(&Fx::from_f64(-s.im)),
    };
    exp_complex(&z, c)
}
