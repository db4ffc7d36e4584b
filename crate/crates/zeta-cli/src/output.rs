//! Output records and the three wire formats (text, JSON lines, CSV).
//!
//! CSV columns for complex-valued records are fixed as
//! `re,im,value_re,value_im,method,depth_k,err_estimate`; exact-rational
//! records use `n,value` / `k,value` with the rational in canonical `p/q`
//! text. JSON records round-trip field-for-field.

use serde::{Deserialize, Serialize};
use zeta_core::{Complex, EvaluationResult, Method, ZetaError};

pub const CSV_HEADER: &str = "re,im,value_re,value_im,method,depth_k,err_estimate";

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone, Copy)]
pub struct ComplexParts {
    pub re: f64,
    pub im: f64,
}

impl From<Complex> for ComplexParts {
    fn from(z: Complex) -> Self {
        ComplexParts { re: z.re, im: z.im }
    }
}

/// Exactly one of the two value kinds is present per record.
#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
#[serde(untagged)]
pub enum RecordValue {
    Complex(ComplexParts),
    Rational(String),
}

#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct OutputRecord {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<ComplexParts>,
    /// Bernoulli index, for `bernoulli` records.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    /// Negated argument, for `special` records.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    pub value: RecordValue,
    pub method: String,
    pub depth_k: u32,
    pub err_estimate: f64,
}

impl OutputRecord {
    pub fn from_eval(s: Complex, r: &EvaluationResult) -> Self {
        OutputRecord {
            s: Some(s.into()),
            n: None,
            k: None,
            value: RecordValue::Complex(r.value.into()),
            method: r.method.as_str().to_owned(),
            depth_k: r.depth_k,
            err_estimate: r.err_estimate,
        }
    }

    pub fn exact(rational_machine: String) -> Self {
        OutputRecord {
            s: None,
            n: None,
            k: None,
            value: RecordValue::Rational(rational_machine),
            method: Method::Exact.as_str().to_owned(),
            depth_k: 0,
            err_estimate: 0.0,
        }
    }

    pub fn csv_row(&self) -> String {
        match (&self.s, &self.value) {
            (Some(s), RecordValue::Complex(v)) => format!(
                "{},{},{},{},{},{},{}",
                s.re, s.im, v.re, v.im, self.method, self.depth_k, self.err_estimate
            ),
            (_, RecordValue::Rational(r)) => {
                let idx = self.n.or(self.k).unwrap_or(0);
                format!("{idx},{r}")
            }
            (None, RecordValue::Complex(v)) => format!(
                ",,{},{},{},{},{}",
                v.re, v.im, self.method, self.depth_k, self.err_estimate
            ),
        }
    }
}

/// Machine-readable failure record; `error` is the short kind tag.
#[derive(Serialize, Deserialize, PartialEq, Debug, Clone)]
pub struct ErrorRecord {
    pub error: String,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<ComplexParts>,
}

impl ErrorRecord {
    pub fn new(e: &ZetaError, s: Option<Complex>) -> Self {
        ErrorRecord {
            error: e.kind().to_owned(),
            detail: e.to_string(),
            s: s.map(Into::into),
        }
    }

    pub fn csv_row(&self) -> String {
        let (re, im) = match &self.s {
            Some(s) => (s.re.to_string(), s.im.to_string()),
            None => (String::new(), String::new()),
        };
        format!("{re},{im},,,{},0,", self.error)
    }
}

/// `v` to `sig` significant digits, positional where readable and
/// scientific otherwise.
pub fn fmt_sig(v: f64, sig: i32) -> String {
    if v == 0.0 {
        return "0".to_owned();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let mag = v.abs().log10().floor() as i32;
    if !(-4..15).contains(&mag) {
        return format!("{:.*e}", (sig - 1).max(0) as usize, v);
    }
    let decimals = (sig - 1 - mag).max(0) as usize;
    format!("{:.*}", decimals, v)
}

/// Complex value to `sig` significant digits; drops a zero imaginary part.
pub fn fmt_complex_sig(v: Complex, sig: i32) -> String {
    if v.im == 0.0 {
        fmt_sig(v.re, sig)
    } else if v.im < 0.0 {
        format!("{}-{}i", fmt_sig(v.re, sig), fmt_sig(-v.im, sig))
    } else {
        format!("{}+{}i", fmt_sig(v.re, sig), fmt_sig(v.im, sig))
    }
}

/// Argument in the CLI's `RE` / `RE,IM` syntax.
pub fn fmt_arg(s: Complex) -> String {
    if s.im == 0.0 {
        format!("{}", s.re)
    } else {
        format!("{},{}", s.re, s.im)
    }
}
