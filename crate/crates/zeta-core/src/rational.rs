//! Canonical text form for exact rationals.
//!
//! The canonical form is `p/q` with the sign on the numerator and the
//! fraction in lowest terms, e.g. `-691/2730`. Machine formats (JSON, CSV)
//! always carry the denominator (`5/1`, `0/1`); human-readable output drops
//! a denominator of one (`5`, `0`, `-1/12`).

use alloc::format;
use alloc::string::{String, ToString};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::types::ZetaError;

/// Machine form: always `p/q`, lowest terms, q ≥ 1.
pub fn to_machine_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Human form: `p` when the value is an integer, otherwise `p/q`.
pub fn to_human_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses either form (`-691/2730`, `0`, `5/1`); normalizes to lowest terms
/// with a positive denominator.
pub fn parse_rational(text: &str) -> Result<BigRational, ZetaError> {
    let bad = |t: &str| ZetaError::Domain {
        reason: format!("not a rational number: {t:?}"),
    };
    let text = text.trim();
    let (num_part, den_part) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let numer: BigInt = num_part.parse().map_err(|_| bad(text))?;
    let denom: BigInt = match den_part {
        Some(d) => d.parse().map_err(|_| bad(text))?,
        None => BigInt::one(),
    };
    if denom == BigInt::ZERO {
        return Err(bad(text));
    }
    Ok(BigRational::new(numer, denom))
}
