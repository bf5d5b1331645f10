//! Exact rational arithmetic helpers on top of [`num::BigRational`].
//!
//! Every predicate that decides a table cell or a region membership works on
//! these values; floating-point numbers never enter that logic.

use crate::error::{Error, Result};
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

pub use num::BigRational as Rational;

/// `n/d` as a reduced rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"` (optional sign, ASCII or Unicode minus).
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let cleaned = text.trim().replace('−', "-");
    let bad = || Error::invalid(format!("`{text}` is not a rational of the form p/q"));
    let (num, den) = match cleaned.split_once('/') {
        Some((n, d)) => (n.trim().to_string(), d.trim().to_string()),
        None => (cleaned.clone(), "1".to_string()),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::invalid(format!("`{text}` has a zero denominator")));
    }
    Ok(BigRational::new(n, d))
}

/// Canonical `"p/q"` (or `"p"` for integers) rendering.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Serializes a rational as its canonical `"p/q"` string.
pub fn serialize_rational<S: serde::Serializer>(q: &BigRational, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.serialize_str(&format_rational(q))
}

/// Serializes an optional rational as a `"p/q"` string or `null`.
pub fn serialize_opt_rational<S: serde::Serializer>(
    q: &Option<BigRational>,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    match q {
        Some(q) => ser.serialize_str(&format_rational(q)),
        None => ser.serialize_none(),
    }
}

/// Deserializes a rational from a `"p/q"` string.
pub fn deserialize_rational<'de, D: serde::Deserializer<'de>>(de: D) -> std::result::Result<BigRational, D::Error> {
    let text = <String as serde::Deserialize>::deserialize(de)?;
    parse_rational(&text).map_err(serde::de::Error::custom)
}

/// Nearest double to `q`.
pub fn to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        let n = q.numer().to_f64().unwrap_or(f64::NAN);
        let d = q.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// `⌊q⌋` as a big integer.
pub fn floor(q: &BigRational) -> BigInt {
    q.floor().to_integer()
}

/// Whether `q` is an element of `−ℕ = {0, −1, −2, …}`.
pub fn in_neg_naturals(q: &BigRational) -> bool {
    q.is_integer() && !q.is_positive()
}

/// Whether `q` is an integer.
pub fn is_integer(q: &BigRational) -> bool {
    q.is_integer()
}

/// All rationals `p/q` in the open interval `(lo, hi)` with `1 ≤ q ≤ max_den`,
/// sorted and deduplicated.
pub fn rationals_between(lo: &BigRational, hi: &BigRational, max_den: i64) -> Vec<BigRational> {
    let mut out = Vec::new();
    for q in 1..=max_den {
        let qq = int(q);
        let start = floor(&(lo * &qq)).to_i64().unwrap_or(i64::MIN / 4);
        let end = floor(&(hi * &qq)).to_i64().unwrap_or(i64::MAX / 4) + 1;
        for p in start..=end {
            let x = rat(p, q);
            if &x > lo && &x < hi {
                out.push(x);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Arithmetic grid `start, start+step, …` up to and including `end`.
pub fn rational_grid(start: &BigRational, end: &BigRational, step: &BigRational) -> Result<Vec<BigRational>> {
    if !step.is_positive() {
        return Err(Error::invalid("grid step must be positive"));
    }
    if end < start {
        return Err(Error::invalid("grid end precedes its start"));
    }
    let mut out = Vec::new();
    let mut x = start.clone();
    while &x <= end {
        out.push(x.clone());
        x += step;
    }
    Ok(out)
}
