//! Small helpers around exact rationals: construction, parsing and printing.

use num::{BigInt, BigRational, Integer, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The exact rational type used for every weight.
pub type Q = BigRational;

/// Build `num/den` as an exact rational. Panics if `den == 0`.
pub fn q(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// The integer `n` as a rational.
pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Parse `"p/q"` or `"p"` (optionally signed). Decimal notation is rejected so
/// that every accepted string denotes exactly one rational.
pub fn parse_q(s: &str) -> Result<Q> {
    let t = s.trim();
    let bad = || Error::Parse(format!("`{s}` is not an exact rational of the form p/q"));
    let int = |part: &str| -> Result<BigInt> {
        let p = part.trim();
        let digits = p.strip_prefix(['-', '+']).unwrap_or(p);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        p.parse::<BigInt>().map_err(|_| bad())
    };
    match t.split_once('/') {
        Some((n, d)) => {
            let den = int(d)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("`{s}` has a zero denominator")));
            }
            Ok(Q::new(int(n)?, den))
        }
        None => Ok(Q::from_integer(int(t)?)),
    }
}

/// Canonical text form: `"p/q"` in lowest terms, or `"p"` for integers.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Floor of a rational as an integer.
pub fn floor_q(x: &Q) -> BigInt {
    x.numer().div_floor(x.denom())
}

/// Floor of a rational, as `i64`; panics only on astronomically large values.
pub fn floor_i64(x: &Q) -> i64 {
    floor_q(x).to_i64().expect("floor does not fit in i64")
}

/// `true` when `x` is an integer.
pub fn is_integer(x: &Q) -> bool {
    x.denom().is_one()
}

/// Absolute value.
pub fn abs_q(x: &Q) -> Q {
    x.abs()
}


/// Serde helpers writing exact numbers as strings (`"-3"`, `"7/2"`).
pub mod as_string {
    use serde::Serializer;
    use std::fmt::Display;

    /// Serialize any `Display` value as its string form.
    pub fn display<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    /// Serialize an optional `Display` value as a string or `null`.
    pub fn option<T: Display, S: Serializer>(v: &Option<T>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => s.collect_str(x),
            None => s.serialize_none(),
        }
    }
}
