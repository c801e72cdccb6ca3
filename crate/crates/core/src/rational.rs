//! Exact rationals backed by arbitrary-precision integers.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p`, `p/q` or `-p/q`. Whitespace around the string is ignored.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let n = BigInt::from_str(num).map_err(|_| Error::Parse(format!("bad numerator in `{t}`")))?;
    let d = match den {
        Some(d) => {
            let d = BigInt::from_str(d).map_err(|_| Error::Parse(format!("bad denominator in `{t}`")))?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{t}`")));
            }
            d
        }
        None => BigInt::one(),
    };
    Ok(Rational::new(n, d))
}

/// Canonical `p/q` text; integers print without a denominator.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn is_nonnegative(q: &Rational) -> bool {
    !q.is_negative()
}

pub fn to_i64(q: &Rational) -> Option<i64> {
    use num_traits::ToPrimitive;
    if q.is_integer() {
        q.numer().to_i64()
    } else {
        None
    }
}
