//! Arbitrary-precision rational scalars and their string form.
//!
//! The interchange format writes rationals as `"p/q"` in lowest terms with a
//! positive denominator, shortened to `"k"` for integers.  `BigRational::new`
//! already canonicalizes, so parse→format round-trips are byte-stable.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::traits::{One, Zero};
use std::str::FromStr;

pub type Rat = num::BigRational;

/// The integer `k` as a rational.
pub fn int(k: i64) -> Rat {
    Rat::from_integer(BigInt::from(k))
}

/// The fraction `p/q`.  Panics on `q == 0`; only used with literal arguments.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parse `"p/q"` or the integer shorthand `"k"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let err = || Error::Rational { text: s.to_string() };
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| err())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| err())?;
            if q.is_zero() {
                return Err(err());
            }
            Ok(Rat::new(p, q))
        }
        None => Ok(Rat::from_integer(
            BigInt::from_str(s.trim()).map_err(|_| err())?,
        )),
    }
}

/// Format in lowest terms, `"k"` when the denominator is 1.
pub fn format_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}
