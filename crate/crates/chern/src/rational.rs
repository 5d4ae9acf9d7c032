//! Exact rational arithmetic.
//!
//! Every number in this crate is a [`Rational`]: an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator. There is no
//! floating point anywhere; equality of computed invariants is decided by
//! exact comparison.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary-precision rational number, always normalized
/// (`gcd(|num|, den) = 1`, `den > 0`).
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `p/q`. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Rational {
    assert!(q != 0, "zero denominator");
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Binomial coefficient `C(n, k)` as a rational.
pub fn binomial(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    Rational::from_integer(num_integer::binomial(BigInt::from(n), BigInt::from(k)))
}

/// Parses `"p"` or `"p/q"` with optional leading sign into a normalized
/// rational. Rejects zero denominators and malformed input.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::BadRational(s.to_string());
    let (num_str, den_str) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), Some(b.trim())),
        None => (s, None),
    };
    let num: BigInt = num_str.parse().map_err(|_| bad())?;
    let den: BigInt = match den_str {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Renders a rational as `"p"` when integral and `"p/q"` otherwise.
/// This is the one wire format used by descriptors, reports and the CLI.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// True if `r` is a nonnegative integer.
pub fn is_nonnegative_integer(r: &Rational) -> bool {
    r.is_integer() && !r.is_negative()
}

/// True if `r` is an integer `>= 1`.
pub fn is_positive_integer(r: &Rational) -> bool {
    r.is_integer() && r.is_positive()
}
