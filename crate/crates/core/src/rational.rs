//! Arbitrary-precision rationals and their canonical `p/q` text form.
//!
//! All exact values in this crate bottom out in [`Rational`]. The text form
//! is `p/q` with the sign on the numerator and the denominator always
//! printed, so formatting and parsing round-trip bit-exactly. The parser
//! also accepts a bare integer `p`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = num_rational::BigRational;

/// Failure to parse a rational, scalar, or polynomial text form.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error: {0}")]
pub struct ParseError(pub String);

/// Shorthand constructor used pervasively in tests and fixtures.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical text form `p/q` (denominator always present).
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p` or `p/q`. The result is reduced with a positive denominator.
pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseError("empty rational".into()));
    }
    let (numer, denom) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n: BigInt = numer
        .parse()
        .map_err(|_| ParseError(format!("bad numerator `{numer}`")))?;
    let d: BigInt = match denom {
        Some(d) => d
            .parse()
            .map_err(|_| ParseError(format!("bad denominator `{d}`")))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(ParseError(format!("zero denominator in `{s}`")));
    }
    Ok(Rational::new(n, d))
}

/// Sign of a rational as -1, 0, or +1.
pub fn rational_sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(format_rational(&rat(1, 2)), "1/2");
        assert_eq!(format_rational(&rat(-2, 4)), "-1/2");
        assert_eq!(format_rational(&rat(0, 7)), "0/1");
        assert_eq!(format_rational(&rat(3, -9)), "-1/3");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("5").unwrap(), rat_int(5));
        assert_eq!(parse_rational("-7/14").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational(" 3 / 4 ").unwrap(), rat(3, 4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("a/b").is_err());
    }

    #[test]
    fn round_trip() {
        for r in [rat(0, 1), rat(22, 7), rat(-355, 113), rat_int(-9)] {
            assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
    }
}
