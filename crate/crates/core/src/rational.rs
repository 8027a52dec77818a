//! Exact rational scalars and their canonical text form.
//!
//! Every scalar that enters or leaves the certifier is an arbitrary-precision
//! rational number rendered as `"p/q"` with `q > 0` and `gcd(|p|, q) = 1`;
//! integers drop the denominator and render as `"p"`.  Parsing accepts both
//! forms and normalises, so formatting then re-parsing is the identity.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::str::FromStr;
use thiserror::Error;

/// Failure while reading a rational scalar from text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer part {0:?} in rational literal")]
    BadInteger(String),
    #[error("zero denominator in rational literal {0:?}")]
    ZeroDenominator(String),
    #[error("malformed rational literal {0:?}; expected \"p\" or \"p/q\"")]
    Malformed(String),
}

/// Parses `"p"` or `"p/q"` into a reduced rational with positive denominator.
pub fn parse_rational(text: &str) -> Result<BigRational, RationalError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(RationalError::Empty);
    }
    let mut parts = trimmed.splitn(3, '/');
    let numerator = parts.next().ok_or(RationalError::Empty)?;
    let numerator = BigInt::from_str(numerator.trim())
        .map_err(|_| RationalError::BadInteger(numerator.trim().to_owned()))?;
    match parts.next() {
        None => Ok(BigRational::from_integer(numerator)),
        Some(denominator) => {
            if parts.next().is_some() {
                return Err(RationalError::Malformed(trimmed.to_owned()));
            }
            let denominator = BigInt::from_str(denominator.trim())
                .map_err(|_| RationalError::BadInteger(denominator.trim().to_owned()))?;
            if denominator.is_zero() {
                return Err(RationalError::ZeroDenominator(trimmed.to_owned()));
            }
            // `BigRational::new` reduces the fraction and moves the sign to the
            // numerator, which is exactly the canonical form we promise.
            Ok(BigRational::new(numerator, denominator))
        }
    }
}

/// Renders a rational in canonical form: `"p/q"`, or `"p"` when `q = 1`.
pub fn format_rational(value: &BigRational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Shorthand for an exact integer scalar.
pub fn int(value: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(value))
}

/// Shorthand for the exact fraction `numer/denom`.
///
/// Panics when `denom` is zero; intended for statically known constants and
/// test fixtures, not for user input (use [`parse_rational`] there).
pub fn ratio(numer: i64, denom: i64) -> BigRational {
    assert!(denom != 0, "ratio() requires a nonzero denominator");
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Converts a rational to the nearest `f64` (used only by the numerical side).
pub fn to_f64(value: &BigRational) -> f64 {
    // A plain numer/denom division is accurate enough here: every rational the
    // crate produces has magnitude well inside the double range.
    let numer = value.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
    let denom = value.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
    numer / denom
}

/// True when `value` is strictly positive.
pub fn is_positive(value: &BigRational) -> bool {
    value.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert_eq!(parse_rational(" 9/8 ").unwrap(), ratio(9, 8));
        assert_eq!(parse_rational("-6/4").unwrap(), ratio(-3, 2));
        // Negative denominators normalise to a positive one.
        assert_eq!(parse_rational("3/-2").unwrap(), ratio(-3, 2));
    }

    #[test]
    fn rejects_malformed_literals() {
        assert_eq!(parse_rational(""), Err(RationalError::Empty));
        assert!(matches!(
            parse_rational("1/0"),
            Err(RationalError::ZeroDenominator(_))
        ));
        assert!(matches!(
            parse_rational("1/2/3"),
            Err(RationalError::Malformed(_))
        ));
        assert!(matches!(
            parse_rational("a/2"),
            Err(RationalError::BadInteger(_))
        ));
    }

    #[test]
    fn formats_canonically() {
        assert_eq!(format_rational(&int(5)), "5");
        assert_eq!(format_rational(&ratio(-6, 4)), "-3/2");
        assert_eq!(format_rational(&ratio(9, 8)), "9/8");
        // Round trip: format then parse is the identity.
        for value in [int(0), int(-7), ratio(22, 7), ratio(-9, 8)] {
            assert_eq!(parse_rational(&format_rational(&value)).unwrap(), value);
        }
    }
}
