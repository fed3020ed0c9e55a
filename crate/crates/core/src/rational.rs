//! Arbitrary-precision rationals and parsing.
//!
//! `BigRational` keeps the denominator positive and the fraction reduced after
//! every operation, which is exactly the invariant the symbolic engine relies
//! on, so it is used directly.

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `2^e` for a possibly negative exponent.
pub fn pow2(e: i64) -> Rational {
    let base = Rational::from_integer(BigInt::from(2));
    if e >= 0 {
        Pow::pow(base, e as u64)
    } else {
        Pow::pow(base, (-e) as u64).recip()
    }
}

/// Parses `"a/b"`, a signed integer, or a decimal such as `"-2.75"` or
/// `"1.5e-3"`. Decimals are converted exactly (scaled integers), never through
/// a binary float.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::Parse(s.to_string());
    let t = s.trim();
    if t.is_empty() {
        return Err(err());
    }
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| err())?;
        let d: BigInt = d.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(n, d));
    }

    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(i) => {
            let e: i64 = t[i + 1..].parse().map_err(|_| err())?;
            (&t[..i], e)
        }
        None => (t, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, fractional) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && fractional.is_empty() {
        return Err(err());
    }
    if !whole
        .chars()
        .chain(fractional.chars())
        .all(|c| c.is_ascii_digit())
    {
        return Err(err());
    }
    let joined = format!("{whole}{fractional}");
    let mut value = Rational::from_integer(joined.parse::<BigInt>().map_err(|_| err())?);
    value *= pow10(exponent - fractional.len() as i64);
    if negative {
        value = -value;
    }
    Ok(value)
}

fn pow10(e: i64) -> Rational {
    let ten = Rational::from_integer(BigInt::from(10));
    if e >= 0 {
        Pow::pow(ten, e as u64)
    } else {
        Pow::pow(ten, (-e) as u64).recip()
    }
}

/// Renders as `"n"` for integers and `"n/d"` otherwise.
pub fn to_fraction_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use proptest::prelude::*;

    #[test]
    fn parses_fractions_and_decimals_exactly() {
        assert_eq!(parse_rational("1/2").unwrap(), frac(1, 2));
        assert_eq!(parse_rational("-6/4").unwrap(), frac(-3, 2));
        assert_eq!(parse_rational("0.25").unwrap(), frac(1, 4));
        assert_eq!(parse_rational("2.7").unwrap(), frac(27, 10));
        assert_eq!(parse_rational("-.5").unwrap(), frac(-1, 2));
        assert_eq!(parse_rational("1.5e-3").unwrap(), frac(3, 2000));
        assert_eq!(parse_rational("12").unwrap(), int(12));
        assert_eq!(parse_rational("3.").unwrap(), int(3));
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "abc", "1/0", "1.2.3", "--1", ".", "1e", "0x10"] {
            assert!(parse_rational(s).is_err(), "{s:?} should not parse");
        }
    }

    #[test]
    fn fraction_string() {
        assert_eq!(to_fraction_string(&frac(1, 90)), "1/90");
        assert_eq!(to_fraction_string(&int(-4)), "-4");
        assert_eq!(pow2(-3), frac(1, 8));
    }

    proptest! {
        #[test]
        fn division_round_trips(x in -10_000i64..10_000, yn in 1i64..5_000, yd in 1i64..5_000, neg in any::<bool>()) {
            let y = frac(if neg { -yn } else { yn }, yd);
            let x = int(x);
            prop_assert_eq!((&x / &y) * &y, x);
        }

        #[test]
        fn stays_reduced(a in -1000i64..1000, b in 1i64..1000, c in -1000i64..1000, d in 1i64..1000) {
            let s = frac(a, b) + frac(c, d);
            prop_assert!(s.denom().is_positive());
            prop_assert!(num_integer::Integer::gcd(s.numer(), s.denom()).is_one());
        }
    }
}
