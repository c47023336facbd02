//! Exact rational scalars.
//!
//! [`Rational`] is an arbitrary-precision fraction that is always kept in
//! lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub type Rational = BigRational;

/// `num / den`, normalized. A zero denominator is an error rather than a panic.
pub fn ratio(num: i64, den: i64) -> Result<Rational> {
    if den == 0 {
        return Err(Error::ZeroDenominator);
    }
    Ok(Rational::new(BigInt::from(num), BigInt::from(den)))
}

/// Shorthand for a rational known to have a nonzero denominator.
pub(crate) fn r(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int<T: Into<BigInt>>(v: T) -> Rational {
    Rational::from_integer(v.into())
}

/// Parses `-?[0-9]+(/[1-9][0-9]*)?` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidRational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = num.strip_prefix('-').unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let numer: BigInt = num.parse().map_err(|_| bad())?;
    let denom = match den {
        None => BigInt::one(),
        Some(d) => {
            let valid = d.bytes().next().is_some_and(|b| (b'1'..=b'9').contains(&b))
                && d.bytes().all(|b| b.is_ascii_digit());
            if !valid {
                return Err(bad());
            }
            d.parse().map_err(|_| bad())?
        }
    };
    Ok(Rational::new(numer, denom))
}

/// Reduced `a/b` (or `a` for integers).
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// Approximate value, for human-facing tables only.
pub fn to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// Largest rational with denominator `den` that is `<= q`.
pub fn round_down(q: &Rational, den: &BigInt) -> Rational {
    let scaled = q * Rational::from_integer(den.clone());
    Rational::new(scaled.floor().to_integer(), den.clone())
}

/// Smallest rational with denominator `den` that is `>= q`.
pub fn round_up(q: &Rational, den: &BigInt) -> Rational {
    let scaled = q * Rational::from_integer(den.clone());
    Rational::new(scaled.ceil().to_integer(), den.clone())
}

pub fn max(a: Rational, b: Rational) -> Rational {
    if a >= b {
        a
    } else {
        b
    }
}

/// `C(i, 2)`.
pub fn choose2(i: u64) -> u64 {
    i * i.saturating_sub(1) / 2
}

/// Least common multiple of the denominators of `qs`, as a positive integer.
pub(crate) fn common_denominator<'a>(qs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    qs.into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

pub(crate) fn is_positive(q: &Rational) -> bool {
    q.is_positive() && !q.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("7").unwrap(), r(7, 1));
        assert_eq!(parse_rational("-3/6").unwrap(), r(-1, 2));
        assert_eq!(parse_rational("0/5").unwrap(), r(0, 1));
        assert_eq!(parse_rational("-0").unwrap(), r(0, 1));
    }

    #[test]
    fn rejects_malformed_literals() {
        for s in [
            "", "-", "1/0", "1/05", "+1", "1.5", "1/", "/2", "1/-2", "a", " 1", "1/2/3",
        ] {
            assert!(parse_rational(s).is_err(), "{s:?} should be rejected");
        }
    }

    #[test]
    fn formats_reduced() {
        assert_eq!(format_rational(&r(20803, 8944)), "20803/8944");
        assert_eq!(format_rational(&r(-4, 2)), "-2");
    }

    #[test]
    fn outward_rounding_brackets_value() {
        let q = r(1, 3);
        let den = BigInt::from(1000);
        assert_eq!(round_down(&q, &den), r(333, 1000));
        assert_eq!(round_up(&q, &den), r(334, 1000));
        assert_eq!(round_down(&r(-1, 3), &den), r(-334, 1000));
    }

    #[test]
    fn ratio_zero_denominator() {
        assert_eq!(ratio(1, 0), Err(Error::ZeroDenominator));
    }
}
