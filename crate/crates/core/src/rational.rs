//! Exact rational scalars and their string form.
//!
//! Every rational crossing a serialization boundary is written as a reduced
//! fraction `"p/q"` with `q > 0`, or `"p"` when the denominator is one.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn big(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

/// `n / d`, reduced.
pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Exact square root of a nonnegative integer, if it is a perfect square.
pub fn integer_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Exact square root of a rational, if it is the square of a rational.
pub fn rational_sqrt_exact(q: &Rational) -> Option<Rational> {
    let n = integer_sqrt_exact(q.numer())?;
    let d = integer_sqrt_exact(q.denom())?;
    Some(Rational::new(n, d))
}

pub fn is_rational_square(q: &Rational) -> bool {
    rational_sqrt_exact(q).is_some()
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Exact square root of a `u64`, if it is a perfect square.
pub fn isqrt_exact_u64(n: u64) -> Option<u64> {
    let r = n.sqrt();
    (r * r == n).then_some(r)
}

pub(crate) mod serde_str {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

pub(crate) mod serde_str_vec {
    use super::*;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        v.iter().map(format_rational).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Rational>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_and_parse() {
        assert_eq!(format_rational(&frac(-6, 4)), "-3/2");
        assert_eq!(format_rational(&int(0)), "0");
        assert_eq!(format_rational(&int(17424)), "17424");
        assert_eq!(parse_rational("-3/2").unwrap(), frac(-3, 2));
        assert_eq!(parse_rational("10/-4").unwrap(), frac(-5, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn square_tests() {
        assert!(is_rational_square(&frac(9, 4)));
        assert!(!is_rational_square(&frac(21, 1)));
        assert!(!is_rational_square(&int(-4)));
        assert_eq!(isqrt_exact_u64(1_000_000), Some(1000));
        assert_eq!(isqrt_exact_u64(999_999), None);
    }
}
