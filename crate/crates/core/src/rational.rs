//! Exact rationals and their `"p/q"` text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational coefficient.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Q {
    Q::zero()
}

pub fn one() -> Q {
    Q::one()
}

/// `"p/q"` with `q > 0` in lowest terms, or `"p"` when the denominator is one.
pub fn format_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = |m: &str| Error::parse("rational", format!("`{s}`: {m}"));
    match s.split_once('/') {
        None => s
            .parse::<BigInt>()
            .map(Q::from_integer)
            .map_err(|e| bad(&e.to_string())),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|e: num_bigint::ParseBigIntError| bad(&e.to_string()))?;
            let d: BigInt = d.trim().parse().map_err(|e: num_bigint::ParseBigIntError| bad(&e.to_string()))?;
            if d.is_zero() {
                return Err(bad("zero denominator"));
            }
            Ok(Q::new(n, d))
        }
    }
}

/// `base^exp` for an integer exponent; `base` must be nonzero when `exp < 0`.
pub fn pow_i(base: &Q, exp: i64) -> Q {
    let mut acc = Q::one();
    let mut b = if exp < 0 { base.recip() } else { base.clone() };
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        b = &b * &b;
        e >>= 1;
    }
    acc
}

pub fn factorial(n: u32) -> Q {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    Q::from_integer(acc)
}

pub fn is_integer(x: &Q) -> bool {
    x.denom().is_one()
}

/// The value as `i64` when it is an integer that fits.
pub fn to_i64(x: &Q) -> Option<i64> {
    if !is_integer(x) {
        return None;
    }
    i64::try_from(x.numer().clone()).ok()
}

pub fn abs(x: &Q) -> Q {
    x.abs()
}

pub mod serde_q {
    //! Serde adapter for a single rational.
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_q(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        parse_q(&s).map_err(serde::de::Error::custom)
    }
}

pub mod serde_q_vec {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(xs: &[Q], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(xs.iter().map(format_q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Q>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| parse_q(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

pub mod serde_q_mat {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(m: &[Vec<Q>], s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(format_q).collect()).collect();
        s.collect_seq(rows)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Vec<Q>>, D::Error> {
        let v = Vec::<Vec<String>>::deserialize(d)?;
        v.iter()
            .map(|r| {
                r.iter()
                    .map(|s| parse_q(s).map_err(serde::de::Error::custom))
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_and_parse() {
        assert_eq!(format_q(&q_frac(6, -4)), "-3/2");
        assert_eq!(format_q(&q(5)), "5");
        assert_eq!(parse_q("-3/2").unwrap(), q_frac(-3, 2));
        assert_eq!(parse_q("4/2").unwrap(), q(2));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }

    #[test]
    fn integer_powers() {
        assert_eq!(pow_i(&q(3), 2), q(9));
        assert_eq!(pow_i(&q(2), -3), q_frac(1, 8));
        assert_eq!(pow_i(&q(7), 0), q(1));
        assert_eq!(factorial(5), q(120));
    }
}
