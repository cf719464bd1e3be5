//! Rational scalars.
//!
//! `Rat` is the arbitrary-precision rational type from `num-rational`; it is
//! always normalized (lowest terms, positive denominator). The helpers here
//! cover construction and the `"p/q"` string form used in every JSON payload.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rat = num_rational::BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

/// Renders as `"p/q"`, or `"p"` when the denominator is 1.
pub fn to_string(r: &Rat) -> String {
    r.to_string()
}

pub fn parse(s: &str) -> Result<Rat> {
    let t = s.trim();
    let bad = || Error::Parse { offset: 0, msg: format!("invalid rational literal {t:?}") };
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        }
        None => {
            let p: BigInt = t.parse().map_err(|_| bad())?;
            Ok(Rat::from_integer(p))
        }
    }
}

/// The value as an `i64` when it is an integer that fits.
pub fn to_i64(r: &Rat) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

pub fn sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Serde adapter for a single rational stored as a string.
pub mod serde_rat {
    use super::Rat;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        super::parse(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_form() {
        assert_eq!(to_string(&frac(6, -4)), "-3/2");
        assert_eq!(to_string(&rat(5)), "5");
        assert_eq!(parse("-3/2").unwrap(), frac(-3, 2));
        assert_eq!(parse(" 4 ").unwrap(), rat(4));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
    }

    #[test]
    fn lowest_terms() {
        let r = frac(10, -20);
        assert_eq!(r.numer(), &BigInt::from(-1));
        assert_eq!(r.denom(), &BigInt::from(2));
    }
}
