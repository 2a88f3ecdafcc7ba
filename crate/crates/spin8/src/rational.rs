//! Exact rational scalars and their "p/q" string form.

use crate::error::{Error, Result};
use num_rational::Ratio;
use num_traits::{One, Zero};

/// The exact rational type used throughout the engine.
pub type Q = Ratio<i64>;

/// Builds `n/d`. Panics when `d == 0`.
pub fn q(n: i64, d: i64) -> Q {
    Ratio::new(n, d)
}

/// Builds the integer `n` as a rational.
pub fn qi(n: i64) -> Q {
    Ratio::from_integer(n)
}

/// Parses `"p/q"` or `"p"` into an exact rational.
pub fn parse_q(s: &str) -> Result<Q> {
    let bad = || Error::ParseRational(s.to_string());
    let t = s.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: i64 = n.parse().map_err(|_| bad())?;
    let d: i64 = d.parse().map_err(|_| bad())?;
    if d == 0 {
        return Err(bad());
    }
    Ok(Ratio::new(n, d))
}

/// Formats a rational as `"p/q"`, or `"p"` when it is an integer.
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Integer power of a rational, allowing negative exponents.
pub fn qpow(x: Q, e: i32) -> Q {
    let mut acc = Q::one();
    let base = if e < 0 { x.recip() } else { x };
    for _ in 0..e.unsigned_abs() {
        acc *= base;
    }
    acc
}

/// True when `x` is zero.
pub fn is_zero(x: &Q) -> bool {
    x.is_zero()
}

/// Serde adapter storing a rational as a `"p/q"` string.
pub mod serde_q {
    use super::{fmt_q, parse_q, Q};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_q(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        parse_q(&s).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter storing a list of rationals as `"p/q"` strings.
pub mod serde_q_vec {
    use super::{fmt_q, parse_q, Q};
    use serde::ser::SerializeSeq;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(xs: &[Q], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(xs.len()))?;
        for x in xs {
            seq.serialize_element(&fmt_q(x))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Q>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| parse_q(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["1/2", "-3/2", "5", "0"] {
            assert_eq!(fmt_q(&parse_q(s).unwrap()), s);
        }
        assert_eq!(parse_q("4/2").unwrap(), qi(2));
    }

    #[test]
    fn malformed_rationals_are_rejected() {
        for s in ["0/0", "1/0", "x", "1/2/3", ""] {
            assert!(parse_q(s).is_err(), "{s}");
        }
    }

    #[test]
    fn powers_with_negative_exponents() {
        assert_eq!(qpow(qi(2), 3), qi(8));
        assert_eq!(qpow(qi(2), -2), q(1, 4));
        assert_eq!(qpow(q(-1, 2), 0), qi(1));
    }
}
