//! Exact non-negative rationals used for labels and distances.
//!
//! Only comparison and `max` are ever needed by the path-max construction, so
//! the value type carries no arithmetic beyond what ordering requires.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// A reduced non-negative rational `p/q`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(Ratio<u64>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal {0:?}")]
    Invalid(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

impl Rational {
    pub const ZERO: Rational = Rational(Ratio::new_raw(0, 1));
    pub const ONE: Rational = Rational(Ratio::new_raw(1, 1));

    /// Builds `numer/denom` in lowest terms.
    ///
    /// Panics if `denom` is zero.
    pub fn new(numer: u64, denom: u64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(Ratio::new(numer, denom))
    }

    pub const fn integer(n: u64) -> Self {
        Rational(Ratio::new_raw(n, 1))
    }

    pub fn numer(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> u64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.numer() == 0
    }

    pub fn is_positive(&self) -> bool {
        self.numer() > 0
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::ZERO
    }
}

impl From<u64> for Rational {
    fn from(n: u64) -> Self {
        Rational::integer(n)
    }
}

impl fmt::Display for Rational {
    /// Shortest exact form: `7` when the denominator is one, else `p/q`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_u64(digits: &str, whole: &str) -> Result<u64, ParseRationalError> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseRationalError::Invalid(whole.to_owned()));
    }
    digits
        .parse()
        .map_err(|_| ParseRationalError::Invalid(whole.to_owned()))
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `"12"` or `"p/q"` with unsigned decimal integers.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.is_empty() {
            return Err(ParseRationalError::Empty);
        }
        match t.split_once('/') {
            None => Ok(Rational::integer(parse_u64(t, s)?)),
            Some((p, q)) => {
                let p = parse_u64(p.trim(), s)?;
                let q = parse_u64(q.trim(), s)?;
                if q == 0 {
                    return Err(ParseRationalError::ZeroDenominator(s.to_owned()));
                }
                Ok(Rational::new(p, q))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct Visitor;

        impl de::Visitor<'_> for Visitor {
            type Value = Rational;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a non-negative rational string like \"3\" or \"5/2\"")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Rational, E> {
                v.parse().map_err(E::custom)
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rational, E> {
                Ok(Rational::integer(v))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rational, E> {
                u64::try_from(v)
                    .map(Rational::integer)
                    .map_err(|_| E::custom(format!("negative value {v}")))
            }
        }

        deserializer.deserialize_any(Visitor)
    }
}
