//! Extended nonnegative reals with an `"inf"` serialization.
//!
//! Growth functions and indices can genuinely be infinite (a Young
//! function outside the doubling class has `M(t) = ∞` for `t > 1`).
//! Reports serialize those as the string `"inf"` and finite values as
//! plain numbers.

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// A nonnegative real number or `+∞`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd)]
pub struct ExtReal(pub f64);

impl ExtReal {
    pub const INF: ExtReal = ExtReal(f64::INFINITY);

    pub fn finite(v: f64) -> Self {
        debug_assert!(v.is_finite());
        ExtReal(v)
    }

    pub fn is_infinite(&self) -> bool {
        self.0.is_infinite()
    }

    pub fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    /// Finite value, or `None` when infinite.
    pub fn as_finite(&self) -> Option<f64> {
        self.is_finite().then_some(self.0)
    }
}

impl From<f64> for ExtReal {
    fn from(v: f64) -> Self {
        ExtReal(v)
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "inf")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl Serialize for ExtReal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if self.is_infinite() {
            serializer.serialize_str("inf")
        } else {
            serializer.serialize_f64(self.0)
        }
    }
}

struct ExtRealVisitor;

impl<'de> Visitor<'de> for ExtRealVisitor {
    type Value = ExtReal;

    fn expecting(&self, formatter: &mut fmt::Formatter) -> fmt::Result {
        formatter.write_str("a number or the string \"inf\"")
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<ExtReal, E> {
        Ok(ExtReal(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<ExtReal, E> {
        Ok(ExtReal(v as f64))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<ExtReal, E> {
        Ok(ExtReal(v as f64))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<ExtReal, E> {
        match v {
            "inf" | "Inf" | "INF" => Ok(ExtReal::INF),
            other => other
                .parse::<f64>()
                .map(ExtReal)
                .map_err(|_| E::custom(format!("invalid extended real: {other:?}"))),
        }
    }
}

impl<'de> Deserialize<'de> for ExtReal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<ExtReal, D::Error> {
        deserializer.deserialize_any(ExtRealVisitor)
    }
}
