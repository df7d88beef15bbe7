//! Exact rational values.
//!
//! Every valuation output, marginal, threshold and Nash product is a [`Value`];
//! there is no floating point anywhere on a fairness decision path.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A reduced rational number. Marginals may be negative; bundle values never are.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Value(Ratio<i128>);

impl Value {
    pub const ZERO: Value = Value(Ratio::new_raw(0, 1));
    pub const ONE: Value = Value(Ratio::new_raw(1, 1));

    pub fn new(numerator: i128, denominator: i128) -> Option<Self> {
        if denominator == 0 {
            return None;
        }
        Some(Value(Ratio::new(numerator, denominator)))
    }

    pub const fn int(v: i128) -> Self {
        Value(Ratio::new_raw(v, 1))
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// `k · self`, used to compare `n·v(A_i)` against `v(M)` without dividing.
    pub fn scale(self, k: usize) -> Self {
        Value(self.0 * Ratio::from_integer(k as i128))
    }
}

impl Default for Value {
    fn default() -> Self {
        Value::ZERO
    }
}

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value::int(v as i128)
    }
}

impl From<i32> for Value {
    fn from(v: i32) -> Self {
        Value::int(v as i128)
    }
}

impl From<u32> for Value {
    fn from(v: u32) -> Self {
        Value::int(v as i128)
    }
}

impl Add for Value {
    type Output = Value;
    fn add(self, rhs: Value) -> Value {
        Value(self.0 + rhs.0)
    }
}

impl AddAssign for Value {
    fn add_assign(&mut self, rhs: Value) {
        self.0 += rhs.0;
    }
}

impl Sub for Value {
    type Output = Value;
    fn sub(self, rhs: Value) -> Value {
        Value(self.0 - rhs.0)
    }
}

impl Mul for Value {
    type Output = Value;
    fn mul(self, rhs: Value) -> Value {
        Value(self.0 * rhs.0)
    }
}

impl Neg for Value {
    type Output = Value;
    fn neg(self) -> Value {
        Value(-self.0)
    }
}

impl Sum for Value {
    fn sum<I: Iterator<Item = Value>>(iter: I) -> Value {
        iter.fold(Value::ZERO, Add::add)
    }
}

impl<'a> Sum<&'a Value> for Value {
    fn sum<I: Iterator<Item = &'a Value>>(iter: I) -> Value {
        iter.copied().sum()
    }
}

impl Zero for Value {
    fn zero() -> Self {
        Value::ZERO
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Value {
    fn one() -> Self {
        Value::ONE
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseValueError(String);

impl fmt::Display for ParseValueError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{}` is not an integer or a `p/q` rational", self.0)
    }
}

impl std::error::Error for ParseValueError {}

impl FromStr for Value {
    type Err = ParseValueError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseValueError(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            None => s.parse::<i128>().map(Value::int).map_err(|_| bad()),
            Some((p, q)) => {
                let p = p.trim().parse::<i128>().map_err(|_| bad())?;
                let q = q.trim().parse::<i128>().map_err(|_| bad())?;
                if q <= 0 {
                    return Err(bad());
                }
                Value::new(p, q).ok_or_else(bad)
            }
        }
    }
}

/// Integers that fit in an `i64` serialize as bare JSON numbers, everything else as `"p/q"`.
impl Serialize for Value {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match (self.is_integer(), i64::try_from(self.numer())) {
            (true, Ok(v)) => serializer.serialize_i64(v),
            _ => serializer.collect_str(self),
        }
    }
}

impl<'de> Deserialize<'de> for Value {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct ValueVisitor;

        impl Visitor<'_> for ValueVisitor {
            type Value = Value;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a \"p/q\" string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Value, E> {
                Ok(Value::int(v as i128))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Value, E> {
                Ok(Value::int(v as i128))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> Result<Value, E> {
                Err(E::custom(format!(
                    "floating point value {v} not accepted; write it as \"p/q\""
                )))
            }

            fn visit_str<E: de::Error>(self, s: &str) -> Result<Value, E> {
                s.parse().map_err(E::custom)
            }
        }

        deserializer.deserialize_any(ValueVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_on_construction() {
        let v = Value::new(6, -4).unwrap();
        assert_eq!((v.numer(), v.denom()), (-3, 2));
        assert_eq!(v.to_string(), "-3/2");
        assert!(Value::new(1, 0).is_none());
    }

    #[test]
    fn parses_both_forms() {
        assert_eq!("7".parse::<Value>().unwrap(), Value::int(7));
        assert_eq!("14/6".parse::<Value>().unwrap(), Value::new(7, 3).unwrap());
        assert!("1/0".parse::<Value>().is_err());
        assert!("x".parse::<Value>().is_err());
    }

    #[test]
    fn json_forms() {
        let vs = vec![Value::int(2), Value::new(7, 3).unwrap()];
        let s = serde_json::to_string(&vs).unwrap();
        assert_eq!(s, r#"[2,"7/3"]"#);
        let back: Vec<Value> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, vs);
        assert!(serde_json::from_str::<Value>("2.5").is_err());
    }

    #[test]
    fn seven_thirds_exceeds_two() {
        let threshold = Value::new(7, 3).unwrap();
        assert!(Value::int(2) < threshold);
        assert!(Value::int(2).scale(3) < Value::int(7));
    }
}
