use std::fmt;

use serde::{Serialize, Serializer};

use crate::exact::{Integer, Rational};
use crate::qpoly::{QPoly, TruncSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ValueKind {
    Integer,
    Rational,
    Qpoly,
    TruncSeries,
}

/// One side of an identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Integer(Integer),
    Rational(Rational),
    Poly(QPoly),
    Series(TruncSeries),
}

impl Value {
    pub fn kind(&self) -> ValueKind {
        match self {
            Value::Integer(_) => ValueKind::Integer,
            Value::Rational(_) => ValueKind::Rational,
            Value::Poly(_) => ValueKind::Qpoly,
            Value::Series(_) => ValueKind::TruncSeries,
        }
    }

    /// `rhs - lhs`; `None` when the kinds cannot be compared.
    pub fn difference(lhs: &Value, rhs: &Value) -> Option<Value> {
        use Value::*;
        Some(match (lhs, rhs) {
            (Integer(a), Integer(b)) => Integer(b - a),
            (Rational(a), Rational(b)) => Rational(b - a),
            (Integer(a), Rational(b)) => {
                Rational(b - crate::exact::Rational::from_integer(a.clone()))
            }
            (Rational(a), Integer(b)) => {
                Rational(crate::exact::Rational::from_integer(b.clone()) - a)
            }
            (Poly(a), Poly(b)) => Poly(b - a),
            (Series(a), Series(b)) => Series(b - a),
            _ => return None,
        })
    }

    /// Whether the difference is zero (false for incomparable kinds).
    pub fn agrees(lhs: &Value, rhs: &Value) -> bool {
        Self::difference(lhs, rhs).is_some_and(|d| d.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        use num_traits::Zero;
        match self {
            Value::Integer(v) => v.is_zero(),
            Value::Rational(v) => v.is_zero(),
            Value::Poly(p) => p.is_zero(),
            Value::Series(s) => s.coeffs().iter().all(Zero::is_zero),
        }
    }
}

impl From<Integer> for Value {
    fn from(v: Integer) -> Self {
        Value::Integer(v)
    }
}

impl From<Rational> for Value {
    fn from(v: Rational) -> Self {
        Value::Rational(v)
    }
}

impl From<QPoly> for Value {
    fn from(v: QPoly) -> Self {
        Value::Poly(v)
    }
}

impl From<TruncSeries> for Value {
    fn from(v: TruncSeries) -> Self {
        Value::Series(v)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Integer(v) => write!(f, "{v}"),
            Value::Rational(v) => write!(f, "{v}"),
            Value::Poly(p) => write!(f, "{p}"),
            Value::Series(s) => write!(f, "[{s}]"),
        }
    }
}

/// Numbers serialize as decimal strings, polynomials as sorted
/// `[half_exp, "coeff"]` pairs, series as arrays of coefficient strings.
impl Serialize for Value {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Integer(v) => serializer.serialize_str(&v.to_string()),
            Value::Rational(v) => serializer.serialize_str(&v.to_string()),
            Value::Poly(p) => p.serialize(serializer),
            Value::Series(s) => s.serialize(serializer),
        }
    }
}
