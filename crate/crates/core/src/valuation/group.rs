use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Totally ordered value groups: `ℤ^k` with the lexicographic order, or `ℚ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ValueGroup {
    ZLex(usize),
    Q,
}

impl ValueGroup {
    pub fn zlex(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("Zlex rank must be positive".into()));
        }
        Ok(ValueGroup::ZLex(k))
    }

    pub fn zero(&self) -> Value {
        match self {
            ValueGroup::ZLex(k) => Value::Lex(vec![0; *k]),
            ValueGroup::Q => Value::Rat(Rational64::zero()),
        }
    }

    pub fn lex(&self, coords: &[i64]) -> Result<Value> {
        match self {
            ValueGroup::ZLex(k) if coords.len() == *k => Ok(Value::Lex(coords.to_vec())),
            _ => Err(Error::GroupMismatch(self.to_string(), format!("{coords:?}"))),
        }
    }

    pub fn rat(&self, num: i64, den: i64) -> Result<Value> {
        match self {
            ValueGroup::Q if den != 0 => Ok(Value::Rat(Rational64::new(num, den))),
            ValueGroup::Q => Err(Error::InvalidArgument("zero denominator".into())),
            _ => Err(Error::GroupMismatch(self.to_string(), "Q".into())),
        }
    }

    /// The `i`-th unit vector in `ℤ^k`.
    pub fn unit_vector(&self, i: usize) -> Result<Value> {
        match self {
            ValueGroup::ZLex(k) if i < *k => {
                let mut v = vec![0; *k];
                v[i] = 1;
                Ok(Value::Lex(v))
            }
            _ => Err(Error::InvalidArgument(format!("no unit vector {i} in {self}"))),
        }
    }

    pub fn contains(&self, v: &Value) -> bool {
        match (self, v) {
            (ValueGroup::ZLex(k), Value::Lex(c)) => c.len() == *k,
            (ValueGroup::Q, Value::Rat(_)) => true,
            _ => false,
        }
    }

    pub fn check(&self, v: &Value) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::GroupMismatch(self.to_string(), v.to_string()))
        }
    }

    /// Parses `(1,0)` or `(1, -2)` for `ℤ^k`, `1/3` or `2` for `ℚ`; a bare
    /// integer is also accepted for `ℤ^1`.
    pub fn parse_value(&self, text: &str) -> Result<Value> {
        let t = text.trim();
        let syntax = |msg: &str| Error::Syntax {
            pos: 0,
            msg: format!("{msg}: `{t}`"),
        };
        match self {
            ValueGroup::ZLex(k) => {
                let inner = t.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(t);
                let coords = inner
                    .split(',')
                    .map(|c| c.trim().parse::<i64>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| syntax("bad lex value"))?;
                if coords.len() != *k {
                    return Err(Error::GroupMismatch(self.to_string(), t.to_string()));
                }
                Ok(Value::Lex(coords))
            }
            ValueGroup::Q => {
                let inner = t.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(t);
                Rational64::from_str(inner.trim())
                    .map(Value::Rat)
                    .map_err(|_| syntax("bad rational value"))
            }
        }
    }
}

impl fmt::Display for ValueGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValueGroup::ZLex(k) => write!(f, "Zlex({k})"),
            ValueGroup::Q => write!(f, "Q"),
        }
    }
}

/// An element of a value group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Value {
    Lex(Vec<i64>),
    Rat(Rational64),
}

impl Value {
    fn same_kind(&self, other: &Value) -> bool {
        match (self, other) {
            (Value::Lex(a), Value::Lex(b)) => a.len() == b.len(),
            (Value::Rat(_), Value::Rat(_)) => true,
            _ => false,
        }
    }

    pub fn add(&self, other: &Value) -> Value {
        assert!(self.same_kind(other), "value group mismatch");
        match (self, other) {
            (Value::Lex(a), Value::Lex(b)) => Value::Lex(a.iter().zip(b).map(|(x, y)| x + y).collect()),
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a + b),
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> Value {
        match self {
            Value::Lex(a) => Value::Lex(a.iter().map(|x| -x).collect()),
            Value::Rat(a) => Value::Rat(-a),
        }
    }

    pub fn sub(&self, other: &Value) -> Value {
        self.add(&other.neg())
    }

    pub fn scale(&self, n: i64) -> Value {
        match self {
            Value::Lex(a) => Value::Lex(a.iter().map(|x| x * n).collect()),
            Value::Rat(a) => Value::Rat(a * Rational64::from_integer(n)),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Value::Lex(a) => a.iter().all(|x| *x == 0),
            Value::Rat(a) => a.is_zero(),
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            Value::Lex(a) => a.iter().find(|x| **x != 0).is_some_and(|x| *x > 0),
            Value::Rat(a) => a.is_positive(),
        }
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && !self.is_positive()
    }

    /// Index of the first nonzero coordinate (lex values only).
    pub fn leading_index(&self) -> Option<usize> {
        match self {
            Value::Lex(a) => a.iter().position(|x| *x != 0),
            Value::Rat(_) => None,
        }
    }
}

impl PartialOrd for Value {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Value::Lex(a), Value::Lex(b)) if a.len() == b.len() => Some(a.cmp(b)),
            (Value::Rat(a), Value::Rat(b)) => Some(a.cmp(b)),
            _ => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Lex(a) => {
                write!(f, "(")?;
                for (i, x) in a.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
            Value::Rat(r) => write!(f, "{r}"),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A ring element of a valuation ring, known only through its value;
/// `Inf` is the zero element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ValElement {
    Inf,
    Val(Value),
}

impl ValElement {
    pub fn value(&self) -> Option<&Value> {
        match self {
            ValElement::Inf => None,
            ValElement::Val(v) => Some(v),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ValElement::Inf)
    }

    pub fn is_unit(&self) -> bool {
        self.value().is_some_and(|v| v.is_zero())
    }

    pub fn mul(&self, other: &ValElement) -> ValElement {
        match (self, other) {
            (ValElement::Val(a), ValElement::Val(b)) => ValElement::Val(a.add(b)),
            _ => ValElement::Inf,
        }
    }

    pub fn pow(&self, n: u32) -> ValElement {
        match self {
            ValElement::Val(v) => ValElement::Val(v.scale(n as i64)),
            ValElement::Inf if n == 0 => panic!("0^0 is not a ring element here"),
            ValElement::Inf => ValElement::Inf,
        }
    }
}

impl fmt::Display for ValElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValElement::Inf => write!(f, "0"),
            ValElement::Val(v) => write!(f, "val {v}"),
        }
    }
}
