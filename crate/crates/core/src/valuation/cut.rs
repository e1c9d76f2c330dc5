use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use super::{ValElement, Value, ValueGroup};
use crate::error::{Error, Result};

/// Shape of an ideal in a valuation ring.
///
/// Over `ℤ^k` every finite cut is closed (`ν > γ` is `ν ≥ γ + e_k`), and a
/// `Limit(q)` with `1 ≤ |q| < k` is `{ν : ν[..|q|] ≥ q}`, the closed cut at
/// `(q, −∞, …)`. These are the ideals that are not finitely generated, such
/// as the height-one prime `{ν ≥ (1, n) for some n}` of `ℤ²`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CutShape {
    Zero,
    Unit,
    Closed(Value),
    /// Only over `ℚ`.
    Open(Value),
    /// Only over `ℤ^k`, `k ≥ 2`.
    Limit(Vec<i64>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CutIdeal {
    group: ValueGroup,
    shape: CutShape,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CutClass {
    Zero,
    Unit,
    Prime,
    Primary { prime: CutIdeal },
    Neither { radical: CutIdeal },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndecomposabilityCertificate {
    pub indecomposable: bool,
    pub pairs_checked: usize,
    /// A few `(J, K, J ∩ K)` triples from the check.
    pub examples: Vec<(CutIdeal, CutIdeal, CutIdeal)>,
}

fn lex_from_prefix(group: ValueGroup, prefix: Vec<i64>) -> CutIdeal {
    let ValueGroup::ZLex(k) = group else {
        unreachable!("lex prefix over {group}")
    };
    let zeros = vec![0; prefix.len()];
    let shape = if prefix.is_empty() || prefix <= zeros {
        CutShape::Unit
    } else if prefix.len() == k {
        CutShape::Closed(Value::Lex(prefix))
    } else {
        CutShape::Limit(prefix)
    };
    CutIdeal { group, shape }
}

fn q_from(group: ValueGroup, v: Value, open: bool) -> CutIdeal {
    let shape = if v.is_negative() || (v.is_zero() && !open) {
        CutShape::Unit
    } else if open {
        CutShape::Open(v)
    } else {
        CutShape::Closed(v)
    };
    CutIdeal { group, shape }
}

fn sub_prefix(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

impl CutIdeal {
    pub fn zero(group: ValueGroup) -> Self {
        CutIdeal {
            group,
            shape: CutShape::Zero,
        }
    }

    pub fn unit(group: ValueGroup) -> Self {
        CutIdeal {
            group,
            shape: CutShape::Unit,
        }
    }

    /// `{z : ν(z) ≥ v}`
    pub fn closed(group: ValueGroup, v: Value) -> Result<Self> {
        group.check(&v)?;
        Ok(match v {
            Value::Lex(c) => lex_from_prefix(group, c),
            v => q_from(group, v, false),
        })
    }

    /// `{z : ν(z) > v}`
    pub fn open(group: ValueGroup, v: Value) -> Result<Self> {
        group.check(&v)?;
        Ok(match v {
            Value::Lex(mut c) => {
                *c.last_mut().unwrap() += 1;
                lex_from_prefix(group, c)
            }
            v => q_from(group, v, true),
        })
    }

    /// `{z : ν(z)[..|q|] ≥ q}` over `ℤ^k` with `|q| < k`.
    pub fn limit(group: ValueGroup, prefix: Vec<i64>) -> Result<Self> {
        match group {
            ValueGroup::ZLex(k) if !prefix.is_empty() && prefix.len() < k => Ok(lex_from_prefix(group, prefix)),
            _ => Err(Error::InvalidArgument(format!(
                "limit cut with prefix length {} not available in {group}",
                prefix.len()
            ))),
        }
    }

    pub fn principal(group: ValueGroup, z: &ValElement) -> Result<Self> {
        match z {
            ValElement::Inf => Ok(Self::zero(group)),
            ValElement::Val(v) => Self::closed(group, v.clone()),
        }
    }

    /// The prime `P_j = {ν : ν[..j] > 0}` of `ℤ^k`, `1 ≤ j ≤ k`. `P_k` is
    /// the maximal ideal.
    pub fn lex_prime(group: ValueGroup, j: usize) -> Result<Self> {
        let ValueGroup::ZLex(k) = group else {
            return Err(Error::GroupMismatch(group.to_string(), "Zlex".into()));
        };
        if j == 0 || j > k {
            return Err(Error::InvalidArgument(format!("no prime P_{j} in {group}")));
        }
        let mut p = vec![0; j];
        p[j - 1] = 1;
        Ok(lex_from_prefix(group, p))
    }

    pub fn maximal(group: ValueGroup) -> Self {
        match group {
            ValueGroup::ZLex(k) => Self::lex_prime(group, k).unwrap(),
            ValueGroup::Q => q_from(group, group.zero(), true),
        }
    }

    pub fn group(&self) -> ValueGroup {
        self.group
    }

    pub fn shape(&self) -> &CutShape {
        &self.shape
    }

    pub fn is_zero(&self) -> bool {
        self.shape == CutShape::Zero
    }

    pub fn is_unit(&self) -> bool {
        self.shape == CutShape::Unit
    }

    fn check_group(&self, other: &CutIdeal) -> Result<()> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(self.group.to_string(), other.group.to_string()));
        }
        Ok(())
    }

    /// Finite prefix of the extended threshold over `ℤ^k`; `None` for zero.
    fn prefix(&self) -> Option<Vec<i64>> {
        let ValueGroup::ZLex(k) = self.group else {
            unreachable!()
        };
        match &self.shape {
            CutShape::Zero => None,
            CutShape::Unit => Some(vec![0; k]),
            CutShape::Closed(Value::Lex(c)) => Some(c.clone()),
            CutShape::Limit(p) => Some(p.clone()),
            s => unreachable!("{s:?} over {}", self.group),
        }
    }

    /// `(threshold, open)` over `ℚ`; `None` for zero.
    fn q_key(&self) -> Option<(Value, bool)> {
        match &self.shape {
            CutShape::Zero => None,
            CutShape::Unit => Some((self.group.zero(), false)),
            CutShape::Closed(v) => Some((v.clone(), false)),
            CutShape::Open(v) => Some((v.clone(), true)),
            CutShape::Limit(_) => unreachable!(),
        }
    }

    /// Orders cuts by size: `Greater` means `self` is the smaller ideal.
    pub fn height_cmp(&self, other: &CutIdeal) -> Ordering {
        assert_eq!(self.group, other.group, "cut group mismatch");
        match (self.is_zero(), other.is_zero()) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Greater,
            (false, true) => return Ordering::Less,
            _ => {}
        }
        match self.group {
            ValueGroup::ZLex(k) => {
                let ext = |p: Vec<i64>| -> Vec<Option<i64>> {
                    let mut e: Vec<Option<i64>> = p.into_iter().map(Some).collect();
                    e.resize(k, None);
                    e
                };
                ext(self.prefix().unwrap()).cmp(&ext(other.prefix().unwrap()))
            }
            ValueGroup::Q => {
                let (a, oa) = self.q_key().unwrap();
                let (b, ob) = other.q_key().unwrap();
                a.partial_cmp(&b).unwrap().then(oa.cmp(&ob))
            }
        }
    }

    /// `self ⊆ other`
    pub fn is_subset(&self, other: &CutIdeal) -> bool {
        self.height_cmp(other) != Ordering::Less
    }

    pub fn member(&self, z: &ValElement) -> Result<bool> {
        let Some(v) = z.value() else {
            return Ok(true);
        };
        self.group.check(v)?;
        Ok(match (&self.shape, v) {
            (CutShape::Zero, _) => false,
            (CutShape::Unit, v) => !v.is_negative(),
            (CutShape::Closed(t), v) => v >= t,
            (CutShape::Open(t), v) => v > t,
            (CutShape::Limit(p), Value::Lex(c)) => c[..p.len()] >= p[..],
            _ => unreachable!(),
        })
    }

    pub fn intersect(&self, other: &CutIdeal) -> Result<CutIdeal> {
        self.check_group(other)?;
        Ok(if self.is_subset(other) {
            self.clone()
        } else {
            other.clone()
        })
    }

    pub fn sum(&self, other: &CutIdeal) -> Result<CutIdeal> {
        self.check_group(other)?;
        Ok(if self.is_subset(other) {
            other.clone()
        } else {
            self.clone()
        })
    }

    pub fn product(&self, other: &CutIdeal) -> Result<CutIdeal> {
        self.check_group(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.group));
        }
        Ok(match self.group {
            ValueGroup::ZLex(_) => {
                let (a, b) = (self.prefix().unwrap(), other.prefix().unwrap());
                let n = a.len().min(b.len());
                lex_from_prefix(self.group, a[..n].iter().zip(&b[..n]).map(|(x, y)| x + y).collect())
            }
            ValueGroup::Q => {
                let (a, oa) = self.q_key().unwrap();
                let (b, ob) = other.q_key().unwrap();
                q_from(self.group, a.add(&b), oa || ob)
            }
        })
    }

    /// `(self : other) = {z : z·other ⊆ self}`.
    pub fn quotient(&self, other: &CutIdeal) -> Result<CutIdeal> {
        self.check_group(other)?;
        if other.is_zero() || self.is_unit() {
            return Ok(Self::unit(self.group));
        }
        if self.is_zero() {
            return Ok(Self::zero(self.group));
        }
        Ok(match self.group {
            ValueGroup::ZLex(_) => {
                let (p, q) = (self.prefix().unwrap(), other.prefix().unwrap());
                let (i, j) = (p.len(), q.len());
                if i <= j {
                    lex_from_prefix(self.group, sub_prefix(&p, &q[..i]))
                } else {
                    // the divisor's free tail can push products arbitrarily low
                    let mut r = sub_prefix(&p[..j], &q);
                    r[j - 1] += 1;
                    lex_from_prefix(self.group, r)
                }
            }
            ValueGroup::Q => {
                let (a, oa) = self.q_key().unwrap();
                let (b, ob) = other.q_key().unwrap();
                q_from(self.group, a.sub(&b), oa && !ob)
            }
        })
    }

    /// `(self : z)` for a single ring element.
    pub fn quotient_by(&self, z: &ValElement) -> Result<CutIdeal> {
        self.quotient(&Self::principal(self.group, z)?)
    }

    pub fn radical(&self) -> CutIdeal {
        match (&self.shape, self.group) {
            (CutShape::Zero | CutShape::Unit, _) => self.clone(),
            (_, ValueGroup::Q) => Self::maximal(self.group),
            (_, ValueGroup::ZLex(_)) => {
                let p = self.prefix().unwrap();
                let f = p
                    .iter()
                    .position(|x| *x != 0)
                    .expect("proper cut has a positive coordinate");
                Self::lex_prime(self.group, f + 1).unwrap()
            }
        }
    }

    pub fn is_prime(&self) -> bool {
        !self.is_unit() && (self.is_zero() || self.radical() == *self)
    }

    /// Prime and primary classification. Over `ℚ` every proper nonzero cut
    /// is primary for the maximal ideal; over `ℤ^k` a cut is primary iff
    /// the first nonzero coordinate of its threshold is its last finite one.
    pub fn classify(&self) -> CutClass {
        match &self.shape {
            CutShape::Zero => return CutClass::Zero,
            CutShape::Unit => return CutClass::Unit,
            _ => {}
        }
        let radical = self.radical();
        if radical == *self {
            return CutClass::Prime;
        }
        let primary = match self.group {
            ValueGroup::Q => true,
            ValueGroup::ZLex(_) => {
                let p = self.prefix().unwrap();
                p.iter().position(|x| *x != 0) == Some(p.len() - 1)
            }
        };
        if primary {
            CutClass::Primary { prime: radical }
        } else {
            CutClass::Neither { radical }
        }
    }

    /// A deterministic window of cuts around the origin, used for sampled
    /// certificates.
    pub fn sample_window(group: ValueGroup) -> Vec<CutIdeal> {
        let mut out = vec![Self::zero(group), Self::unit(group)];
        match group {
            ValueGroup::ZLex(k) => {
                for len in 1..=k.min(3) {
                    for prefix in prefixes(len, -2, 3) {
                        out.push(lex_from_prefix(group, prefix));
                    }
                }
                for i in 0..k {
                    for m in 1..=3 {
                        let mut c = vec![0; k];
                        c[i] = m;
                        out.push(lex_from_prefix(group, c));
                    }
                }
            }
            ValueGroup::Q => {
                for m in -2..=12 {
                    let v = group.rat(m, 4).unwrap();
                    out.push(Self::closed(group, v.clone()).unwrap());
                    out.push(Self::open(group, v).unwrap());
                }
            }
        }
        out.sort_by(|a, b| a.height_cmp(b));
        out.dedup();
        out
    }

    /// Indecomposability of `self`: among sampled cuts strictly containing
    /// it, every pairwise intersection is one of the pair and never `self`.
    pub fn indecomposable(&self) -> Result<IndecomposabilityCertificate> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let bigger: Vec<CutIdeal> = Self::sample_window(self.group)
            .into_iter()
            .filter(|c| self.is_subset(c) && c != self)
            .take(40)
            .collect();
        let mut ok = true;
        let mut pairs = 0;
        let mut examples = Vec::new();
        for (a, j) in bigger.iter().enumerate() {
            for k in &bigger[a + 1..] {
                let cap = j.intersect(k)?;
                pairs += 1;
                ok &= (cap == *j || cap == *k) && cap != *self;
                if examples.len() < 3 {
                    examples.push((j.clone(), k.clone(), cap));
                }
            }
        }
        Ok(IndecomposabilityCertificate {
            indecomposable: ok,
            pairs_checked: pairs,
            examples,
        })
    }

    /// Parses `(0)`, `(1)`, `cut>=(v)`, `cut>(v)`; over `ℤ^k` a value may
    /// end in `-inf` coordinates to denote a limit cut.
    pub fn parse(group: ValueGroup, text: &str) -> Result<CutIdeal> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        match t.as_str() {
            "(0)" => return Ok(Self::zero(group)),
            "(1)" => return Ok(Self::unit(group)),
            _ => {}
        }
        let (open, rest) = if let Some(r) = t.strip_prefix("cut>=") {
            (false, r)
        } else if let Some(r) = t.strip_prefix("cut>") {
            (true, r)
        } else {
            return Err(Error::Syntax {
                pos: 0,
                msg: format!("expected a cut literal, found `{text}`"),
            });
        };
        let inner = rest.strip_prefix('(').and_then(|s| s.strip_suffix(')')).unwrap_or(rest);
        if let (ValueGroup::ZLex(k), true) = (group, inner.contains("-inf")) {
            let body = inner.trim_start_matches('(').trim_end_matches(')');
            let parts: Vec<&str> = body.split(',').collect();
            let fin = parts.iter().take_while(|p| **p != "-inf").count();
            if parts.len() != k || parts[fin..].iter().any(|p| *p != "-inf") || open {
                return Err(Error::Syntax {
                    pos: 0,
                    msg: format!("bad limit cut `{text}`"),
                });
            }
            let prefix = parts[..fin]
                .iter()
                .map(|p| p.parse::<i64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::Syntax {
                    pos: 0,
                    msg: format!("bad limit cut `{text}`"),
                })?;
            return Self::limit(group, prefix);
        }
        let v = group.parse_value(inner)?;
        if open {
            Self::open(group, v)
        } else {
            Self::closed(group, v)
        }
    }
}

/// All integer vectors of length `len` with entries in `lo..=hi`.
fn prefixes(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|p| {
                (lo..=hi).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

impl fmt::Display for CutIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.shape, self.group) {
            (CutShape::Zero, _) => write!(f, "(0)"),
            (CutShape::Unit, _) => write!(f, "(1)"),
            (CutShape::Closed(v), _) => write!(f, "cut>=({v})"),
            (CutShape::Open(v), _) => write!(f, "cut>({v})"),
            (CutShape::Limit(p), ValueGroup::ZLex(k)) => {
                let mut parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                parts.resize(k, "-inf".into());
                write!(f, "cut>=(({}))", parts.join(","))
            }
            (CutShape::Limit(_), _) => unreachable!(),
        }
    }
}

impl Serialize for CutIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
