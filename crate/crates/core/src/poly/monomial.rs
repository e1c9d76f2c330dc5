use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use super::Var;

/// A power product with finite support.
///
/// Stored as `(variable, exponent)` pairs sorted by variable, with no zero
/// exponents, so structural equality is monomial equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    exps: Vec<(Var, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn var(v: Var) -> Self {
        Monomial { exps: vec![(v, 1)] }
    }

    pub fn pow(v: Var, e: u32) -> Self {
        if e == 0 {
            Self::one()
        } else {
            Monomial { exps: vec![(v, e)] }
        }
    }

    pub fn from_exponents<I: IntoIterator<Item = (Var, u32)>>(it: I) -> Self {
        let mut exps: Vec<(Var, u32)> = Vec::new();
        let mut raw: Vec<(Var, u32)> = it.into_iter().collect();
        raw.sort_by_key(|&(v, _)| v);
        for (v, e) in raw {
            match exps.last_mut() {
                Some((w, f)) if *w == v => *f += e,
                _ => exps.push((v, e)),
            }
        }
        exps.retain(|&(_, e)| e > 0);
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponents(&self) -> &[(Var, u32)] {
        &self.exps
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.exps
            .binary_search_by_key(&v, |&(w, _)| w)
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn support(&self) -> impl Iterator<Item = Var> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }

    pub fn support_set(&self) -> BTreeSet<Var> {
        self.support().collect()
    }

    /// True when at least two distinct variables occur.
    pub fn is_mixed(&self) -> bool {
        self.exps.len() >= 2
    }

    fn merge(&self, other: &Self, f: impl Fn(u32, u32) -> u32) -> Self {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() || j < other.exps.len() {
            let (v, a, b) = match (self.exps.get(i), other.exps.get(j)) {
                (Some(&(v, a)), Some(&(w, b))) if v == w => {
                    i += 1;
                    j += 1;
                    (v, a, b)
                }
                (Some(&(v, a)), Some(&(w, _))) if v < w => {
                    i += 1;
                    (v, a, 0)
                }
                (Some(&(v, a)), None) => {
                    i += 1;
                    (v, a, 0)
                }
                (_, Some(&(w, b))) => {
                    j += 1;
                    (w, 0, b)
                }
                (None, None) => unreachable!(),
            };
            let e = f(a, b);
            if e > 0 {
                out.push((v, e));
            }
        }
        Monomial { exps: out }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.merge(other, |a, b| a + b)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        self.merge(other, u32::max)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        self.merge(other, u32::min)
    }

    pub fn divides(&self, other: &Self) -> bool {
        let mut j = 0;
        for &(v, e) in &self.exps {
            while j < other.exps.len() && other.exps[j].0 < v {
                j += 1;
            }
            match other.exps.get(j) {
                Some(&(w, f)) if w == v && f >= e => {}
                _ => return false,
            }
        }
        true
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        if other.divides(self) {
            Some(self.merge(other, |a, b| a - b))
        } else {
            None
        }
    }

    /// `self / gcd(self, other)`, the generator of `(self) : other`.
    pub fn quotient_by(&self, other: &Self) -> Self {
        self.merge(other, |a, b| a.saturating_sub(b))
    }

    pub fn coprime(&self, other: &Self) -> bool {
        self.gcd(other).is_one()
    }

    /// Product of the variables in the support.
    pub fn squarefree_part(&self) -> Self {
        Monomial {
            exps: self.exps.iter().map(|&(v, _)| (v, 1)).collect(),
        }
    }

    /// Drop variable `v` entirely (sets its exponent to zero).
    pub fn without(&self, v: Var) -> Self {
        Monomial {
            exps: self.exps.iter().copied().filter(|&(w, _)| w != v).collect(),
        }
    }

    pub fn restrict<F: Fn(Var) -> bool>(&self, keep: F) -> Self {
        Monomial {
            exps: self.exps.iter().copied().filter(|&(w, _)| keep(w)).collect(),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        for (k, &(v, e)) in self.exps.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
