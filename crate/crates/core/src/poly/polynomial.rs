use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::{Domain, Monomial, Scalar, TermOrder, Var};
use crate::error::{Error, Result};

/// Sparse multivariate polynomial with exact coefficients.
///
/// Terms are keyed structurally; the active [`TermOrder`] only matters for
/// leading terms and for printing.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    domain: Domain,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(domain: Domain) -> Self {
        Polynomial {
            domain,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(domain: Domain) -> Self {
        Self::constant(domain, Scalar::one())
    }

    pub fn constant(domain: Domain, c: Scalar) -> Self {
        Self::term(domain, Monomial::one(), c)
    }

    pub fn term(domain: Domain, m: Monomial, c: Scalar) -> Self {
        let c = domain.normalize(c).expect("coefficient representable in domain");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { domain, terms }
    }

    pub fn monomial(domain: Domain, m: Monomial) -> Self {
        Self::term(domain, m, Scalar::one())
    }

    pub fn var(domain: Domain, v: Var) -> Self {
        Self::monomial(domain, Monomial::var(v))
    }

    /// Build from `(monomial, coefficient)` pairs, combining duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(domain: Domain, it: I) -> Self {
        let mut p = Self::zero(domain);
        for (m, c) in it {
            let c = domain.normalize(c).expect("coefficient representable in domain");
            p.add_term(m, &c);
        }
        p
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&Monomial::one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// Nonzero constant, hence a unit.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.is_constant()
    }

    /// The monomial, when the polynomial is a single term.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        if self.terms.len() == 1 {
            self.terms.keys().next()
        } else {
            None
        }
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.support()).collect()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn leading_monomial(&self, order: &TermOrder) -> Option<&Monomial> {
        self.terms.keys().reduce(|a, b| order.max(a, b))
    }

    pub fn leading_term(&self, order: &TermOrder) -> Option<(&Monomial, &Scalar)> {
        let m = self.leading_monomial(order)?;
        Some((m, &self.terms[m]))
    }

    /// Terms in descending `order`.
    pub fn sorted_terms(&self, order: &TermOrder) -> Vec<(&Monomial, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let d = self.domain;
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = d.add(e.get(), c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    fn check_domain(&self, other: &Self) -> Result<()> {
        if self.domain != other.domain {
            return Err(Error::DomainMismatch(self.domain.to_string(), other.domain.to_string()));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_domain(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_domain(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &self.domain.neg(c));
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_domain(other)?;
        let d = self.domain;
        let mut out = Self::zero(d);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), &d.mul(c1, c2));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.domain);
        }
        let d = self.domain;
        Polynomial {
            domain: d,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), d.mul(a, c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            domain: self.domain,
            terms: self.terms.iter().map(|(n, c)| (n.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.domain);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self, order: &TermOrder) -> Self {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(&self.domain.inv(c)),
            None => self.clone(),
        }
    }

    /// Multivariate division by a single divisor: `self = q * divisor + r`
    /// where no term of `r` is divisible by the leading monomial of `divisor`.
    pub fn div_rem(&self, divisor: &Self, order: &TermOrder) -> (Self, Self) {
        let d = self.domain;
        let (lm, lc) = divisor
            .leading_term(order)
            .map(|(m, c)| (m.clone(), c.clone()))
            .expect("division by zero polynomial");
        let lc_inv = d.inv(&lc);
        let mut q = Self::zero(d);
        let mut r = Self::zero(d);
        let mut p = self.clone();
        while let Some((m, c)) = p.leading_term(order).map(|(m, c)| (m.clone(), c.clone())) {
            if let Some(t) = m.checked_div(&lm) {
                let coef = d.mul(&c, &lc_inv);
                q.add_term(t.clone(), &coef);
                let sub = divisor.mul_monomial(&t).scale(&coef);
                p = &p - &sub;
            } else {
                p.terms.remove(&m);
                r.add_term(m, &c);
            }
        }
        (q, r)
    }

    /// Exact quotient when `divisor` divides `self`.
    pub fn exact_div(&self, divisor: &Self, order: &TermOrder) -> Option<Self> {
        let (q, r) = self.div_rem(divisor, order);
        r.is_zero().then_some(q)
    }

    /// Keep only the terms whose monomials satisfy `keep`.
    pub fn filter_terms<F: Fn(&Monomial) -> bool>(&self, keep: F) -> Self {
        Polynomial {
            domain: self.domain,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Canonical rendering with terms in descending `order`.
    pub fn display_with(&self, order: &TermOrder) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let d = self.domain;
        let mut s = String::new();
        for (k, (m, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let neg = d.is_negative(c);
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&d.render(&abs));
            } else if abs.is_one() {
                s.push_str(&m.to_string());
            } else {
                s.push_str(&d.render(&abs));
                s.push('*');
                s.push_str(&m.to_string());
            }
        }
        s
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&TermOrder::Grevlex))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

// Operator forms panic on a domain mismatch; use the `checked_*` methods
// when operands come from untrusted input.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("domain mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("domain mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("domain mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&self.domain.neg(&Scalar::one()))
    }
}
