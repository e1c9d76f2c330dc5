//! Dense-exponent working representation used inside Buchberger and
//! normal-form computations. Keys are order-specific integer vectors that
//! are additive under monomial multiplication, so shifting a polynomial by a
//! monomial never reorders its terms.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::Zero;

use crate::poly::{Domain, Monomial, Polynomial, Scalar, TermOrder, Var};

#[derive(Clone, Debug)]
pub(crate) struct Layout {
    pub vars: Vec<Var>,
    pub order: TermOrder,
}

impl Layout {
    pub fn new<'a, I: IntoIterator<Item = &'a Polynomial>>(polys: I, order: &TermOrder) -> Self {
        let mut vars = BTreeSet::new();
        for p in polys {
            vars.extend(p.vars());
        }
        Layout {
            vars: vars.into_iter().collect(),
            order: order.clone(),
        }
    }

    fn exps_of(&self, m: &Monomial) -> Vec<u32> {
        let mut e = vec![0; self.vars.len()];
        for &(v, k) in m.exponents() {
            let i = self.vars.binary_search(&v).expect("variable missing from layout");
            e[i] = k;
        }
        e
    }

    pub fn term(&self, m: &Monomial, c: Scalar) -> Term {
        let exps = self.exps_of(m);
        let key = self.order.dense_key(&self.vars, &exps);
        Term { exps, key, coeff: c }
    }

    pub fn to_dense(&self, p: &Polynomial) -> DPoly {
        let mut terms: Vec<Term> = p.terms().map(|(m, c)| self.term(m, c.clone())).collect();
        terms.sort_by(|a, b| a.key.cmp(&b.key));
        DPoly { terms }
    }

    pub fn monomial(&self, exps: &[u32]) -> Monomial {
        Monomial::from_exponents(self.vars.iter().copied().zip(exps.iter().copied()))
    }

    pub fn to_sparse(&self, domain: Domain, p: &DPoly) -> Polynomial {
        Polynomial::from_terms(
            domain,
            p.terms.iter().map(|t| (self.monomial(&t.exps), t.coeff.clone())),
        )
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Term {
    pub exps: Vec<u32>,
    pub key: Vec<i64>,
    pub coeff: Scalar,
}

impl Term {
    pub fn divides(&self, other: &Term) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }
}

pub(crate) fn exps_lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub(crate) fn exps_coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

pub(crate) fn exps_divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Terms sorted ascending by key; the leading term is last.
#[derive(Clone, Debug, Default)]
pub(crate) struct DPoly {
    pub terms: Vec<Term>,
}

impl DPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&Term> {
        self.terms.last()
    }

    /// `self - c * x^shift * g`
    pub fn sub_scaled(&self, d: Domain, c: &Scalar, shift: &[u32], shift_key: &[i64], g: &DPoly) -> DPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|t| {
            let exps: Vec<u32> = t.exps.iter().zip(shift).map(|(x, y)| x + y).collect();
            let key: Vec<i64> = t.key.iter().zip(shift_key).map(|(x, y)| x + y).collect();
            Term {
                exps,
                key,
                coeff: d.neg(&d.mul(c, &t.coeff)),
            }
        });
        let mut nb = b.next();
        loop {
            match (a.peek(), nb.as_ref()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => {
                    out.push(nb.take().unwrap());
                    nb = b.next();
                }
                (Some(ta), Some(tb)) => match ta.key.cmp(&tb.key) {
                    Ordering::Less => out.push(a.next().unwrap().clone()),
                    Ordering::Greater => {
                        out.push(nb.take().unwrap());
                        nb = b.next();
                    }
                    Ordering::Equal => {
                        let s = d.add(&ta.coeff, &tb.coeff);
                        if !s.is_zero() {
                            let mut t = a.next().unwrap().clone();
                            t.coeff = s;
                            out.push(t);
                        } else {
                            a.next();
                        }
                        nb = b.next();
                    }
                },
            }
        }
        DPoly { terms: out }
    }

    pub fn scale(&self, d: Domain, c: &Scalar) -> DPoly {
        DPoly {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    exps: t.exps.clone(),
                    key: t.key.clone(),
                    coeff: d.mul(&t.coeff, c),
                })
                .collect(),
        }
    }

    pub fn monic(&self, d: Domain) -> DPoly {
        match self.lead() {
            Some(t) => self.scale(d, &d.inv(&t.coeff)),
            None => self.clone(),
        }
    }
}

/// Fully reduce `f` modulo `basis` (every term, not just the head).
pub(crate) fn reduce(layout: &Layout, d: Domain, f: &DPoly, basis: &[DPoly]) -> DPoly {
    let mut p = f.clone();
    let mut rem: Vec<Term> = Vec::new();
    while let Some(lt) = p.terms.last().cloned() {
        let divisor = basis.iter().find(|g| g.lead().is_some_and(|gl| gl.divides(&lt)));
        match divisor {
            Some(g) => {
                let gl = g.lead().unwrap();
                let shift: Vec<u32> = lt.exps.iter().zip(&gl.exps).map(|(a, b)| a - b).collect();
                let shift_key = layout.order.dense_key(&layout.vars, &shift);
                let c = d.mul(&lt.coeff, &d.inv(&gl.coeff));
                p = p.sub_scaled(d, &c, &shift, &shift_key, g);
            }
            None => {
                rem.push(p.terms.pop().unwrap());
            }
        }
    }
    rem.reverse();
    DPoly { terms: rem }
}
