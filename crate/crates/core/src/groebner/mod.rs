//! Gröbner bases, normal forms, ideal membership and elimination.

mod buchberger;
mod dense;

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Domain, Monomial, Polynomial, Scalar, TermOrder, Var};
use dense::Layout;

pub const DEFAULT_PAIR_BUDGET: usize = 50_000;

/// An ideal given by generators. Zero generators are dropped on construction.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PolyIdeal {
    #[serde(skip)]
    domain: Domain,
    generators: Vec<Polynomial>,
}

impl PolyIdeal {
    pub fn new(domain: Domain, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if g.domain() != domain {
                return Err(Error::DomainMismatch(domain.to_string(), g.domain().to_string()));
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(PolyIdeal { domain, generators })
    }

    /// Infers the domain from the first generator (defaults to ℚ).
    pub fn from_generators(generators: Vec<Polynomial>) -> Result<Self> {
        let d = generators.first().map(|g| g.domain()).unwrap_or_default();
        Self::new(d, generators)
    }

    pub fn zero(domain: Domain) -> Self {
        PolyIdeal {
            domain,
            generators: vec![],
        }
    }

    pub fn unit(domain: Domain) -> Self {
        PolyIdeal {
            domain,
            generators: vec![Polynomial::one(domain)],
        }
    }

    pub fn principal(f: Polynomial) -> Self {
        let d = f.domain();
        PolyIdeal::new(d, vec![f]).expect("single generator")
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.generators.iter().flat_map(|g| g.vars()).collect()
    }

    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(|g| g.as_monomial().is_some())
    }

    pub fn monomial_generators(&self) -> Option<Vec<Monomial>> {
        self.generators.iter().map(|g| g.as_monomial().cloned()).collect()
    }
}

impl fmt::Display for PolyIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

/// Reduced, monic Gröbner basis, elements sorted by leading monomial
/// (largest first).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroebnerBasis {
    domain: Domain,
    order: TermOrder,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn is_zero(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial(&self.order).unwrap().clone())
            .collect()
    }

    /// Remainder of `p` on full reduction by the basis.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        if p.is_zero() || self.elements.is_empty() {
            return p.clone();
        }
        let layout = Layout::new(self.elements.iter().chain([p]), &self.order);
        let basis: Vec<_> = self.elements.iter().map(|g| layout.to_dense(g)).collect();
        let r = dense::reduce(&layout, self.domain, &layout.to_dense(p), &basis);
        layout.to_sparse(self.domain, &r)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn to_ideal(&self) -> PolyIdeal {
        PolyIdeal {
            domain: self.domain,
            generators: self.elements.clone(),
        }
    }
}

type CacheKey = (Domain, TermOrder, Vec<Vec<(Monomial, Scalar)>>);

/// Memo table from (domain, order, generator set) to reduced basis.
#[derive(Default, Debug)]
pub struct BasisCache {
    map: Mutex<HashMap<CacheKey, GroebnerBasis>>,
}

impl BasisCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn key(domain: Domain, order: &TermOrder, gens: &[Polynomial]) -> CacheKey {
        let mut k: Vec<Vec<(Monomial, Scalar)>> = gens
            .iter()
            .map(|g| g.terms().map(|(m, c)| (m.clone(), c.clone())).collect())
            .collect();
        k.sort();
        k.dedup();
        (domain, order.clone(), k)
    }
}

/// Configuration shared by every computation: the term order, the
/// pair-reduction budget, and an optional basis cache.
#[derive(Clone, Debug)]
pub struct Engine {
    order: TermOrder,
    pair_budget: usize,
    cache: Option<Arc<BasisCache>>,
}

impl Default for Engine {
    fn default() -> Self {
        Engine {
            order: TermOrder::Grevlex,
            pair_budget: DEFAULT_PAIR_BUDGET,
            cache: Some(Arc::new(BasisCache::new())),
        }
    }
}

impl Engine {
    pub fn new(order: TermOrder, pair_budget: usize, cache: bool) -> Self {
        Engine {
            order,
            pair_budget,
            cache: cache.then(|| Arc::new(BasisCache::new())),
        }
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn pair_budget(&self) -> usize {
        self.pair_budget
    }

    pub fn cache(&self) -> Option<&BasisCache> {
        self.cache.as_deref()
    }

    pub fn with_order(&self, order: TermOrder) -> Self {
        Engine { order, ..self.clone() }
    }

    pub fn with_budget(&self, pair_budget: usize) -> Self {
        Engine {
            pair_budget,
            ..self.clone()
        }
    }

    pub fn basis(&self, ideal: &PolyIdeal) -> Result<GroebnerBasis> {
        self.basis_in(ideal, &self.order)
    }

    pub fn basis_in(&self, ideal: &PolyIdeal, order: &TermOrder) -> Result<GroebnerBasis> {
        let key = self
            .cache
            .as_ref()
            .map(|_| BasisCache::key(ideal.domain, order, &ideal.generators));
        if let (Some(c), Some(k)) = (&self.cache, &key) {
            if let Some(hit) = c.map.lock().unwrap().get(k) {
                return Ok(hit.clone());
            }
        }
        let gb = self.compute(ideal, order)?;
        if let (Some(c), Some(k)) = (&self.cache, key) {
            c.map.lock().unwrap().insert(k, gb.clone());
        }
        Ok(gb)
    }

    fn compute(&self, ideal: &PolyIdeal, order: &TermOrder) -> Result<GroebnerBasis> {
        let d = ideal.domain;
        let layout = Layout::new(ideal.generators.iter(), order);
        let gens = ideal.generators.iter().map(|g| layout.to_dense(g)).collect();
        let mut dense = buchberger::groebner(&layout, d, gens, self.pair_budget)?;
        dense.reverse();
        Ok(GroebnerBasis {
            domain: d,
            order: order.clone(),
            elements: dense.iter().map(|g| layout.to_sparse(d, g)).collect(),
        })
    }

    pub fn normal_form(&self, p: &Polynomial, ideal: &PolyIdeal) -> Result<Polynomial> {
        Ok(self.basis(ideal)?.normal_form(p))
    }

    pub fn ideal_member(&self, p: &Polynomial, ideal: &PolyIdeal) -> Result<bool> {
        if p.is_zero() {
            return Ok(true);
        }
        Ok(self.basis(ideal)?.contains(p))
    }

    /// `inner ⊆ outer`
    pub fn contains(&self, outer: &PolyIdeal, inner: &PolyIdeal) -> Result<bool> {
        let gb = self.basis(outer)?;
        Ok(inner.generators.iter().all(|g| gb.contains(g)))
    }

    pub fn ideal_eq(&self, a: &PolyIdeal, b: &PolyIdeal) -> Result<bool> {
        if a.domain != b.domain {
            return Ok(false);
        }
        Ok(self.basis(a)?.elements == self.basis(b)?.elements)
    }

    pub fn is_unit(&self, ideal: &PolyIdeal) -> Result<bool> {
        Ok(self.basis(ideal)?.is_unit())
    }

    /// `I ∩ k[remaining variables]`.
    pub fn eliminate(&self, ideal: &PolyIdeal, drop: &BTreeSet<Var>) -> Result<PolyIdeal> {
        if drop.is_empty() {
            return Ok(ideal.clone());
        }
        let gb = self.basis_in(ideal, &TermOrder::Elimination(drop.clone()))?;
        let kept = gb.elements.into_iter().filter(|g| g.vars().is_disjoint(drop)).collect();
        PolyIdeal::new(ideal.domain, kept)
    }

    /// Generators re-expressed as the reduced basis in the engine order.
    pub fn canonical(&self, ideal: &PolyIdeal) -> Result<PolyIdeal> {
        Ok(self.basis(ideal)?.to_ideal())
    }
}
