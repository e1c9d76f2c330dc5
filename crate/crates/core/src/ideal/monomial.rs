use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::groebner::PolyIdeal;
use crate::poly::{Domain, Monomial, Polynomial, TermOrder, Var};

/// An ideal generated by monomials, stored as its unique minimal generating
/// set sorted from largest to smallest in lex.
///
/// The zero ideal has no generators; the unit ideal is `(1)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out.sort_by(|a, b| TermOrder::Lex.cmp(b, a));
    out
}

impl MonomialIdeal {
    pub fn new<I: IntoIterator<Item = Monomial>>(gens: I) -> Self {
        MonomialIdeal {
            gens: minimalize(gens.into_iter().collect()),
        }
    }

    pub fn zero() -> Self {
        MonomialIdeal { gens: vec![] }
    }

    pub fn unit() -> Self {
        MonomialIdeal {
            gens: vec![Monomial::one()],
        }
    }

    /// The prime ideal generated by a set of variables.
    pub fn prime<I: IntoIterator<Item = Var>>(vars: I) -> Self {
        Self::new(vars.into_iter().map(Monomial::var))
    }

    /// `Some` iff every generator is a monomial (possibly after scaling).
    pub fn from_poly_ideal(ideal: &PolyIdeal) -> Option<Self> {
        ideal
            .generators()
            .iter()
            .map(|g| (g.len() == 1).then(|| g.terms().next().unwrap().0.clone()))
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }

    pub fn to_poly_ideal(&self, domain: Domain) -> PolyIdeal {
        PolyIdeal::new(
            domain,
            self.gens
                .iter()
                .map(|m| Polynomial::monomial(domain, m.clone()))
                .collect(),
        )
        .expect("monomials share the domain")
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.gens.iter().flat_map(|m| m.support()).collect()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Polynomial membership: every term must lie in the ideal.
    pub fn contains_poly(&self, p: &Polynomial) -> bool {
        p.monomials().all(|m| self.contains(m))
    }

    /// `other ⊆ self`
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|m| self.contains(m))
    }

    /// Generated by variables only.
    pub fn is_prime(&self) -> bool {
        !self.is_unit() && self.gens.iter().all(|m| m.degree() == 1)
    }

    pub fn sum(&self, other: &Self) -> Self {
        Self::new(self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn product(&self, other: &Self) -> Self {
        Self::new(self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a.mul(b))))
    }

    pub fn intersect(&self, other: &Self) -> Self {
        Self::new(self.gens.iter().flat_map(|a| other.gens.iter().map(move |b| a.lcm(b))))
    }

    pub fn intersect_all<'a, I: IntoIterator<Item = &'a MonomialIdeal>>(ideals: I) -> Self {
        ideals.into_iter().fold(Self::unit(), |acc, i| acc.intersect(i))
    }

    /// `(I : m)`
    pub fn quotient_monomial(&self, m: &Monomial) -> Self {
        Self::new(self.gens.iter().map(|g| g.quotient_by(&g.gcd(m))))
    }

    /// `(I : J)`; `(I : 0)` is the unit ideal.
    pub fn quotient(&self, j: &Self) -> Self {
        j.gens
            .iter()
            .fold(Self::unit(), |acc, m| acc.intersect(&self.quotient_monomial(m)))
    }

    /// `(I : (prod vars)^∞)`: erase the given variables from every generator.
    pub fn saturate_vars(&self, vars: &BTreeSet<Var>) -> Self {
        Self::new(self.gens.iter().map(|g| g.restrict(|v| !vars.contains(&v))))
    }

    pub fn saturate_monomial(&self, m: &Monomial) -> Self {
        self.saturate_vars(&m.support_set())
    }

    pub fn radical(&self) -> Self {
        Self::new(self.gens.iter().map(|g| g.squarefree_part()))
    }

    /// Minimal primes as minimal vertex covers of the generator supports,
    /// sorted by (size, generators).
    pub fn minimal_primes(&self) -> Vec<MonomialIdeal> {
        if self.is_unit() {
            return vec![];
        }
        let edges: Vec<BTreeSet<Var>> = self.radical().gens.iter().map(|g| g.support_set()).collect();
        let mut covers: Vec<BTreeSet<Var>> = Vec::new();
        fn search(edges: &[BTreeSet<Var>], chosen: &mut BTreeSet<Var>, out: &mut Vec<BTreeSet<Var>>) {
            if out.iter().any(|c| c.is_subset(chosen)) {
                return;
            }
            match edges.iter().find(|e| e.is_disjoint(chosen)) {
                None => {
                    out.retain(|c| !chosen.is_subset(c));
                    out.push(chosen.clone());
                }
                Some(e) => {
                    for &v in e {
                        chosen.insert(v);
                        search(edges, chosen, out);
                        chosen.remove(&v);
                    }
                }
            }
        }
        search(&edges, &mut BTreeSet::new(), &mut covers);
        let mut primes: Vec<MonomialIdeal> = covers.into_iter().map(Self::prime).collect();
        primes.sort();
        primes
    }

    /// `Some(rad I)` iff `I` is primary: every variable that occurs in a
    /// minimal generator also has a pure power among them.
    pub fn is_primary(&self) -> Option<MonomialIdeal> {
        if self.is_unit() {
            return None;
        }
        let pure: BTreeSet<Var> = self
            .gens
            .iter()
            .filter(|g| g.exponents().len() == 1)
            .map(|g| g.exponents()[0].0)
            .collect();
        let vars = self.vars();
        (vars == pure).then(|| Self::prime(vars))
    }

    /// The pure power of `v` among the generators, if any.
    pub fn pure_power(&self, v: Var) -> Option<&Monomial> {
        self.gens
            .iter()
            .find(|g| g.exponents().len() == 1 && g.exponents()[0].0 == v)
    }

    /// Largest exponent of `v` in any generator.
    pub fn max_exponent(&self, v: Var) -> u32 {
        self.gens.iter().map(|g| g.exponent(v)).max().unwrap_or(0)
    }
}

impl Ord for MonomialIdeal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.gens.len().cmp(&other.gens.len()).then_with(|| {
            for (a, b) in self.gens.iter().zip(&other.gens) {
                let c = TermOrder::Lex.cmp(b, a);
                if c != Ordering::Equal {
                    return c;
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for MonomialIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
