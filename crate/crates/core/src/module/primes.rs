use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::groebner::PolyIdeal;
use crate::ideal::MonomialIdeal;
use crate::valuation::CutIdeal;

/// A prime ideal of one of the supported backends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Prime {
    Monomial(MonomialIdeal),
    /// A polynomial prime certified by the caller (e.g. linear forms).
    Poly(PolyIdeal),
    Cut(CutIdeal),
    /// `(p)` in `ℤ`; `0` stands for the zero ideal.
    Integer(u64),
}

impl Prime {
    pub fn as_monomial(&self) -> Option<&MonomialIdeal> {
        match self {
            Prime::Monomial(m) => Some(m),
            _ => None,
        }
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Prime::Monomial(m) => write!(f, "{m}"),
            Prime::Poly(p) => write!(f, "{p}"),
            Prime::Cut(c) => write!(f, "{c}"),
            Prime::Integer(p) => write!(f, "({p})"),
        }
    }
}

impl Serialize for Prime {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Ass0Witness,
    Ass1MinimalOver,
    DecompositionPrime,
    SuppMembership,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Ass0Witness => "ass0-witness",
            Provenance::Ass1MinimalOver => "ass1-minimal-over",
            Provenance::DecompositionPrime => "decomposition-prime",
            Provenance::SuppMembership => "supp-membership",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeEntry {
    pub prime: Prime,
    pub provenance: Provenance,
}

/// A finite set of primes with provenance. `complete` is false when the
/// set came from a search that is sound but not known to be exhaustive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeSet {
    pub entries: Vec<PrimeEntry>,
    pub complete: bool,
}

impl PrimeSet {
    pub fn new(complete: bool) -> Self {
        PrimeSet {
            entries: vec![],
            complete,
        }
    }

    pub fn from_primes<I: IntoIterator<Item = Prime>>(primes: I, provenance: Provenance, complete: bool) -> Self {
        let mut s = PrimeSet::new(complete);
        for p in primes {
            s.insert(p, provenance);
        }
        s
    }

    pub fn insert(&mut self, prime: Prime, provenance: Provenance) {
        if !self.contains(&prime) {
            self.entries.push(PrimeEntry { prime, provenance });
        }
    }

    pub fn contains(&self, p: &Prime) -> bool {
        self.entries.iter().any(|e| &e.prime == p)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn primes(&self) -> impl Iterator<Item = &Prime> {
        self.entries.iter().map(|e| &e.prime)
    }

    /// Monomial members as an ordered set (for exact comparisons).
    pub fn monomial_primes(&self) -> BTreeSet<MonomialIdeal> {
        self.primes().filter_map(|p| p.as_monomial().cloned()).collect()
    }

    /// Same primes, regardless of provenance and order.
    pub fn same_primes(&self, other: &PrimeSet) -> bool {
        self.len() == other.len() && self.primes().all(|p| other.contains(p))
    }

    pub fn is_subset(&self, other: &PrimeSet) -> bool {
        self.primes().all(|p| other.contains(p))
    }

    pub(crate) fn sort_monomial(&mut self) {
        self.entries.sort_by(|a, b| match (&a.prime, &b.prime) {
            (Prime::Monomial(x), Prime::Monomial(y)) => x.cmp(y),
            _ => std::cmp::Ordering::Equal,
        });
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{} [{}]", e.prime, e.provenance)?;
        }
        write!(f, "}}")?;
        if !self.complete {
            write!(f, " (incomplete search)")?;
        }
        Ok(())
    }
}
