//! Finitely generated modules over the supported backends and their
//! associated primes, support and radicals.

mod cyclic;
mod int;
mod primes;

pub(crate) use cyclic::monomials_up_to;
pub use cyclic::{coset_scan, AnnWitness, AssMembership, CyclicSum, GeneratorWitness, ModElement, Submodule};
pub use int::{first_primes, is_prime, prime_factors, IntElem, IntModule};
pub use primes::{Prime, PrimeEntry, PrimeSet, Provenance};

use crate::error::{Error, Result};
use crate::groebner::Engine;
use crate::valuation::ValModule;

/// A module with its backend.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FgModule {
    Poly(CyclicSum),
    Val(ValModule),
    Int(IntModule),
}

fn cut_set(cuts: Vec<crate::valuation::CutIdeal>, provenance: Provenance) -> PrimeSet {
    PrimeSet::from_primes(cuts.into_iter().map(Prime::Cut), provenance, true)
}

impl FgModule {
    pub fn is_zero_module(&self) -> bool {
        match self {
            FgModule::Poly(m) => m.is_zero_module(),
            FgModule::Val(m) => m.is_zero_module(),
            FgModule::Int(m) => m.is_zero_module(),
        }
    }

    pub fn ass0(&self, engine: &Engine) -> Result<PrimeSet> {
        match self {
            FgModule::Poly(m) => m.ass0(engine),
            FgModule::Val(m) => Ok(cut_set(m.ass0()?, Provenance::Ass0Witness)),
            FgModule::Int(m) => m.ass0(),
        }
    }

    pub fn ass1(&self, engine: &Engine) -> Result<PrimeSet> {
        match self {
            FgModule::Poly(m) => m.ass1(engine),
            FgModule::Val(m) => Ok(cut_set(m.ass1()?, Provenance::Ass1MinimalOver)),
            FgModule::Int(m) => {
                let mut s = m.ass0()?;
                for e in &mut s.entries {
                    e.provenance = Provenance::Ass1MinimalOver;
                }
                Ok(s)
            }
        }
    }

    pub fn ass(&self, engine: &Engine) -> Result<PrimeSet> {
        match self {
            FgModule::Poly(m) => m.ass(engine),
            FgModule::Val(m) => Ok(cut_set(m.ass()?, Provenance::DecompositionPrime)),
            FgModule::Int(m) => {
                let mut s = m.ass0()?;
                for e in &mut s.entries {
                    e.provenance = Provenance::DecompositionPrime;
                }
                Ok(s)
            }
        }
    }

    pub fn is_coprimary(&self, engine: &Engine) -> Result<Option<Prime>> {
        if self.is_zero_module() {
            return Err(Error::ZeroModule);
        }
        match self {
            FgModule::Poly(m) => m.is_coprimary(engine),
            FgModule::Val(m) => Ok(m.is_coprimary()?.map(Prime::Cut)),
            FgModule::Int(_) => {
                let a = self.ass(engine)?;
                Ok((a.len() == 1).then(|| a.entries[0].prime.clone()))
            }
        }
    }

    pub fn supp_contains(&self, engine: &Engine, p: &Prime) -> Result<bool> {
        match (self, p) {
            (FgModule::Poly(m), Prime::Monomial(q)) => m.supp_contains(engine, &q.to_poly_ideal(m.domain())),
            (FgModule::Poly(m), Prime::Poly(q)) => m.supp_contains(engine, q),
            // M_P ≠ 0 iff Ann(M) ⊆ P for these cyclic-like modules
            (FgModule::Val(m), Prime::Cut(q)) => Ok(!m.is_zero_module() && m.annihilator().is_subset(q)),
            (FgModule::Int(m), Prime::Integer(q)) => Ok(m.supp_contains(*q)),
            _ => Err(Error::InvalidArgument(format!("{p} does not live on this backend"))),
        }
    }
}
