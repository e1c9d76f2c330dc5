//! Ideal arithmetic on polynomial ideals through Gröbner bases, with
//! monomial shortcuts where both operands are monomial.

use std::collections::BTreeSet;

use super::MonomialIdeal;
use crate::error::{Error, Result};
use crate::groebner::{Engine, PolyIdeal};
use crate::poly::{Monomial, Polynomial, Var};

fn check_domains(a: &PolyIdeal, b: &PolyIdeal) -> Result<()> {
    if a.domain() != b.domain() {
        return Err(Error::DomainMismatch(a.domain().to_string(), b.domain().to_string()));
    }
    Ok(())
}

fn aux() -> Var {
    Var::auxiliary("t")
}

fn both_monomial(a: &PolyIdeal, b: &PolyIdeal) -> Option<(MonomialIdeal, MonomialIdeal)> {
    Some((MonomialIdeal::from_poly_ideal(a)?, MonomialIdeal::from_poly_ideal(b)?))
}

pub fn sum(a: &PolyIdeal, b: &PolyIdeal) -> Result<PolyIdeal> {
    check_domains(a, b)?;
    PolyIdeal::new(
        a.domain(),
        a.generators().iter().chain(b.generators()).cloned().collect(),
    )
}

pub fn product(a: &PolyIdeal, b: &PolyIdeal) -> Result<PolyIdeal> {
    check_domains(a, b)?;
    let gens = a
        .generators()
        .iter()
        .flat_map(|f| b.generators().iter().map(move |g| f * g))
        .collect();
    PolyIdeal::new(a.domain(), gens)
}

/// `I ∩ J` by eliminating `t` from `t·I + (1 − t)·J`.
pub fn intersect(engine: &Engine, a: &PolyIdeal, b: &PolyIdeal) -> Result<PolyIdeal> {
    check_domains(a, b)?;
    if let Some((ma, mb)) = both_monomial(a, b) {
        return Ok(ma.intersect(&mb).to_poly_ideal(a.domain()));
    }
    intersect_general(engine, a, b)
}

/// Intersection that always goes through elimination.
pub fn intersect_general(engine: &Engine, a: &PolyIdeal, b: &PolyIdeal) -> Result<PolyIdeal> {
    check_domains(a, b)?;
    let d = a.domain();
    if a.generators().is_empty() || b.generators().is_empty() {
        return Ok(PolyIdeal::zero(d));
    }
    let t = Polynomial::var(d, aux());
    let one_minus_t = &Polynomial::one(d) - &t;
    let gens = a
        .generators()
        .iter()
        .map(|f| &t * f)
        .chain(b.generators().iter().map(|g| &one_minus_t * g))
        .collect();
    let drop: BTreeSet<Var> = [aux()].into_iter().collect();
    let r = engine.eliminate(&PolyIdeal::new(d, gens)?, &drop)?;
    engine.canonical(&r)
}

pub fn intersect_all(engine: &Engine, ideals: &[PolyIdeal]) -> Result<PolyIdeal> {
    let Some(first) = ideals.first() else {
        return Err(Error::InvalidArgument("empty intersection".into()));
    };
    ideals[1..]
        .iter()
        .try_fold(first.clone(), |acc, i| intersect(engine, &acc, i))
}

/// `(I : f)` as `(I ∩ (f)) / f`.
pub fn quotient_by(engine: &Engine, i: &PolyIdeal, f: &Polynomial) -> Result<PolyIdeal> {
    let d = i.domain();
    if f.is_zero() {
        return Ok(PolyIdeal::unit(d));
    }
    if f.domain() != d {
        return Err(Error::DomainMismatch(d.to_string(), f.domain().to_string()));
    }
    if let (Some(mi), Some(m)) = (MonomialIdeal::from_poly_ideal(i), f.as_monomial()) {
        return Ok(mi.quotient_monomial(m).to_poly_ideal(d));
    }
    let cap = intersect_general(engine, i, &PolyIdeal::principal(f.clone()))?;
    let gens = cap
        .generators()
        .iter()
        .map(|g| {
            g.exact_div(f, engine.order())
                .expect("generators of I ∩ (f) are multiples of f")
        })
        .collect();
    engine.canonical(&PolyIdeal::new(d, gens)?)
}

/// `(I : J) = ∩_{f ∈ gens J} (I : f)`; `(I : 0)` is the unit ideal.
pub fn ideal_quotient(engine: &Engine, i: &PolyIdeal, j: &PolyIdeal) -> Result<PolyIdeal> {
    check_domains(i, j)?;
    if let Some((mi, mj)) = both_monomial(i, j) {
        return Ok(mi.quotient(&mj).to_poly_ideal(i.domain()));
    }
    let mut acc = PolyIdeal::unit(i.domain());
    for f in j.generators() {
        acc = intersect(engine, &acc, &quotient_by(engine, i, f)?)?;
    }
    Ok(acc)
}

/// `(I : f^∞)` by Rabinowitsch: eliminate `t` from `I + (t·f − 1)`.
pub fn saturate(engine: &Engine, i: &PolyIdeal, f: &Polynomial) -> Result<PolyIdeal> {
    let d = i.domain();
    if f.is_zero() {
        return Err(Error::InvalidArgument("cannot saturate by zero".into()));
    }
    if f.domain() != d {
        return Err(Error::DomainMismatch(d.to_string(), f.domain().to_string()));
    }
    if f.is_constant() {
        return engine.canonical(i);
    }
    let t = Polynomial::var(d, aux());
    let mut gens = i.generators().to_vec();
    gens.push(&(&t * f) - &Polynomial::one(d));
    let drop: BTreeSet<Var> = [aux()].into_iter().collect();
    let r = engine.eliminate(&PolyIdeal::new(d, gens)?, &drop)?;
    engine.canonical(&r)
}

/// `f ∈ rad(I)` iff `1 ∈ I + (t·f − 1)`.
pub fn in_radical(engine: &Engine, f: &Polynomial, i: &PolyIdeal) -> Result<bool> {
    let d = i.domain();
    if f.is_zero() {
        return Ok(true);
    }
    let t = Polynomial::var(d, aux());
    let mut gens = i.generators().to_vec();
    gens.push(&(&t * f) - &Polynomial::one(d));
    engine.is_unit(&PolyIdeal::new(d, gens)?)
}

/// Whether `f` lies in the prime generated by `vars`.
pub fn in_monomial_prime(f: &Polynomial, vars: &BTreeSet<Var>) -> bool {
    f.monomials().all(|m| m.support().any(|v| vars.contains(&v)))
}

/// Product of the given variables.
pub fn var_product(vars: &BTreeSet<Var>) -> Monomial {
    Monomial::from_exponents(vars.iter().map(|&v| (v, 1)))
}
