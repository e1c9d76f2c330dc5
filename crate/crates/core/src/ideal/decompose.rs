//! Primary decomposition of monomial ideals and reduction to normal
//! (irredundant, distinct-prime) form, with re-checkable certificates.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::MonomialIdeal;
use crate::error::{Error, Result};
use crate::poly::{Monomial, TermOrder, Var};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimaryComponent {
    pub component: MonomialIdeal,
    pub prime: MonomialIdeal,
}

impl PrimaryComponent {
    /// Fails unless `component` is primary.
    pub fn new(component: MonomialIdeal) -> Result<Self> {
        let prime = component
            .is_primary()
            .ok_or_else(|| Error::InvalidArgument(format!("{component} is not primary")))?;
        Ok(PrimaryComponent { component, prime })
    }
}

/// Evidence that a component is primary for its prime: a pure power of
/// every prime variable among the generators, and no other variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimaryEvidence {
    pub pure_powers: Vec<Monomial>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentCertificate {
    pub primary: PrimaryEvidence,
    /// A monomial in the intersection of the other components but not in
    /// this one (`1` when there are no others).
    pub irredundancy_witness: Option<Monomial>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub input: MonomialIdeal,
    pub components: Vec<PrimaryComponent>,
    pub normalized: bool,
    /// Every input generator lies in every component, and every generator
    /// of the intersection lies in the input.
    pub intersection_certified: bool,
    pub certificates: Vec<ComponentCertificate>,
}

impl DecompositionReport {
    /// Re-check every certificate from scratch.
    pub fn verify(&self) -> bool {
        let cap = MonomialIdeal::intersect_all(self.components.iter().map(|c| &c.component));
        let eq = self.input.contains_ideal(&cap) && cap.contains_ideal(&self.input);
        if !eq || eq != self.intersection_certified {
            return false;
        }
        for (c, cert) in self.components.iter().zip(&self.certificates) {
            if c.component.is_primary().as_ref() != Some(&c.prime) {
                return false;
            }
            let evid_ok = c.prime.gens().iter().all(|v| {
                let v = v.exponents()[0].0;
                cert.primary
                    .pure_powers
                    .iter()
                    .any(|m| m.support().eq([v]) && c.component.gens().contains(m))
            });
            if !evid_ok {
                return false;
            }
        }
        if !self.normalized {
            return true;
        }
        let mut primes: Vec<&MonomialIdeal> = self.components.iter().map(|c| &c.prime).collect();
        primes.sort();
        primes.dedup();
        if primes.len() != self.components.len() {
            return false;
        }
        self.components.iter().enumerate().all(|(i, c)| {
            let Some(w) = &self.certificates[i].irredundancy_witness else {
                return false;
            };
            !c.component.contains(w)
                && self
                    .components
                    .iter()
                    .enumerate()
                    .all(|(j, o)| j == i || o.component.contains(w))
        })
    }

    pub fn primes(&self) -> Vec<MonomialIdeal> {
        self.components.iter().map(|c| c.prime.clone()).collect()
    }

    /// `(x) ∩ (x^2, y)`
    pub fn render(&self) -> String {
        if self.components.is_empty() {
            return "(1)".into();
        }
        self.components
            .iter()
            .map(|c| c.component.to_string())
            .collect::<Vec<_>>()
            .join(" ∩ ")
    }
}

/// How the splitting recursion picks its pivot.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitStrategy {
    /// Smallest mixed generator (grevlex), split on its smallest variable.
    Deterministic,
    /// Random mixed generator and variable from a seeded stream.
    Seeded(u64),
}

/// Raw primary components from the splitting recursion, before
/// normalization.
pub fn split_primary(i: &MonomialIdeal, strategy: SplitStrategy) -> Result<Vec<PrimaryComponent>> {
    if i.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let mut rng = match strategy {
        SplitStrategy::Seeded(s) => Some(ChaCha8Rng::seed_from_u64(s)),
        SplitStrategy::Deterministic => None,
    };
    let mut out = Vec::new();
    let mut stack = vec![i.clone()];
    while let Some(cur) = stack.pop() {
        if let Some(prime) = cur.is_primary() {
            out.push(PrimaryComponent { component: cur, prime });
            continue;
        }
        let mixed: Vec<&Monomial> = cur.gens().iter().filter(|g| g.exponents().len() > 1).collect();
        let (m, v): (&Monomial, Var) = match rng.as_mut() {
            None => {
                let m = *mixed
                    .iter()
                    .min_by(|a, b| TermOrder::Grevlex.cmp(a, b))
                    .expect("non-primary monomial ideal has a mixed generator");
                (m, m.exponents().last().unwrap().0)
            }
            Some(r) => {
                let m = mixed[r.gen_range(0..mixed.len())];
                let k = r.gen_range(0..m.exponents().len());
                (m, m.exponents()[k].0)
            }
        };
        let u = Monomial::pow(v, m.exponent(v));
        let w = m.quotient_by(&u);
        stack.push(cur.sum(&MonomialIdeal::new([w])));
        stack.push(cur.sum(&MonomialIdeal::new([u])));
    }
    Ok(out)
}

/// Normal primary decomposition with certificates.
pub fn primary_decompose_monomial(i: &MonomialIdeal) -> Result<DecompositionReport> {
    primary_decompose_with(i, SplitStrategy::Deterministic)
}

pub fn primary_decompose_with(i: &MonomialIdeal, strategy: SplitStrategy) -> Result<DecompositionReport> {
    let raw = split_primary(i, strategy)?;
    normalize_decomposition(raw, i)
}

fn component_order(a: &PrimaryComponent, b: &PrimaryComponent) -> std::cmp::Ordering {
    a.prime.cmp(&b.prime).then_with(|| a.component.cmp(&b.component))
}

/// Greedily drop components that contain the intersection of the rest
/// (scanning in sorted order), merge components with equal primes, then
/// drop again.
pub fn normalize_decomposition(
    components: Vec<PrimaryComponent>,
    ambient: &MonomialIdeal,
) -> Result<DecompositionReport> {
    for c in &components {
        if c.component.is_primary().as_ref() != Some(&c.prime) {
            return Err(Error::InvalidArgument(format!(
                "{} is not primary for {}",
                c.component, c.prime
            )));
        }
    }
    let cap = MonomialIdeal::intersect_all(components.iter().map(|c| &c.component));
    if components.is_empty() || cap != *ambient {
        return Err(Error::IntersectionMismatch);
    }

    let mut comps = components;
    comps.sort_by(component_order);
    drop_redundant(&mut comps);

    let mut by_prime: BTreeMap<MonomialIdeal, MonomialIdeal> = BTreeMap::new();
    for c in comps {
        by_prime
            .entry(c.prime)
            .and_modify(|acc| *acc = acc.intersect(&c.component))
            .or_insert(c.component);
    }
    let mut comps: Vec<PrimaryComponent> = by_prime
        .into_iter()
        .map(|(prime, component)| PrimaryComponent { component, prime })
        .collect();
    comps.sort_by(component_order);
    drop_redundant(&mut comps);
    Ok(certify(ambient, comps, true))
}

fn drop_redundant(comps: &mut Vec<PrimaryComponent>) {
    let mut idx = 0;
    while idx < comps.len() {
        let rest = MonomialIdeal::intersect_all(
            comps
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != idx)
                .map(|(_, c)| &c.component),
        );
        if comps.len() > 1 && comps[idx].component.contains_ideal(&rest) {
            comps.remove(idx);
        } else {
            idx += 1;
        }
    }
}

fn certify(input: &MonomialIdeal, components: Vec<PrimaryComponent>, normalized: bool) -> DecompositionReport {
    let cap = MonomialIdeal::intersect_all(components.iter().map(|c| &c.component));
    let intersection_certified = input.contains_ideal(&cap) && cap.contains_ideal(input);
    let certificates = (0..components.len())
        .map(|i| {
            let c = &components[i];
            let pure_powers = c
                .prime
                .gens()
                .iter()
                .filter_map(|v| c.component.pure_power(v.exponents()[0].0).cloned())
                .collect();
            let rest = MonomialIdeal::intersect_all(
                components
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, o)| &o.component),
            );
            let mut witnesses: Vec<&Monomial> = rest.gens().iter().filter(|m| !c.component.contains(m)).collect();
            witnesses.sort_by(|a, b| TermOrder::Grevlex.cmp(a, b));
            ComponentCertificate {
                primary: PrimaryEvidence { pure_powers },
                irredundancy_witness: witnesses.first().map(|m| (*m).clone()),
            }
        })
        .collect();
    DecompositionReport {
        input: input.clone(),
        components,
        normalized,
        intersection_certified,
        certificates,
    }
}
