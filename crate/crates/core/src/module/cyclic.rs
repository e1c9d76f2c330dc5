//! Direct sums of cyclic modules `M = R/I_1 ⊕ … ⊕ R/I_k` over a polynomial
//! ring.
//!
//! Associated primes of a monomial summand `R/I` are found by scanning the
//! cosets of monomials `m` with `deg_v(m) ≤ max deg_v(gens I)` for every
//! variable `v`. This is complete: `(I : m)` only depends on the capped
//! exponents `min(deg_v m, max deg_v)`, and every associated prime of a
//! monomial ideal is the annihilator of a monomial coset.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::{Prime, PrimeSet, Provenance};
use crate::error::{Error, Result};
use crate::groebner::{Engine, PolyIdeal};
use crate::ideal::{self, primary_decompose_monomial, MonomialIdeal};
use crate::poly::{Domain, Monomial, Polynomial, Var};

/// How much structure a summand ideal exposes.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Kind {
    Monomial(MonomialIdeal),
    /// Generated by polynomials of degree ≤ 1, hence prime.
    Linear,
    General,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Summand {
    ideal: PolyIdeal,
    kind: Kind,
}

fn classify(ideal: &PolyIdeal) -> Kind {
    if let Some(m) = MonomialIdeal::from_poly_ideal(ideal) {
        Kind::Monomial(m)
    } else if ideal.generators().iter().all(|g| g.total_degree().unwrap_or(0) <= 1) {
        Kind::Linear
    } else {
        Kind::General
    }
}

/// A certified prime from a canonical ideal, when its primality is visible.
fn prime_of(ideal: &PolyIdeal) -> Option<Prime> {
    match classify(ideal) {
        Kind::Monomial(m) if m.is_prime() && !m.is_unit() => Some(Prime::Monomial(m)),
        Kind::Linear if !ideal.generators().iter().any(|g| g.is_constant()) => Some(Prime::Poly(ideal.clone())),
        _ => None,
    }
}

/// `⊕ R/I_i`. Unit summands are dropped at construction, so indices refer
/// to the surviving summands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicSum {
    domain: Domain,
    summands: Vec<Summand>,
}

/// `Σ ξ_i·e_i`, each `ξ_i` in normal form modulo `I_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ModElement {
    pub components: Vec<Polynomial>,
}

impl ModElement {
    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }
}

impl fmt::Display for ModElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c})*e{}", i + 1))
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl Serialize for CyclicSum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A submodule `⊕ J_i/I_i` given by one ideal per summand (`J_i` is
/// replaced by `J_i + I_i`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Submodule {
    pub parts: Vec<PolyIdeal>,
}

impl Submodule {
    pub fn zero(m: &CyclicSum) -> Self {
        Submodule {
            parts: m.summands.iter().map(|s| s.ideal.clone()).collect(),
        }
    }

    pub fn whole(m: &CyclicSum) -> Self {
        Submodule {
            parts: vec![PolyIdeal::unit(m.domain); m.len()],
        }
    }
}

/// `x` lies outside the complement-of-`𝔭` component of `0` (`Ann(x) ⊆ 𝔭`),
/// and `s·g^ν·x = 0` for the generator `g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorWitness {
    pub generator: Polynomial,
    pub element: ModElement,
    pub multiplier: Polynomial,
    pub power: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum AssMembership {
    /// One element `y` with `Ann(y) ⊆ 𝔭` killed by a power of every
    /// generator: `𝔭` is minimal over `Ann(y)`.
    Certified {
        element: ModElement,
        generators: Vec<GeneratorWitness>,
    },
    /// Each generator is a zero divisor after localizing at `𝔭`, but with
    /// different elements. Not a proof for elements outside the generators.
    GeneratorsOnly {
        generators: Vec<GeneratorWitness>,
    },
    Refuted {
        reason: String,
    },
}

/// An element whose annihilator is a given prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnnWitness {
    pub summand: usize,
    pub coset: Monomial,
    pub annihilator: Prime,
}

/// Monomials whose cosets are scanned for `R/I`: exponent of each variable
/// of `I` in `0..=max_exponent + slack`.
pub fn coset_scan(i: &MonomialIdeal, slack: u32) -> Vec<Monomial> {
    let vars: Vec<Var> = i.vars().into_iter().collect();
    let mut out = vec![Monomial::one()];
    for v in vars {
        let top = i.max_exponent(v) + slack;
        out = out
            .into_iter()
            .flat_map(|m| (0..=top).map(move |e| m.mul(&Monomial::pow(v, e))))
            .collect();
    }
    out.retain(|m| !i.contains(m));
    out
}

/// Every monomial of total degree ≤ `d` in `vars`.
pub(crate) fn monomials_up_to(vars: &BTreeSet<Var>, d: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one()];
    for &v in vars {
        out = out
            .into_iter()
            .flat_map(|m| {
                let room = d - m.degree();
                (0..=room).map(move |e| m.mul(&Monomial::pow(v, e)))
            })
            .collect();
    }
    out
}

impl CyclicSum {
    pub fn new(engine: &Engine, domain: Domain, ideals: Vec<PolyIdeal>) -> Result<Self> {
        let mut summands = Vec::new();
        for i in ideals {
            if i.domain() != domain {
                return Err(Error::DomainMismatch(domain.to_string(), i.domain().to_string()));
            }
            let ideal = engine.canonical(&i)?;
            let kind = classify(&ideal);
            if matches!(&kind, Kind::Monomial(m) if m.is_unit()) {
                continue;
            }
            summands.push(Summand { ideal, kind });
        }
        Ok(CyclicSum { domain, summands })
    }

    pub fn from_monomial(domain: Domain, ideals: Vec<MonomialIdeal>) -> Self {
        CyclicSum {
            domain,
            summands: ideals
                .into_iter()
                .filter(|m| !m.is_unit())
                .map(|m| Summand {
                    ideal: m.to_poly_ideal(domain),
                    kind: Kind::Monomial(m),
                })
                .collect(),
        }
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// `M = 0`
    pub fn is_zero_module(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn summand_ideals(&self) -> Vec<&PolyIdeal> {
        self.summands.iter().map(|s| &s.ideal).collect()
    }

    pub fn is_monomial(&self) -> bool {
        self.summands.iter().all(|s| matches!(s.kind, Kind::Monomial(_)))
    }

    pub fn monomial_summands(&self) -> Option<Vec<&MonomialIdeal>> {
        self.summands
            .iter()
            .map(|s| match &s.kind {
                Kind::Monomial(m) => Some(m),
                _ => None,
            })
            .collect()
    }

    /// `M ⊕ L`
    pub fn direct_sum(&self, other: &CyclicSum) -> Result<CyclicSum> {
        if self.domain != other.domain {
            return Err(Error::DomainMismatch(self.domain.to_string(), other.domain.to_string()));
        }
        let mut summands = self.summands.clone();
        summands.extend(other.summands.iter().cloned());
        Ok(CyclicSum {
            domain: self.domain,
            summands,
        })
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.summands.iter().flat_map(|s| s.ideal.vars()).collect()
    }

    pub fn element(&self, engine: &Engine, components: Vec<Polynomial>) -> Result<ModElement> {
        if components.len() != self.len() {
            return Err(Error::InvalidArgument(format!(
                "element has {} components, module has {} summands",
                components.len(),
                self.len()
            )));
        }
        let components = components
            .iter()
            .zip(&self.summands)
            .map(|(c, s)| engine.normal_form(c, &s.ideal))
            .collect::<Result<_>>()?;
        Ok(ModElement { components })
    }

    /// `c·e_i`
    pub fn single(&self, engine: &Engine, i: usize, c: Polynomial) -> Result<ModElement> {
        let mut comps = vec![Polynomial::zero(self.domain); self.len()];
        *comps
            .get_mut(i)
            .ok_or_else(|| Error::InvalidArgument(format!("no summand {}", i + 1)))? = c;
        self.element(engine, comps)
    }

    pub fn generator(&self, engine: &Engine, i: usize) -> Result<ModElement> {
        self.single(engine, i, Polynomial::one(self.domain))
    }

    /// `r·x`
    pub fn act(&self, engine: &Engine, r: &Polynomial, x: &ModElement) -> Result<ModElement> {
        self.element(engine, x.components.iter().map(|c| r * c).collect())
    }

    /// `Ann(x) = ∩ (I_i : ξ_i)`; the unit ideal for `x = 0`.
    pub fn annihilator(&self, engine: &Engine, x: &ModElement) -> Result<PolyIdeal> {
        let mut acc = PolyIdeal::unit(self.domain);
        for (c, s) in x.components.iter().zip(&self.summands) {
            if !c.is_zero() {
                let q = ideal::quotient_by(engine, &s.ideal, c)?;
                acc = ideal::intersect(engine, &acc, &q)?;
            }
        }
        engine.canonical(&acc)
    }

    /// `Ann(M) = ∩ I_i`
    pub fn annihilator_module(&self, engine: &Engine) -> Result<PolyIdeal> {
        let mut acc = PolyIdeal::unit(self.domain);
        for s in &self.summands {
            acc = ideal::intersect(engine, &acc, &s.ideal)?;
        }
        engine.canonical(&acc)
    }

    fn check_submodule(&self, n: &Submodule) -> Result<()> {
        if n.parts.len() != self.len() {
            return Err(Error::InvalidArgument(format!(
                "submodule has {} parts, module has {} summands",
                n.parts.len(),
                self.len()
            )));
        }
        Ok(())
    }

    /// `(N : U) = ∩_{u ∈ U} ∩_i ((J_i + I_i) : u_i)`
    pub fn colon(&self, engine: &Engine, n: &Submodule, u: &[ModElement]) -> Result<PolyIdeal> {
        self.check_submodule(n)?;
        let mut acc = PolyIdeal::unit(self.domain);
        for x in u {
            for ((c, s), j) in x.components.iter().zip(&self.summands).zip(&n.parts) {
                if c.is_zero() {
                    continue;
                }
                let big = ideal::sum(j, &s.ideal)?;
                acc = ideal::intersect(engine, &acc, &ideal::quotient_by(engine, &big, c)?)?;
            }
        }
        engine.canonical(&acc)
    }

    /// `M/N = ⊕ R/(I_i + J_i)`
    pub fn quotient_module(&self, engine: &Engine, n: &Submodule) -> Result<CyclicSum> {
        self.check_submodule(n)?;
        let ideals = self
            .summands
            .iter()
            .zip(&n.parts)
            .map(|(s, j)| ideal::sum(&s.ideal, j))
            .collect::<Result<_>>()?;
        CyclicSum::new(engine, self.domain, ideals)
    }

    /// `Some(x)` with `x ≠ 0` and `r·x = 0`, taken from a basis element of
    /// `(I_i : r)` outside `I_i`.
    pub fn is_zero_divisor(&self, engine: &Engine, r: &Polynomial) -> Result<Option<ModElement>> {
        if self.is_zero_module() {
            return Ok(None);
        }
        if r.is_zero() {
            return self.generator(engine, 0).map(Some);
        }
        for (i, s) in self.summands.iter().enumerate() {
            let q = ideal::quotient_by(engine, &s.ideal, r)?;
            let gb = engine.basis(&s.ideal)?;
            if let Some(g) = engine.basis(&q)?.elements().iter().find(|g| !gb.contains(g)) {
                return self.single(engine, i, g.clone()).map(Some);
            }
        }
        Ok(None)
    }

    /// `r ∈ rad(I_i)` for every summand.
    pub fn is_nilpotent_for(&self, engine: &Engine, r: &Polynomial) -> Result<bool> {
        for s in &self.summands {
            let ok = match &s.kind {
                Kind::Monomial(m) => {
                    let rad = m.radical();
                    r.monomials().all(|t| rad.contains(t))
                }
                _ => ideal::in_radical(engine, r, &s.ideal)?,
            };
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Monomial cosets whose annihilator is prime (exhaustive for monomial
    /// summands).
    pub fn ass0_witnesses(&self) -> Result<Vec<AnnWitness>> {
        let mut out = Vec::new();
        for (idx, s) in self.summands.iter().enumerate() {
            let Kind::Monomial(i) = &s.kind else {
                return Err(Error::Unsupported(
                    "exhaustive coset scan needs monomial summands".into(),
                ));
            };
            for m in coset_scan(i, 0) {
                let ann = i.quotient_monomial(&m);
                if ann.is_prime() {
                    out.push(AnnWitness {
                        summand: idx,
                        coset: m,
                        annihilator: Prime::Monomial(ann),
                    });
                }
            }
        }
        Ok(out)
    }

    /// Candidate annihilators for a non-monomial summand: cosets of
    /// monomials up to the top degree of its reduced basis.
    fn general_annihilators(&self, engine: &Engine, s: &Summand) -> Result<Vec<(Monomial, PolyIdeal)>> {
        let top = s
            .ideal
            .generators()
            .iter()
            .filter_map(|g| g.total_degree())
            .max()
            .unwrap_or(0);
        let gb = engine.basis(&s.ideal)?;
        let mut out = Vec::new();
        for m in monomials_up_to(&s.ideal.vars(), top) {
            let p = Polynomial::monomial(self.domain, m.clone());
            if gb.contains(&p) {
                continue;
            }
            out.push((m, ideal::quotient_by(engine, &s.ideal, &p)?));
        }
        Ok(out)
    }

    pub fn ass0(&self, engine: &Engine) -> Result<PrimeSet> {
        let mut set = PrimeSet::new(true);
        for s in &self.summands {
            match &s.kind {
                Kind::Monomial(i) => {
                    for m in coset_scan(i, 0) {
                        let ann = i.quotient_monomial(&m);
                        if ann.is_prime() {
                            set.insert(Prime::Monomial(ann), Provenance::Ass0Witness);
                        }
                    }
                }
                Kind::Linear => set.insert(prime_of(&s.ideal).unwrap(), Provenance::Ass0Witness),
                Kind::General => {
                    set.complete = false;
                    for (_, ann) in self.general_annihilators(engine, s)? {
                        if let Some(p) = prime_of(&ann) {
                            set.insert(p, Provenance::Ass0Witness);
                        }
                    }
                }
            }
        }
        set.sort_monomial();
        Ok(set)
    }

    pub fn ass1(&self, engine: &Engine) -> Result<PrimeSet> {
        let mut set = PrimeSet::new(true);
        for s in &self.summands {
            match &s.kind {
                Kind::Monomial(i) => {
                    for m in coset_scan(i, 0) {
                        for p in i.quotient_monomial(&m).minimal_primes() {
                            set.insert(Prime::Monomial(p), Provenance::Ass1MinimalOver);
                        }
                    }
                }
                Kind::Linear => set.insert(prime_of(&s.ideal).unwrap(), Provenance::Ass1MinimalOver),
                Kind::General => {
                    set.complete = false;
                    for (_, ann) in self.general_annihilators(engine, s)? {
                        match classify(&ann) {
                            Kind::Monomial(a) => {
                                for p in a.minimal_primes() {
                                    set.insert(Prime::Monomial(p), Provenance::Ass1MinimalOver);
                                }
                            }
                            Kind::Linear => {
                                if let Some(p) = prime_of(&ann) {
                                    set.insert(p, Provenance::Ass1MinimalOver);
                                }
                            }
                            Kind::General => {}
                        }
                    }
                }
            }
        }
        set.sort_monomial();
        Ok(set)
    }

    /// Primes of a normal decomposition of `(0)`, summand by summand.
    pub fn ass(&self, _engine: &Engine) -> Result<PrimeSet> {
        let mut set = PrimeSet::new(true);
        for s in &self.summands {
            match &s.kind {
                Kind::Monomial(i) => {
                    for p in primary_decompose_monomial(i)?.primes() {
                        set.insert(Prime::Monomial(p), Provenance::DecompositionPrime);
                    }
                }
                Kind::Linear => set.insert(prime_of(&s.ideal).unwrap(), Provenance::DecompositionPrime),
                Kind::General => {
                    return Err(Error::Unsupported(format!(
                        "no primary decomposition available for {}",
                        s.ideal
                    )))
                }
            }
        }
        set.sort_monomial();
        Ok(set)
    }

    /// `Some(𝔭)` iff `Ass(M) = {𝔭}`.
    pub fn is_coprimary(&self, engine: &Engine) -> Result<Option<Prime>> {
        if self.is_zero_module() {
            return Err(Error::ZeroModule);
        }
        let ass = self.ass(engine)?;
        Ok((ass.len() == 1).then(|| ass.entries[0].prime.clone()))
    }

    /// `M_𝔭 ≠ 0` iff some `I_i ⊆ 𝔭`.
    pub fn supp_contains(&self, engine: &Engine, p: &PolyIdeal) -> Result<bool> {
        for s in &self.summands {
            if engine.contains(p, &s.ideal)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// `r_M(N) = ∩ rad(I_i + J_i)`
    pub fn module_radical(&self, engine: &Engine, n: &Submodule) -> Result<PolyIdeal> {
        let q = self.quotient_module(engine, n)?;
        let mut acc = PolyIdeal::unit(self.domain);
        for s in &q.summands {
            let rad = match &s.kind {
                Kind::Monomial(m) => m.radical().to_poly_ideal(self.domain),
                Kind::Linear => s.ideal.clone(),
                Kind::General => {
                    return Err(Error::Unsupported(format!(
                        "radical of {} is not computable here",
                        s.ideal
                    )))
                }
            };
            acc = ideal::intersect(engine, &acc, &rad)?;
        }
        engine.canonical(&acc)
    }

    /// `Ass(M/N)`
    pub fn essential_primes(&self, engine: &Engine, n: &Submodule) -> Result<PrimeSet> {
        let q = self.quotient_module(engine, n)?;
        if q.is_zero_module() {
            return Err(Error::NotProperSubmodule);
        }
        q.ass(engine)
    }

    fn prime_ideal(&self, p: &Prime) -> Result<PolyIdeal> {
        match p {
            Prime::Monomial(m) => Ok(m.to_poly_ideal(self.domain)),
            Prime::Poly(i) => Ok(i.clone()),
            _ => Err(Error::InvalidArgument(format!("{p} is not a polynomial prime"))),
        }
    }

    /// Re-check one generator witness from scratch.
    pub fn check_generator_witness(&self, engine: &Engine, p: &Prime, w: &GeneratorWitness) -> Result<bool> {
        let pi = self.prime_ideal(p)?;
        if w.element.is_zero() || w.power == 0 || engine.ideal_member(&w.multiplier, &pi)? {
            return Ok(false);
        }
        let r = &w.multiplier * &w.generator.pow(w.power);
        if !self.act(engine, &r, &w.element)?.is_zero() {
            return Ok(false);
        }
        engine.contains(&pi, &self.annihilator(engine, &w.element)?)
    }

    /// Smallest `ν ≤ 16` with `g^ν·x = 0`.
    fn killing_power(&self, engine: &Engine, g: &Polynomial, x: &ModElement) -> Result<Option<u32>> {
        let mut y = x.clone();
        for nu in 1..=16 {
            y = self.act(engine, g, &y)?;
            if y.is_zero() {
                return Ok(Some(nu));
            }
        }
        Ok(None)
    }

    /// Certificate that `𝔭 ∈ Ass(M)`, or a refutation. Exact for monomial
    /// modules and monomial `𝔭`; otherwise a bounded witness search.
    pub fn ass_membership_witness(&self, engine: &Engine, p: &Prime) -> Result<AssMembership> {
        let pi = engine.canonical(&self.prime_ideal(p)?)?;
        let p = &prime_of(&pi).ok_or_else(|| Error::InvalidArgument(format!("{p} is not a certified prime")))?;
        let one = Polynomial::one(self.domain);
        let gens = pi.generators().to_vec();
        let witness_for = |x: &ModElement| -> Result<Option<Vec<GeneratorWitness>>> {
            let mut ws = Vec::new();
            for g in &gens {
                match self.killing_power(engine, g, x)? {
                    Some(nu) => ws.push(GeneratorWitness {
                        generator: g.clone(),
                        element: x.clone(),
                        multiplier: one.clone(),
                        power: nu,
                    }),
                    None => return Ok(None),
                }
            }
            Ok(Some(ws))
        };

        if let (true, Prime::Monomial(_)) = (self.is_monomial(), p) {
            for w in self.ass0_witnesses()? {
                if &w.annihilator == p {
                    let x = self.single(engine, w.summand, Polynomial::monomial(self.domain, w.coset))?;
                    let generators = witness_for(&x)?.expect("annihilator equals the prime");
                    return Ok(AssMembership::Certified { element: x, generators });
                }
            }
            return Ok(AssMembership::Refuted {
                reason: format!("{p} is not the annihilator of any monomial coset"),
            });
        }

        // bounded search over monomial multiples of the generators e_i
        let mut vars = self.vars();
        vars.extend(pi.vars());
        let cands = monomials_up_to(&vars, 2);
        let mut per_gen: Vec<Option<GeneratorWitness>> = vec![None; gens.len()];
        for i in 0..self.len() {
            for m in &cands {
                let x = self.single(engine, i, Polynomial::monomial(self.domain, m.clone()))?;
                if x.is_zero() || !engine.contains(&pi, &self.annihilator(engine, &x)?)? {
                    continue;
                }
                if let Some(ws) = witness_for(&x)? {
                    return Ok(AssMembership::Certified {
                        element: x,
                        generators: ws,
                    });
                }
                for (k, g) in gens.iter().enumerate() {
                    if per_gen[k].is_none() {
                        if let Some(nu) = self.killing_power(engine, g, &x)? {
                            per_gen[k] = Some(GeneratorWitness {
                                generator: g.clone(),
                                element: x.clone(),
                                multiplier: one.clone(),
                                power: nu,
                            });
                        }
                    }
                }
            }
        }
        match per_gen.into_iter().collect::<Option<Vec<_>>>() {
            Some(generators) => Ok(AssMembership::GeneratorsOnly { generators }),
            None => Err(Error::Inconclusive(format!("no witness found for {p}"))),
        }
    }
}

impl fmt::Display for CyclicSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.summands.iter().map(|s| format!("R/{}", s.ideal)).collect();
        write!(f, "{}", parts.join(" (+) "))
    }
}
