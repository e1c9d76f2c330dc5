//! S-components `S(I) = {x : s·x ∈ I for some s ∈ S}` for a few
//! presentable multiplicatively closed sets.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::ops::{in_monomial_prime, saturate, var_product};
use super::MonomialIdeal;
use crate::error::{Error, Result};
use crate::groebner::{Engine, PolyIdeal};
use crate::poly::{Polynomial, Var};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum MultSetSpec {
    /// `{1, f, f², …}`
    PowersOf(Polynomial),
    /// Monoid generated by finitely many elements; empty means `{1}`.
    FinitelyGenerated(Vec<Polynomial>),
    /// Complement of the prime generated by the given variables.
    ComplementOfMonomialPrime(BTreeSet<Var>),
    /// `S · {a^ν}`
    Extended(Box<MultSetSpec>, Polynomial),
}

impl MultSetSpec {
    pub fn complement_of<I: IntoIterator<Item = Var>>(vars: I) -> Self {
        MultSetSpec::ComplementOfMonomialPrime(vars.into_iter().collect())
    }

    pub fn extend(self, a: Polynomial) -> Self {
        MultSetSpec::Extended(Box::new(self), a)
    }

    /// Whether `S` meets the prime generated by `prime_vars`.
    pub fn meets_monomial_prime(&self, prime_vars: &BTreeSet<Var>) -> bool {
        match self {
            MultSetSpec::PowersOf(f) => in_monomial_prime(f, prime_vars),
            MultSetSpec::FinitelyGenerated(fs) => fs.iter().any(|f| in_monomial_prime(f, prime_vars)),
            MultSetSpec::ComplementOfMonomialPrime(v) => !prime_vars.is_subset(v),
            MultSetSpec::Extended(s, a) => s.meets_monomial_prime(prime_vars) || in_monomial_prime(a, prime_vars),
        }
    }
}

impl fmt::Display for MultSetSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MultSetSpec::PowersOf(p) => write!(f, "powers of {p}"),
            MultSetSpec::FinitelyGenerated(ps) => {
                write!(f, "monoid<")?;
                for (i, p) in ps.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ">")
            }
            MultSetSpec::ComplementOfMonomialPrime(v) => {
                write!(f, "complement of {}", MonomialIdeal::prime(v.iter().copied()))
            }
            MultSetSpec::Extended(s, a) => write!(f, "({s}) * powers of {a}"),
        }
    }
}

/// S-component with the monomial shortcut whenever `I` is monomial and
/// `S` is generated by monomials.
pub fn s_component(engine: &Engine, i: &PolyIdeal, s: &MultSetSpec) -> Result<PolyIdeal> {
    if let Some(mi) = MonomialIdeal::from_poly_ideal(i) {
        if let Some(r) = s_component_monomial(&mi, s) {
            return Ok(r.to_poly_ideal(i.domain()));
        }
    }
    s_component_general(engine, i, s)
}

/// Monomial route; `None` if some element of `S` is not a monomial.
pub fn s_component_monomial(i: &MonomialIdeal, s: &MultSetSpec) -> Option<MonomialIdeal> {
    match s {
        MultSetSpec::PowersOf(f) => Some(i.saturate_monomial(f.as_monomial()?)),
        MultSetSpec::FinitelyGenerated(fs) => {
            let mut vars = BTreeSet::new();
            for f in fs {
                vars.extend(f.as_monomial()?.support());
            }
            Some(i.saturate_vars(&vars))
        }
        MultSetSpec::ComplementOfMonomialPrime(v) => {
            let outside: BTreeSet<Var> = i.vars().difference(v).copied().collect();
            Some(i.saturate_vars(&outside))
        }
        MultSetSpec::Extended(base, a) => {
            let step = i.saturate_monomial(a.as_monomial()?);
            s_component_monomial(&step, base)
        }
    }
}

/// Gröbner route for every set; complements of primes still require a
/// monomial input.
pub fn s_component_general(engine: &Engine, i: &PolyIdeal, s: &MultSetSpec) -> Result<PolyIdeal> {
    match s {
        MultSetSpec::PowersOf(f) => saturate(engine, i, f),
        MultSetSpec::FinitelyGenerated(fs) => {
            let mut cur = engine.canonical(i)?;
            loop {
                let mut next = cur.clone();
                for f in fs {
                    next = saturate(engine, &next, f)?;
                }
                if engine.ideal_eq(&next, &cur)? {
                    return Ok(next);
                }
                cur = next;
            }
        }
        MultSetSpec::ComplementOfMonomialPrime(v) => {
            let Some(mi) = MonomialIdeal::from_poly_ideal(i) else {
                return Err(Error::Unsupported(
                    "complement-of-prime components need a monomial ideal".into(),
                ));
            };
            let outside: BTreeSet<Var> = mi.vars().difference(v).copied().collect();
            if outside.is_empty() {
                return engine.canonical(i);
            }
            let f = Polynomial::monomial(i.domain(), var_product(&outside));
            saturate(engine, i, &f)
        }
        MultSetSpec::Extended(base, a) => {
            let step = saturate(engine, i, a)?;
            s_component_general(engine, &step, base)
        }
    }
}
