//! Prime avoidance: either an element of `a` outside every listed prime, or
//! a prime that contains all of `a`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::MonomialIdeal;
use crate::error::{Error, Result};
use crate::groebner::{Engine, PolyIdeal};
use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Avoidance {
    /// An element of `a` lying in none of the primes.
    Witness(Polynomial),
    /// `a` is contained in `primes[i]`.
    Contained(usize),
}

/// Random combinations tried in polynomial mode before giving up.
pub const AVOIDANCE_TRIES: usize = 200;

pub fn prime_avoidance_witness(engine: &Engine, a: &PolyIdeal, primes: &[PolyIdeal], seed: u64) -> Result<Avoidance> {
    let d = a.domain();
    let mono_a = MonomialIdeal::from_poly_ideal(a);
    let mono_primes: Option<Vec<MonomialIdeal>> = primes.iter().map(MonomialIdeal::from_poly_ideal).collect();

    if let (Some(ma), Some(mps)) = (&mono_a, &mono_primes) {
        if let Some(i) = mps.iter().position(|p| p.contains_ideal(ma)) {
            return Ok(Avoidance::Contained(i));
        }
        // a single generator may already avoid everything; otherwise the
        // sum of all generators does, since no prime contains all of them
        for g in ma.gens() {
            if mps.iter().all(|p| !p.contains(g)) {
                return Ok(Avoidance::Witness(Polynomial::monomial(d, g.clone())));
            }
        }
        let sum = Polynomial::from_terms(d, ma.gens().iter().map(|m| (m.clone(), d.one())));
        return Ok(Avoidance::Witness(sum));
    }

    for (i, p) in primes.iter().enumerate() {
        if engine.contains(p, a)? {
            return Ok(Avoidance::Contained(i));
        }
    }
    let avoids = |f: &Polynomial| -> Result<bool> {
        for p in primes {
            if engine.ideal_member(f, p)? {
                return Ok(false);
            }
        }
        Ok(!f.is_zero())
    };
    for g in a.generators() {
        if avoids(g)? {
            return Ok(Avoidance::Witness(g.clone()));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..AVOIDANCE_TRIES {
        let mut f = Polynomial::zero(d);
        for g in a.generators() {
            let c = Polynomial::constant(d, d.from_int(rng.gen_range(-3..=3)));
            f = &f + &(&c * g);
        }
        if avoids(&f)? {
            return Ok(Avoidance::Witness(f));
        }
    }
    Err(Error::Inconclusive(format!(
        "no element of {a} outside all primes found in {AVOIDANCE_TRIES} tries"
    )))
}
