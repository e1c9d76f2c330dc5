use num_rational::BigRational;
use rand::Rng;

use crate::poly::{Domain, Monomial, Polynomial, Var};

/// A polynomial with at most `terms` terms of degree in `min_deg..=max_deg`
/// over `vars`, coefficients in `-3..=3` (possibly zero).
pub fn random_poly<R: Rng>(
    rng: &mut R,
    domain: Domain,
    vars: &[Var],
    terms: usize,
    min_deg: u32,
    max_deg: u32,
) -> Polynomial {
    let mut p = Polynomial::zero(domain);
    for _ in 0..rng.gen_range(1..=terms.max(1)) {
        let deg = rng.gen_range(min_deg..=max_deg);
        let mut m = Monomial::one();
        for _ in 0..deg {
            m = m.mul(&Monomial::var(vars[rng.gen_range(0..vars.len())]));
        }
        let c: i64 = rng.gen_range(-3..=3);
        p = &p + &Polynomial::term(domain, m, BigRational::from_integer(c.into()));
    }
    p
}
