//! Shared test support: independent brute-force oracles, seeded instance
//! generators, the oracle-parity checks and the acceptance criteria.
#![allow(dead_code)]

pub mod criteria;
pub mod parity;

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use ideallab::ideal::MonomialIdeal;
use ideallab::poly::{parse_polynomial, Scalar};
use ideallab::{Domain, Engine, Monomial, PolyIdeal, Polynomial, Var};
use num_traits::Zero;
use rand::Rng;

/// `Ok(detail)` or `Err(reason)`.
pub type Check = Result<String, String>;

pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub fn lift<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

pub const Q: Domain = Domain::Q;

pub fn engine() -> Engine {
    Engine::default()
}

pub fn p(s: &str) -> Polynomial {
    parse_polynomial(s, Q).unwrap_or_else(|e| panic!("{s}: {e}"))
}

pub fn m(s: &str) -> Monomial {
    p(s).as_monomial()
        .cloned()
        .unwrap_or_else(|| panic!("{s} is not a monomial"))
}

pub fn ms(gens: &[&str]) -> Vec<Monomial> {
    gens.iter().map(|g| m(g)).collect()
}

pub fn mi(gens: &[&str]) -> MonomialIdeal {
    MonomialIdeal::new(ms(gens))
}

pub fn pi(gens: &[&str]) -> PolyIdeal {
    PolyIdeal::new(Q, gens.iter().map(|g| p(g)).collect()).unwrap()
}

pub fn vars(names: &[&str]) -> Vec<Var> {
    names.iter().map(|n| Var::new(n)).collect()
}

pub fn prime(names: &[&str]) -> MonomialIdeal {
    MonomialIdeal::prime(vars(names))
}

pub fn reference_path() -> PathBuf {
    std::env::var_os("IDEALLAB_REFERENCE")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../paper.md"))
}

// ---- monomial oracles: exponent bookkeeping only ----

pub fn exps(a: &Monomial) -> BTreeMap<Var, u32> {
    a.exponents().iter().copied().collect()
}

pub fn from_exps(e: &BTreeMap<Var, u32>) -> Monomial {
    Monomial::from_exponents(e.iter().map(|(v, k)| (*v, *k)))
}

pub fn divides(a: &Monomial, b: &Monomial) -> bool {
    let eb = exps(b);
    exps(a).iter().all(|(v, k)| eb.get(v).copied().unwrap_or(0) >= *k)
}

pub fn times(a: &Monomial, b: &Monomial) -> Monomial {
    let mut e = exps(a);
    for (v, k) in exps(b) {
        *e.entry(v).or_default() += k;
    }
    from_exps(&e)
}

pub fn lcm(a: &Monomial, b: &Monomial) -> Monomial {
    let mut e = exps(a);
    for (v, k) in exps(b) {
        let s = e.entry(v).or_default();
        *s = (*s).max(k);
    }
    from_exps(&e)
}

pub fn power(a: &Monomial, k: u32) -> Monomial {
    from_exps(&exps(a).into_iter().map(|(v, e)| (v, e * k)).collect())
}

pub fn in_ideal(gens: &[Monomial], x: &Monomial) -> bool {
    gens.iter().any(|g| divides(g, x))
}

/// A polynomial lies in a monomial ideal iff each of its terms does.
pub fn poly_in_ideal(gens: &[Monomial], f: &Polynomial) -> bool {
    f.monomials().all(|t| in_ideal(gens, t))
}

pub fn degree(a: &Monomial) -> u32 {
    exps(a).values().sum()
}

/// Every monomial of degree ≤ `d` in `vs`.
pub fn monos(vs: &[Var], d: u32) -> Vec<Monomial> {
    fn go(vs: &[Var], d: u32, acc: &mut BTreeMap<Var, u32>, out: &mut Vec<Monomial>) {
        let Some((v, rest)) = vs.split_first() else {
            out.push(from_exps(acc));
            return;
        };
        for k in 0..=d {
            if k > 0 {
                acc.insert(*v, k);
            }
            go(rest, d - k, acc, out);
        }
        acc.remove(v);
    }
    let mut out = vec![];
    go(vs, d, &mut BTreeMap::new(), &mut out);
    out
}

/// Drop monomials divisible by another one; sorted and deduplicated.
pub fn minimize(gens: Vec<Monomial>) -> BTreeSet<Monomial> {
    let set: BTreeSet<Monomial> = gens.into_iter().collect();
    set.iter()
        .filter(|a| !set.iter().any(|b| b != *a && divides(b, a)))
        .cloned()
        .collect()
}

pub fn gens_of(i: &MonomialIdeal) -> BTreeSet<Monomial> {
    i.gens().iter().cloned().collect()
}

pub fn intersect_gens(a: &[Monomial], b: &[Monomial]) -> BTreeSet<Monomial> {
    minimize(a.iter().flat_map(|x| b.iter().map(move |y| lcm(x, y))).collect())
}

pub fn intersect_all_gens(parts: &[Vec<Monomial>]) -> BTreeSet<Monomial> {
    let mut acc = vec![Monomial::one()];
    for part in parts {
        acc = intersect_gens(&acc, part).into_iter().collect();
    }
    minimize(acc)
}

/// `(I : f)` by scanning monomials of degree ≤ `d`.
pub fn quotient_scan(gens: &[Monomial], f: &Monomial, vs: &[Var], d: u32) -> BTreeSet<Monomial> {
    minimize(
        monos(vs, d)
            .into_iter()
            .filter(|n| in_ideal(gens, &times(n, f)))
            .collect(),
    )
}

pub fn subsets(vs: &[Var]) -> Vec<BTreeSet<Var>> {
    (0u32..1 << vs.len())
        .map(|mask| (0..vs.len()).filter(|b| mask >> b & 1 == 1).map(|b| vs[b]).collect())
        .collect()
}

/// The prime generated by `p` contains the ideal iff every generator
/// involves a variable of `p`.
pub fn prime_contains(p: &BTreeSet<Var>, gens: &[Monomial]) -> bool {
    gens.iter().all(|g| exps(g).keys().any(|v| p.contains(v)))
}

/// Minimal primes over a monomial ideal by exhaustive subset search.
pub fn minprimes_scan(gens: &[Monomial], vs: &[Var]) -> BTreeSet<BTreeSet<Var>> {
    let over: Vec<BTreeSet<Var>> = subsets(vs).into_iter().filter(|p| prime_contains(p, gens)).collect();
    over.iter()
        .filter(|p| !over.iter().any(|q| q != *p && q.is_subset(p)))
        .cloned()
        .collect()
}

pub fn var_sets(primes: impl IntoIterator<Item = MonomialIdeal>) -> BTreeSet<BTreeSet<Var>> {
    primes.into_iter().map(|p| p.vars()).collect()
}

/// Associated primes of `R/I` by the coset scan: annihilators of monomial
/// cosets of degree ≤ `dc` that are generated by variables. Annihilators are
/// scanned to degree `dq`, which must reach the generator degree of `I`.
pub fn ass_scan(gens: &[Monomial], vs: &[Var], dc: u32, dq: u32) -> BTreeSet<BTreeSet<Var>> {
    let mut out = BTreeSet::new();
    for c in monos(vs, dc) {
        if in_ideal(gens, &c) {
            continue;
        }
        let ann: Vec<Monomial> = quotient_scan(gens, &c, vs, dq).into_iter().collect();
        if ann.iter().all(|a| degree(a) == 1) && !ann.is_empty() {
            out.insert(ann.iter().flat_map(|a| exps(a).into_keys()).collect());
        }
    }
    out
}

/// Weakly associated primes of `R/I`: minimal primes over annihilators of
/// monomial cosets of degree ≤ `dc`.
pub fn ass1_scan(gens: &[Monomial], vs: &[Var], dc: u32, dq: u32) -> BTreeSet<BTreeSet<Var>> {
    let mut out = BTreeSet::new();
    for c in monos(vs, dc) {
        if in_ideal(gens, &c) {
            continue;
        }
        let ann: Vec<Monomial> = quotient_scan(gens, &c, vs, dq).into_iter().collect();
        out.extend(minprimes_scan(&ann, vs));
    }
    out
}

/// Primary per definition on monomials of degree ≤ `d`: every zero divisor
/// of `R/I` has a power (≤ `d`) in `I`.
pub fn primary_scan(gens: &[Monomial], vs: &[Var], d: u32) -> bool {
    let all = monos(vs, d);
    let outside: Vec<&Monomial> = all.iter().filter(|n| !in_ideal(gens, n)).collect();
    all.iter()
        .filter(|z| outside.iter().any(|n| in_ideal(gens, &times(z, n))))
        .all(|z| (1..=d).any(|k| in_ideal(gens, &power(z, k))))
}

pub fn squarefree(a: &Monomial) -> Monomial {
    from_exps(&exps(a).into_keys().map(|v| (v, 1)).collect())
}

// ---- polynomial evaluation ----

pub fn eval(f: &Polynomial, at: &BTreeMap<Var, Scalar>) -> Scalar {
    let mut acc = Scalar::zero();
    for (mono, c) in f.terms() {
        let mut t = c.clone();
        for (v, e) in mono.exponents() {
            let x = at.get(v).cloned().unwrap_or_else(Scalar::zero);
            for _ in 0..*e {
                t *= &x;
            }
        }
        acc += t;
    }
    acc
}

// ---- seeded instances ----

pub const INSTANCE_VARS: [&str; 4] = ["x", "y", "z", "w"];

/// A random monomial ideal: up to `nvars` variables, 1..=`ngens`
/// generators of degree 1..=`deg`.
pub fn random_monomial_gens<R: Rng>(rng: &mut R, nvars: usize, ngens: usize, deg: u32) -> Vec<Monomial> {
    let vs = vars(&INSTANCE_VARS[..nvars]);
    (0..rng.gen_range(1..=ngens))
        .map(|_| {
            let d = rng.gen_range(1..=deg);
            let mut e = BTreeMap::new();
            for _ in 0..d {
                *e.entry(vs[rng.gen_range(0..vs.len())]).or_insert(0) += 1;
            }
            from_exps(&e)
        })
        .collect()
}

pub fn random_monomial_ideal<R: Rng>(rng: &mut R) -> (Vec<Monomial>, MonomialIdeal) {
    let n = rng.gen_range(1..=4);
    let gens = random_monomial_gens(rng, n, 5, 5);
    let ideal = MonomialIdeal::new(gens.clone());
    (gens, ideal)
}

/// Summand generators of a random monomial cyclic sum in `x, y, z`.
pub fn random_cyclic_sum<R: Rng>(rng: &mut R) -> Vec<Vec<Monomial>> {
    (0..rng.gen_range(1..=3))
        .map(|_| random_monomial_gens(rng, 3, 4, 4))
        .collect()
}

pub fn set_str(s: &BTreeSet<BTreeSet<Var>>) -> String {
    let parts: Vec<String> = s
        .iter()
        .map(|p| format!("({})", p.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn gens_str(s: &BTreeSet<Monomial>) -> String {
    format!("({})", s.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", "))
}
