//! Torsion-flavoured modules over `ℤ`: finite sums `⊕ ℤ/(n_i)` (with
//! `n_i = 0` meaning `ℤ`) and `ℚ/ℤ`. Ideals of `ℤ` are named by their
//! non-negative generator.

use std::fmt;

use num_integer::Integer;
use num_rational::Rational64;
use serde::Serialize;

use super::{Prime, PrimeSet, Provenance};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum IntModule {
    Cyclic(Vec<u64>),
    QmodZ,
}

/// An element: residues for `Cyclic`, a fraction mod 1 for `QmodZ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntElem {
    Residues(Vec<i64>),
    Frac(Rational64),
}

impl fmt::Display for IntElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntElem::Residues(a) => write!(f, "{a:?}"),
            IntElem::Frac(q) => write!(f, "{q}"),
        }
    }
}

impl Serialize for IntElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = vec![];
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The first `k` primes.
pub fn first_primes(k: usize) -> Vec<u64> {
    (2u64..).filter(|&n| is_prime(n)).take(k).collect()
}

impl IntModule {
    /// `⊕_{p ∈ primes} ℤ/(p)`
    pub fn prime_sum(primes: &[u64]) -> Result<Self> {
        if let Some(p) = primes.iter().find(|p| !is_prime(**p)) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        Ok(IntModule::Cyclic(primes.to_vec()))
    }

    pub fn is_zero_module(&self) -> bool {
        matches!(self, IntModule::Cyclic(ns) if ns.iter().all(|n| *n == 1))
    }

    pub fn reduce(&self, x: &IntElem) -> Result<IntElem> {
        match (self, x) {
            (IntModule::Cyclic(ns), IntElem::Residues(a)) if a.len() == ns.len() => Ok(IntElem::Residues(
                a.iter()
                    .zip(ns)
                    .map(|(a, n)| if *n == 0 { *a } else { a.mod_floor(&(*n as i64)) })
                    .collect(),
            )),
            (IntModule::QmodZ, IntElem::Frac(q)) => Ok(IntElem::Frac(q - q.floor())),
            _ => Err(Error::InvalidArgument(format!("{x:?} is not an element of {self}"))),
        }
    }

    pub fn is_zero(&self, x: &IntElem) -> Result<bool> {
        Ok(match self.reduce(x)? {
            IntElem::Residues(a) => a.iter().all(|a| *a == 0),
            IntElem::Frac(q) => q == Rational64::from_integer(0),
        })
    }

    /// `r·x`
    pub fn act(&self, r: i64, x: &IntElem) -> Result<IntElem> {
        let y = match x {
            IntElem::Residues(a) => IntElem::Residues(a.iter().map(|a| a * r).collect()),
            IntElem::Frac(q) => IntElem::Frac(q * Rational64::from_integer(r)),
        };
        self.reduce(&y)
    }

    /// Generator of `Ann(x)`.
    pub fn annihilator_of(&self, x: &IntElem) -> Result<u64> {
        Ok(match self.reduce(x)? {
            IntElem::Residues(a) => {
                let IntModule::Cyclic(ns) = self else { unreachable!() };
                a.iter().zip(ns).fold(1u64, |acc, (a, n)| {
                    let part = if *a == 0 {
                        1
                    } else if *n == 0 {
                        0
                    } else {
                        n / n.gcd(&a.unsigned_abs())
                    };
                    if acc == 0 || part == 0 {
                        0
                    } else {
                        acc.lcm(&part)
                    }
                })
            }
            IntElem::Frac(q) => *q.denom() as u64,
        })
    }

    /// Generator of `Ann(M)`.
    pub fn annihilator(&self) -> u64 {
        match self {
            IntModule::Cyclic(ns) => ns
                .iter()
                .fold(1u64, |acc, n| if acc == 0 || *n == 0 { 0 } else { acc.lcm(n) }),
            IntModule::QmodZ => 0,
        }
    }

    /// `Some(x)` with `x ≠ 0`, `r·x = 0`.
    pub fn is_zero_divisor(&self, r: i64) -> Option<IntElem> {
        match self {
            IntModule::Cyclic(ns) => {
                let (i, n) = ns
                    .iter()
                    .enumerate()
                    .find(|(_, n)| **n != 1 && (r == 0 || (**n != 0 && n.gcd(&r.unsigned_abs()) != 1)))?;
                let mut a = vec![0; ns.len()];
                a[i] = if *n == 0 {
                    1
                } else {
                    (n / n.gcd(&r.unsigned_abs())) as i64
                };
                Some(IntElem::Residues(a))
            }
            IntModule::QmodZ => {
                let d = match r.unsigned_abs() {
                    1 => return None,
                    0 => 2,
                    d => d as i64,
                };
                Some(IntElem::Frac(Rational64::new(1, d)))
            }
        }
    }

    /// Every element is killed by a power of `r`.
    pub fn is_nilpotent_for(&self, r: i64) -> bool {
        match self {
            IntModule::Cyclic(ns) => ns.iter().all(|n| match n {
                0 => r == 0,
                n => r == 0 || prime_factors(*n).iter().all(|p| r.unsigned_abs().is_multiple_of(*p)),
            }),
            IntModule::QmodZ => r == 0,
        }
    }

    /// `(p) ∈ Ass(M)`; `p = 0` is the zero ideal. These modules are
    /// noetherian or torsion with `Ann(1/p) = (p)`, so `Ass = Ass₁ = Ass₀`.
    pub fn ass_contains(&self, p: u64) -> bool {
        match self {
            IntModule::Cyclic(ns) => ns.iter().any(|n| {
                if p == 0 {
                    *n == 0
                } else {
                    is_prime(p) && *n != 0 && n % p == 0
                }
            }),
            IntModule::QmodZ => is_prime(p),
        }
    }

    /// `Ass₀` for finite sums, from the prime factors of each modulus.
    pub fn ass0(&self) -> Result<PrimeSet> {
        let IntModule::Cyclic(ns) = self else {
            return Err(Error::Unsupported(
                "Ass of Q/Z is the infinite set of nonzero primes".into(),
            ));
        };
        let mut set = PrimeSet::new(true);
        for n in ns {
            if *n == 0 {
                set.insert(Prime::Integer(0), Provenance::Ass0Witness);
            } else {
                for p in prime_factors(*n) {
                    set.insert(Prime::Integer(p), Provenance::Ass0Witness);
                }
            }
        }
        set.entries.sort_by_key(|e| match e.prime {
            Prime::Integer(p) => p,
            _ => 0,
        });
        Ok(set)
    }

    /// `M_(p) ≠ 0`
    pub fn supp_contains(&self, p: u64) -> bool {
        match self {
            IntModule::Cyclic(ns) => ns.iter().any(|n| *n == 0 || (p != 0 && n % p == 0)),
            IntModule::QmodZ => p != 0,
        }
    }

    /// Generator of the radical of `(0)`: the elements nilpotent for `M`.
    pub fn radical(&self) -> u64 {
        match self.annihilator() {
            0 => 0,
            n => prime_factors(n).iter().product(),
        }
    }
}

impl fmt::Display for IntModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntModule::Cyclic(ns) if ns.is_empty() => write!(f, "0"),
            IntModule::Cyclic(ns) => {
                let parts: Vec<String> = ns
                    .iter()
                    .map(|n| if *n == 0 { "Z".to_string() } else { format!("Z/({n})") })
                    .collect();
                write!(f, "{}", parts.join(" (+) "))
            }
            IntModule::QmodZ => write!(f, "Q/Z"),
        }
    }
}
