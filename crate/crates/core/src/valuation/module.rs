//! The two cyclic-like modules over a valuation ring that matter here:
//! `R/𝔞` and `Quot(R)/R`. Elements are represented by a value only.

use std::fmt;

use serde::Serialize;

use super::{CutIdeal, CutShape, ValElement, Value, ValueGroup};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ValModule {
    /// `R/𝔞`; an element is the value of a representative outside `𝔞`.
    Quotient(CutIdeal),
    /// `Quot(R)/R`; a nonzero element has strictly negative value.
    QuotField(ValueGroup),
}

/// A module element: `Zero`, or the class of an element with the given
/// value.
pub type ValModuleElem = ValElement;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroDivisorWitness {
    pub element: ValModuleElem,
    pub product: ValModuleElem,
}

impl ValModule {
    pub fn group(&self) -> ValueGroup {
        match self {
            ValModule::Quotient(a) => a.group(),
            ValModule::QuotField(g) => *g,
        }
    }

    pub fn is_zero_module(&self) -> bool {
        matches!(self, ValModule::Quotient(a) if a.is_unit())
    }

    /// Canonical form of an element: `Inf` when it is zero in the module.
    pub fn reduce(&self, x: &ValModuleElem) -> Result<ValModuleElem> {
        let Some(v) = x.value() else {
            return Ok(ValElement::Inf);
        };
        self.group().check(v)?;
        Ok(match self {
            ValModule::Quotient(a) => {
                if v.is_negative() {
                    return Err(Error::InvalidArgument(format!(
                        "{v} is not the value of a ring element"
                    )));
                }
                if a.member(x)? {
                    ValElement::Inf
                } else {
                    x.clone()
                }
            }
            ValModule::QuotField(_) => {
                if v.is_negative() {
                    x.clone()
                } else {
                    ValElement::Inf
                }
            }
        })
    }

    /// `r·x`
    pub fn act(&self, r: &ValElement, x: &ValModuleElem) -> Result<ValModuleElem> {
        self.reduce(&r.mul(x))
    }

    pub fn annihilator_of(&self, x: &ValModuleElem) -> Result<CutIdeal> {
        let x = self.reduce(x)?;
        let g = self.group();
        let Some(v) = x.value() else {
            return Ok(CutIdeal::unit(g));
        };
        match self {
            ValModule::Quotient(a) => a.quotient_by(&x),
            ValModule::QuotField(_) => CutIdeal::closed(g, v.neg()),
        }
    }

    pub fn annihilator(&self) -> CutIdeal {
        match self {
            ValModule::Quotient(a) => a.clone(),
            ValModule::QuotField(g) => CutIdeal::zero(*g),
        }
    }

    /// `r` is nilpotent for `M` iff every element is killed by a power of
    /// `r`; decided from the radical, with archimedean arguments over `ℚ`.
    pub fn is_nilpotent_for(&self, r: &ValElement) -> Result<bool> {
        if let Some(v) = r.value() {
            self.group().check(v)?;
        }
        Ok(match self {
            ValModule::Quotient(a) => a.is_unit() || a.radical().member(r)?,
            // powers of r must clear every threshold: r ∈ smallest nonzero prime
            ValModule::QuotField(g) => smallest_nonzero_prime(*g).member(r)?,
        })
    }

    pub fn is_zero_divisor(&self, r: &ValElement) -> Result<Option<ZeroDivisorWitness>> {
        let g = self.group();
        if self.is_zero_module() {
            return Ok(None);
        }
        let witness = |x: ValModuleElem| -> Result<Option<ZeroDivisorWitness>> {
            let product = self.act(r, &x)?;
            debug_assert!(product.is_zero() && !self.reduce(&x)?.is_zero());
            Ok(Some(ZeroDivisorWitness { element: x, product }))
        };
        let Some(rho) = r.value() else {
            return witness(self.some_nonzero());
        };
        g.check(rho)?;
        if !rho.is_positive() {
            return Ok(None);
        }
        match self {
            ValModule::Quotient(a) => {
                if a.member(r)? {
                    return witness(ValElement::Val(g.zero()));
                }
                match a.shape() {
                    CutShape::Zero => Ok(None),
                    CutShape::Closed(t) => witness(ValElement::Val(t.sub(rho))),
                    CutShape::Open(t) => {
                        // land strictly between t - rho and t
                        let Value::Rat(h) = rho else { unreachable!() };
                        let half = Value::Rat(h / 2);
                        witness(ValElement::Val(t.sub(&half)))
                    }
                    CutShape::Limit(q) => {
                        let Value::Lex(c) = rho else { unreachable!() };
                        let j = q.len();
                        if c[..j].iter().all(|x| *x == 0) {
                            return Ok(None);
                        }
                        let mut v = vec![0; c.len()];
                        for i in 0..j {
                            v[i] = q[i] - c[i];
                        }
                        witness(ValElement::Val(Value::Lex(v)))
                    }
                    CutShape::Unit => Ok(None),
                }
            }
            ValModule::QuotField(_) => witness(ValElement::Val(rho.neg())),
        }
    }

    fn some_nonzero(&self) -> ValModuleElem {
        match self {
            ValModule::Quotient(a) => ValElement::Val(a.group().zero()),
            ValModule::QuotField(g) => ValElement::Val(match g {
                ValueGroup::ZLex(k) => {
                    let mut c = vec![0; *k];
                    c[k - 1] = -1;
                    Value::Lex(c)
                }
                ValueGroup::Q => g.rat(-1, 1).unwrap(),
            }),
        }
    }

    /// The set of zero divisors, which is always a prime cut here.
    pub fn zero_divisors(&self) -> Result<CutIdeal> {
        if self.is_zero_module() {
            return Err(Error::ZeroModule);
        }
        Ok(match self {
            ValModule::Quotient(a) => match a.shape() {
                CutShape::Zero => a.clone(),
                CutShape::Limit(q) => CutIdeal::lex_prime(a.group(), q.len())?,
                _ => CutIdeal::maximal(a.group()),
            },
            ValModule::QuotField(g) => CutIdeal::maximal(*g),
        })
    }

    /// The set of elements nilpotent for `M`, also a prime cut.
    pub fn nilpotents(&self) -> Result<CutIdeal> {
        if self.is_zero_module() {
            return Err(Error::ZeroModule);
        }
        Ok(match self {
            ValModule::Quotient(a) => a.radical(),
            ValModule::QuotField(g) => smallest_nonzero_prime(*g),
        })
    }

    /// `Some(𝔭)` iff every zero divisor is nilpotent; `𝔭` is then the set of
    /// zero divisors.
    pub fn is_coprimary(&self) -> Result<Option<CutIdeal>> {
        let z = self.zero_divisors()?;
        Ok((z == self.nilpotents()?).then_some(z))
    }

    /// `Ass₀`: primes that are annihilators of single elements.
    pub fn ass0(&self) -> Result<Vec<CutIdeal>> {
        if self.is_zero_module() {
            return Ok(vec![]);
        }
        let g = self.group();
        Ok(match self {
            ValModule::Quotient(a) => match (a.shape(), g) {
                (CutShape::Zero, _) => vec![a.clone()],
                (CutShape::Open(_), ValueGroup::Q) => vec![CutIdeal::maximal(g)],
                (CutShape::Closed(_), ValueGroup::Q) => vec![],
                // annihilators keep the number of finite threshold coordinates
                (CutShape::Closed(_), ValueGroup::ZLex(k)) => vec![CutIdeal::lex_prime(g, k)?],
                (CutShape::Limit(q), _) => vec![CutIdeal::lex_prime(g, q.len())?],
                _ => unreachable!(),
            },
            ValModule::QuotField(_) => match g {
                ValueGroup::ZLex(_) => vec![CutIdeal::maximal(g)],
                ValueGroup::Q => vec![],
            },
        })
    }

    /// Whether some element has annihilator exactly `p`.
    pub fn ass0_witness_exists(&self, p: &CutIdeal) -> Result<bool> {
        Ok(self.ass0()?.contains(p))
    }

    /// `Ass₁`: radicals of element annihilators (the minimal prime over a
    /// cut is its radical).
    pub fn ass1(&self) -> Result<Vec<CutIdeal>> {
        if self.is_zero_module() {
            return Ok(vec![]);
        }
        let g = self.group();
        Ok(match (self, g) {
            (_, ValueGroup::Q) => match self {
                ValModule::Quotient(a) if a.is_zero() => vec![a.clone()],
                _ => vec![CutIdeal::maximal(g)],
            },
            (ValModule::Quotient(a), ValueGroup::ZLex(k)) => match a.shape() {
                CutShape::Zero => vec![a.clone()],
                _ => {
                    let finite = match a.shape() {
                        CutShape::Limit(q) => q.len(),
                        _ => k,
                    };
                    let lead = match a.radical().shape() {
                        CutShape::Limit(q) => q.len(),
                        _ => k,
                    };
                    (lead..=finite)
                        .map(|j| CutIdeal::lex_prime(g, j))
                        .collect::<Result<_>>()?
                }
            },
            (ValModule::QuotField(_), ValueGroup::ZLex(k)) => {
                (1..=k).map(|j| CutIdeal::lex_prime(g, j)).collect::<Result<_>>()?
            }
        })
    }

    /// `Ass` where `(0)` has a primary decomposition computable here: the
    /// coprimary case, where it is the single prime of zero divisors.
    pub fn ass(&self) -> Result<Vec<CutIdeal>> {
        match self.is_coprimary()? {
            Some(p) => Ok(vec![p]),
            None => Err(Error::Unsupported(format!(
                "{self} is not coprimary; no decomposition of (0) is available"
            ))),
        }
    }
}

fn smallest_nonzero_prime(g: ValueGroup) -> CutIdeal {
    match g {
        ValueGroup::ZLex(_) => CutIdeal::lex_prime(g, 1).unwrap(),
        ValueGroup::Q => CutIdeal::maximal(g),
    }
}

impl fmt::Display for ValModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValModule::Quotient(a) => write!(f, "R/{a}"),
            ValModule::QuotField(_) => write!(f, "Quot(R)/R"),
        }
    }
}
