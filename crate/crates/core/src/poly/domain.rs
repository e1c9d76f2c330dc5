use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Coefficient scalars. Over `Fp` these are always integers in `[0, p)`.
pub type Scalar = BigRational;

/// Coefficient field of a polynomial ring.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize)]
pub enum Domain {
    #[default]
    Q,
    Fp(u32),
}

fn is_prime_u32(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = u64::from(p);
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Domain {
    pub fn fp(p: u32) -> Result<Self> {
        if p >= 1 << 31 || !is_prime_u32(p) {
            return Err(Error::InvalidArgument(format!(
                "Fp({p}): modulus must be a prime below 2^31"
            )));
        }
        Ok(Domain::Fp(p))
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            Domain::Q => 0,
            Domain::Fp(p) => *p,
        }
    }

    fn reduce_int(p: u32, n: &BigInt) -> i64 {
        n.mod_floor(&BigInt::from(p)).to_i64().expect("residue fits in i64")
    }

    /// Bring an arbitrary rational into canonical form for this domain.
    pub fn normalize(&self, c: Scalar) -> Result<Scalar> {
        match self {
            Domain::Q => Ok(c),
            Domain::Fp(p) => {
                let num = Self::reduce_int(*p, c.numer());
                let den = Self::reduce_int(*p, c.denom());
                if den == 0 {
                    return Err(Error::InvalidArgument(format!(
                        "denominator {} vanishes in Fp({p})",
                        c.denom()
                    )));
                }
                let inv = mod_inverse(den, i64::from(*p));
                Ok(Scalar::from_integer(BigInt::from(num * inv % i64::from(*p))))
            }
        }
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        self.normalize(Scalar::from_integer(BigInt::from(n)))
            .expect("integers are always representable")
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Domain::Q => a + b,
            Domain::Fp(p) => self.small(*p, a.to_integer() + b.to_integer()),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Domain::Q => a - b,
            Domain::Fp(p) => self.small(*p, a.to_integer() - b.to_integer()),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Domain::Q => a * b,
            Domain::Fp(p) => self.small(*p, a.to_integer() * b.to_integer()),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match self {
            Domain::Q => -a,
            Domain::Fp(p) => self.small(*p, -a.to_integer()),
        }
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        assert!(!a.is_zero(), "inverse of zero");
        match self {
            Domain::Q => a.recip(),
            Domain::Fp(p) => {
                let r = Self::reduce_int(*p, &a.to_integer());
                Scalar::from_integer(BigInt::from(mod_inverse(r, i64::from(*p))))
            }
        }
    }

    fn small(&self, p: u32, n: BigInt) -> Scalar {
        Scalar::from_integer(BigInt::from(Self::reduce_int(p, &n)))
    }

    /// Render a coefficient in the surface grammar (`3`, `-1/2`, ...).
    pub fn render(&self, c: &Scalar) -> String {
        if c.is_integer() {
            c.numer().to_string()
        } else {
            format!("{}/{}", c.numer(), c.denom())
        }
    }

    pub fn is_negative(&self, c: &Scalar) -> bool {
        matches!(self, Domain::Q) && c.is_negative()
    }

    pub fn one(&self) -> Scalar {
        Scalar::one()
    }
}

fn mod_inverse(a: i64, p: i64) -> i64 {
    // extended Euclid; p prime and a != 0 mod p
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p, a.rem_euclid(p));
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    t.rem_euclid(p)
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Q => f.write_str("Q"),
            Domain::Fp(p) => write!(f, "Fp({p})"),
        }
    }
}
