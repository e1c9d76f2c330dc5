//! Exact commutative algebra on a desk: polynomial ideals, primary
//! decomposition of monomial ideals, valuation-ring cut ideals, associated
//! primes of finitely generated modules, and a gallery of worked examples.

pub mod error;
pub mod gallery;
pub mod groebner;
pub mod ideal;
pub mod module;
pub mod poly;
pub mod valuation;

pub use error::{Error, Result};
pub use groebner::{Engine, GroebnerBasis, PolyIdeal};
pub use poly::{Domain, Monomial, Polynomial, TermOrder, Var};
