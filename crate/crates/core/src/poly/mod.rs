//! Exact multivariate polynomials over ℚ and 𝔽p.

mod domain;
mod monomial;
mod order;
mod parse;
mod polynomial;
mod rewrite;
mod var;

pub use domain::{Domain, Scalar};
pub use monomial::Monomial;
pub use order::TermOrder;
pub use parse::{parse_polynomial, parse_polynomial_in, parse_polynomial_prefix};
pub use polynomial::Polynomial;
pub use rewrite::{RewriteSystem, Rule};
pub use var::Var;
