//! Ideal calculus: quotients, saturations, intersections, S-components,
//! monomial primary decomposition and prime avoidance.

mod avoidance;
mod decompose;
mod monomial;
mod ops;
mod scomp;

pub use avoidance::{prime_avoidance_witness, Avoidance, AVOIDANCE_TRIES};
pub use decompose::{
    normalize_decomposition, primary_decompose_monomial, primary_decompose_with, split_primary, ComponentCertificate,
    DecompositionReport, PrimaryComponent, PrimaryEvidence, SplitStrategy,
};
pub use monomial::MonomialIdeal;
pub use ops::{
    ideal_quotient, in_monomial_prime, in_radical, intersect, intersect_all, intersect_general, product, quotient_by,
    saturate, sum, var_product,
};
pub use scomp::{s_component, s_component_general, s_component_monomial, MultSetSpec};
