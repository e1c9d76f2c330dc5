//! Valuation rings with value group `ℤ^k` (lexicographic) or `ℚ`. Ring
//! elements are known only through their values, ideals are cuts in the
//! value group, and the modules `R/𝔞` and `Quot(R)/R` are handled exactly.

mod cut;
mod group;
mod module;

pub use cut::{CutClass, CutIdeal, CutShape, IndecomposabilityCertificate};
pub use group::{ValElement, Value, ValueGroup};
pub use module::{ValModule, ValModuleElem, ZeroDivisorWitness};
