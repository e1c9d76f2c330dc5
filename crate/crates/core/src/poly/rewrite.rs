use std::collections::BTreeSet;

use super::{Monomial, Polynomial, Var};

/// One rule `lhs -> 0`, either concrete or a template indexed by `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rule {
    Concrete(Monomial),
    /// `prod name_i^e` for every index `i`, e.g. `[("x",1),("y",1)]` is the
    /// family `x_i*y_i -> 0`.
    Schematic(Vec<(String, u32)>),
}

impl Rule {
    fn hits(&self, m: &Monomial) -> bool {
        match self {
            Rule::Concrete(lhs) => lhs.divides(m),
            Rule::Schematic(parts) => {
                let Some((first, _)) = parts.first() else {
                    return true;
                };
                let indices: BTreeSet<u32> = m
                    .support()
                    .filter(|v| v.name() == first)
                    .filter_map(|v| v.index())
                    .collect();
                indices
                    .into_iter()
                    .any(|i| parts.iter().all(|(name, e)| m.exponent(Var::indexed(name, i)) >= *e))
            }
        }
    }
}

/// A system of monomial-to-zero rules. Such systems are always terminating
/// and confluent: a term either survives unchanged or is deleted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RewriteSystem {
    rules: Vec<Rule>,
}

impl RewriteSystem {
    pub fn new(rules: Vec<Rule>) -> Self {
        RewriteSystem { rules }
    }

    /// `x_i*y_i -> 0, y_i^2 -> 0` for all `i`.
    pub fn xy_nilpotent_family(x: &str, y: &str) -> Self {
        RewriteSystem::new(vec![
            Rule::Schematic(vec![(x.into(), 1), (y.into(), 1)]),
            Rule::Schematic(vec![(y.into(), 2)]),
        ])
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn is_reducible(&self, m: &Monomial) -> bool {
        self.rules.iter().any(|r| r.hits(m))
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        p.filter_terms(|m| !self.is_reducible(m))
    }

    /// Product in the quotient ring.
    pub fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.normal_form(&(a * b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_polynomial, Domain};

    fn p(s: &str) -> Polynomial {
        parse_polynomial(s, Domain::Q).unwrap()
    }

    #[test]
    fn schematic_rules() {
        let rs = RewriteSystem::xy_nilpotent_family("x", "y");
        assert_eq!(rs.normal_form(&p("x_1*y_1 + x_1^2")), p("x_1^2"));
        assert_eq!(rs.normal_form(&p("y_1*y_2")), p("y_1*y_2"));
        assert!(rs.normal_form(&p("y_3^2")).is_zero());
        assert_eq!(rs.normal_form(&p("x_1*y_2 + y_2^2*x_5")), p("x_1*y_2"));
    }

    #[test]
    fn concrete_rules() {
        let rs = RewriteSystem::new(vec![Rule::Concrete(p("x^2").as_monomial().unwrap().clone())]);
        assert_eq!(rs.mul(&p("x+1"), &p("x+1")), p("2*x + 1"));
    }
}
