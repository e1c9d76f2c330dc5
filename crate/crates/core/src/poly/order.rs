use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use super::{Monomial, Var};

/// Monomial orders.
///
/// All orders treat variables that sort earlier as larger (`x > y`).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub enum TermOrder {
    Lex,
    #[default]
    Grevlex,
    /// Block order: grevlex on the front block first, ties broken by grevlex
    /// on the remaining variables. Eliminates the front block.
    Elimination(BTreeSet<Var>),
}

fn grevlex_cmp<'a>(
    a: impl DoubleEndedIterator<Item = &'a (Var, u32)> + Clone,
    b: impl DoubleEndedIterator<Item = &'a (Var, u32)> + Clone,
) -> Ordering {
    let da: u32 = a.clone().map(|&(_, e)| e).sum();
    let db: u32 = b.clone().map(|&(_, e)| e).sum();
    if da != db {
        return da.cmp(&db);
    }
    // Walk from the smallest variable; the first difference decides, and the
    // smaller exponent there belongs to the larger monomial.
    let mut ia = a.rev().peekable();
    let mut ib = b.rev().peekable();
    loop {
        match (ia.peek(), ib.peek()) {
            (None, None) => return Ordering::Equal,
            (Some(&&(v, ea)), Some(&&(w, eb))) => {
                if v == w {
                    if ea != eb {
                        return eb.cmp(&ea);
                    }
                    ia.next();
                    ib.next();
                } else if v > w {
                    // `a` has a positive exponent on a smaller variable.
                    return Ordering::Less;
                } else {
                    return Ordering::Greater;
                }
            }
            (Some(_), None) => return Ordering::Less,
            (None, Some(_)) => return Ordering::Greater,
        }
    }
}

fn lex_cmp(a: &[(Var, u32)], b: &[(Var, u32)]) -> Ordering {
    let (mut i, mut j) = (0, 0);
    loop {
        match (a.get(i), b.get(j)) {
            (None, None) => return Ordering::Equal,
            (Some(&(v, ea)), Some(&(w, eb))) => {
                if v == w {
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                    i += 1;
                    j += 1;
                } else if v < w {
                    return Ordering::Greater;
                } else {
                    return Ordering::Less;
                }
            }
            (Some(_), None) => return Ordering::Greater,
            (None, Some(_)) => return Ordering::Less,
        }
    }
}

impl TermOrder {
    pub fn elimination<I: IntoIterator<Item = Var>>(front: I) -> Self {
        TermOrder::Elimination(front.into_iter().collect())
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Lex => lex_cmp(a.exponents(), b.exponents()),
            TermOrder::Grevlex => grevlex_cmp(a.exponents().iter(), b.exponents().iter()),
            TermOrder::Elimination(front) => {
                let fa = a.exponents().iter().filter(|(v, _)| front.contains(v));
                let fb = b.exponents().iter().filter(|(v, _)| front.contains(v));
                grevlex_cmp(fa.clone(), fb.clone()).then_with(|| {
                    let ra = a.exponents().iter().filter(|(v, _)| !front.contains(v));
                    let rb = b.exponents().iter().filter(|(v, _)| !front.contains(v));
                    grevlex_cmp(ra, rb)
                })
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }

    /// Integer key whose lexicographic order agrees with `self` on monomials
    /// over `vars` (sorted ascending). `exps[i]` is the exponent of `vars[i]`.
    pub fn dense_key(&self, vars: &[Var], exps: &[u32]) -> Vec<i64> {
        fn grevlex_key(out: &mut Vec<i64>, exps: impl DoubleEndedIterator<Item = u32> + Clone) {
            out.push(exps.clone().map(i64::from).sum());
            out.extend(exps.rev().map(|e| -i64::from(e)));
        }
        let mut key = Vec::with_capacity(exps.len() + 2);
        match self {
            TermOrder::Lex => key.extend(exps.iter().map(|&e| i64::from(e))),
            TermOrder::Grevlex => grevlex_key(&mut key, exps.iter().copied()),
            TermOrder::Elimination(front) => {
                let is_front: Vec<bool> = vars.iter().map(|v| front.contains(v)).collect();
                let f = exps.iter().zip(&is_front).filter(|(_, &b)| b).map(|(&e, _)| e);
                let r = exps.iter().zip(&is_front).filter(|(_, &b)| !b).map(|(&e, _)| e);
                grevlex_key(&mut key, f);
                grevlex_key(&mut key, r);
            }
        }
        key
    }

    pub fn name(&self) -> &'static str {
        match self {
            TermOrder::Lex => "lex",
            TermOrder::Grevlex => "grevlex",
            TermOrder::Elimination(_) => "elim",
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermOrder::Elimination(front) => {
                let names: Vec<String> = front.iter().map(|v| v.to_string()).collect();
                write!(f, "elim({})", names.join(","))
            }
            other => f.write_str(other.name()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(&str, u32)]) -> Monomial {
        Monomial::from_exponents(pairs.iter().map(|&(n, e)| (Var::new(n), e)))
    }

    #[test]
    fn lex_prefers_earlier_variables() {
        let o = TermOrder::Lex;
        assert_eq!(o.cmp(&m(&[("x", 1)]), &m(&[("y", 5)])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[("x", 1), ("y", 1)]), &m(&[("x", 1)])), Ordering::Greater);
    }

    #[test]
    fn grevlex_textbook_cases() {
        let o = TermOrder::Grevlex;
        // x*z^2 < y^3 in grevlex (same degree, z exponent decides)
        assert_eq!(o.cmp(&m(&[("x", 1), ("z", 2)]), &m(&[("y", 3)])), Ordering::Less);
        // x^2 > x*y > y^2
        assert_eq!(o.cmp(&m(&[("x", 2)]), &m(&[("x", 1), ("y", 1)])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[("x", 1), ("y", 1)]), &m(&[("y", 2)])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[("y", 1)]), &m(&[("x", 2)])), Ordering::Less);
    }

    #[test]
    fn elimination_puts_front_block_first() {
        let o = TermOrder::elimination([Var::new("t")]);
        assert_eq!(o.cmp(&m(&[("t", 1)]), &m(&[("x", 9)])), Ordering::Greater);
        assert_eq!(
            o.cmp(&m(&[("t", 1), ("y", 1)]), &m(&[("t", 1), ("x", 1)])),
            Ordering::Less
        );
    }
}
