//! Recursive-descent parser for the polynomial surface grammar:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' integer)?
//! atom   := integer ('/' integer)? | variable | '(' expr ')'
//! variable := [a-zA-Z][a-zA-Z0-9]* ('_' digits)?
//! ```

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Domain, Monomial, Polynomial, Scalar, Var};
use crate::error::{Error, Result};

pub(crate) struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    domain: Domain,
    ambient: Option<&'a BTreeSet<Var>>,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(src: &'a str, domain: Domain, ambient: Option<&'a BTreeSet<Var>>) -> Self {
        Parser {
            src: src.as_bytes(),
            pos: 0,
            domain,
            ambient,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    pub(crate) fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                let t = self.term()?;
                acc = &acc + &t;
            } else if self.eat(b'-') {
                let t = self.term()?;
                acc = &acc - &t;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while self.eat(b'*') {
            let f = self.unary()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if self.eat(b'-') {
            Ok(-&self.unary()?)
        } else if self.eat(b'+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let Some(d) = self.digits() else {
                return self.err("expected integer exponent after `^`");
            };
            let Ok(e) = d.parse::<u32>() else {
                return self.err("exponent too large");
            };
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().unwrap().parse().unwrap();
                let mut value = Scalar::from_integer(num);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let Some(d) = self.digits() else {
                        return self.err("expected integer denominator after `/`");
                    };
                    let den: BigInt = d.parse().unwrap();
                    if den.is_zero() {
                        return self.err("zero denominator");
                    }
                    value /= Scalar::from_integer(den);
                }
                let c = self.domain.normalize(value).or_else(|e| self.err(e.to_string()))?;
                Ok(Polynomial::constant(self.domain, c))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let var = if self.src.get(self.pos) == Some(&b'_') {
                    self.pos += 1;
                    let Some(d) = self.digits_raw() else {
                        return self.err("expected index after `_`");
                    };
                    let Ok(i) = d.parse::<u32>() else {
                        return self.err("index too large");
                    };
                    Var::indexed(name, i)
                } else {
                    Var::new(name)
                };
                if let Some(amb) = self.ambient {
                    if !amb.contains(&var) {
                        return Err(Error::UnknownVariable(var.to_string()));
                    }
                }
                Ok(Polynomial::monomial(self.domain, Monomial::var(var)))
            }
            Some(c) => self.err(format!("unexpected `{}`", c as char)),
            None => self.err("unexpected end of input"),
        }
    }

    // digits without skipping whitespace (for `x_12`)
    fn digits_raw(&mut self) -> Option<&'a str> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    pub(crate) fn position(&mut self) -> usize {
        self.skip_ws();
        self.pos
    }
}

/// Parse a complete polynomial expression.
pub fn parse_polynomial(text: &str, domain: Domain) -> Result<Polynomial> {
    parse_polynomial_in(text, domain, None)
}

/// Parse with an optional fixed set of admissible variables.
pub fn parse_polynomial_in(text: &str, domain: Domain, ambient: Option<&BTreeSet<Var>>) -> Result<Polynomial> {
    let mut p = Parser::new(text, domain, ambient);
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Parse a leading expression and report how many bytes were consumed;
/// stops at the first byte that cannot continue the expression.
pub fn parse_polynomial_prefix(
    text: &str,
    domain: Domain,
    ambient: Option<&BTreeSet<Var>>,
) -> Result<(Polynomial, usize)> {
    let mut p = Parser::new(text, domain, ambient);
    let e = p.expr()?;
    let end = p.position();
    Ok((e, end))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn q(s: &str) -> Polynomial {
        parse_polynomial(s, Domain::Q).unwrap()
    }

    #[test]
    fn reads_terms_directly() {
        let p = q("x^2 + 2*x*y");
        let x = Var::new("x");
        let y = Var::new("y");
        assert_eq!(p.len(), 2);
        assert_eq!(p.coefficient(&Monomial::pow(x, 2)), Scalar::one());
        assert_eq!(
            p.coefficient(&Monomial::from_exponents([(x, 1), (y, 1)])),
            Scalar::from_integer(2.into())
        );
    }

    #[test]
    fn zero_and_cancellation() {
        assert!(q("0").is_zero());
        assert!(q("x*y - y*x").is_zero());
    }

    #[test]
    fn indexed_variables_and_rationals() {
        let p = q("3/4*x_1*y_12 - (x_1 + 1)^2");
        assert_eq!(p.to_string(), "-x_1^2 + 3/4*x_1*y_12 - 2*x_1 - 1");
        assert_eq!(q(&p.to_string()), p);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_polynomial("x + * y", Domain::Q) {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
        assert!(parse_polynomial("x^", Domain::Q).is_err());
        assert!(parse_polynomial("(x", Domain::Q).is_err());
        assert!(parse_polynomial("1/0", Domain::Q).is_err());
    }

    #[test]
    fn unknown_variable_only_with_fixed_ambient() {
        let amb: BTreeSet<Var> = [Var::new("x")].into_iter().collect();
        assert!(matches!(
            parse_polynomial_in("x + y", Domain::Q, Some(&amb)),
            Err(Error::UnknownVariable(v)) if v == "y"
        ));
        assert!(parse_polynomial("x + y", Domain::Q).is_ok());
    }

    #[test]
    fn prefix_parse_stops_at_delimiters() {
        let (p, used) = parse_polynomial_prefix("x + y, z)", Domain::Q, None).unwrap();
        assert_eq!(p, q("x+y"));
        assert_eq!(used, 5);
    }
}
