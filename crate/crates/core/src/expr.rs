//! Small polynomial expressions such as `x^2 - 3*x + 1`, `(1+Z)^3` or
//! `pi + 1`, read over a p-adic field.
//!
//! Names: the chosen variable, `pi` (the field's uniformizer), `u` (the
//! unramified generator) and `p`. Division is allowed by constants only.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::padic::{PadicElement, PadicField};
use crate::series::Polynomial;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Name(String),
    Op(char),
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
            }
            out.push(Token::Int(s.parse().expect("digits")));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_alphanumeric() || **d == '_') {
                s.push(d);
                chars.next();
            }
            out.push(Token::Name(s));
        } else if "+-*/^()".contains(c) {
            out.push(Token::Op(c));
            chars.next();
        } else {
            return Err(Error::Parse(format!("unexpected character {c:?} in {src:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    field: &'a Arc<PadicField>,
    var: &'a str,
    tokens: Vec<Token>,
    pos: usize,
}

type Poly = Polynomial<PadicElement>;

impl Parser<'_> {
    fn peek_op(&self) -> Option<char> {
        match self.tokens.get(self.pos) {
            Some(Token::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expect_op(&mut self, c: char) -> Result<()> {
        if self.peek_op() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Parse(format!("expected {c:?} at token {}", self.pos)))
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { acc.add(&rhs)? } else { acc.sub(&rhs)? };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if op == '*' {
                acc.mul(&rhs)?
            } else {
                if rhs.degree().unwrap_or(0) > 0 {
                    return Err(Error::Parse("division by a non-constant".into()));
                }
                acc.scale(&rhs.coeff(0).inv()?)
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Poly> {
        if self.peek_op() == Some('-') {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        if self.peek_op() == Some('+') {
            self.pos += 1;
        }
        self.power()
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek_op() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let k = match self.tokens.get(self.pos) {
            Some(Token::Int(k)) => u32::try_from(k).map_err(|_| Error::Parse(format!("exponent {k} too large")))?,
            _ => return Err(Error::Parse("exponent must be a non-negative integer".into())),
        };
        self.pos += 1;
        let mut acc = Polynomial::constant(self.field.one());
        for _ in 0..k {
            acc = acc.mul(&base)?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Poly> {
        let tok = self
            .tokens
            .get(self.pos)
            .cloned()
            .ok_or_else(|| Error::Parse("unexpected end of expression".into()))?;
        self.pos += 1;
        match tok {
            Token::Int(n) => Ok(Polynomial::constant(PadicElement::from_bigint(self.field, &n))),
            Token::Name(name) if name == self.var => Ok(Polynomial::monomial(self.field.one(), 1)),
            Token::Name(name) => {
                let c = match name.as_str() {
                    "pi" => self.field.uniformizer(),
                    "u" => self.field.unramified_generator(),
                    "p" => self.field.from_int(self.field.p() as i64),
                    _ => return Err(Error::Parse(format!("unknown name {name:?}"))),
                };
                Ok(Polynomial::constant(c))
            }
            Token::Op('(') => {
                let inner = self.expr()?;
                self.expect_op(')')?;
                Ok(inner)
            }
            Token::Op(c) => Err(Error::Parse(format!("unexpected {c:?}"))),
        }
    }
}

/// Polynomial in `var` with coefficients in `field`.
pub fn parse_polynomial(field: &Arc<PadicField>, var: &str, src: &str) -> Result<Polynomial<PadicElement>> {
    let mut parser = Parser {
        field,
        var,
        tokens: tokenize(src)?,
        pos: 0,
    };
    let poly = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse(format!("trailing input in {src:?}")));
    }
    Ok(poly)
}

/// A constant expression.
pub fn parse_element(field: &Arc<PadicField>, src: &str) -> Result<PadicElement> {
    let poly = parse_polynomial(field, "", src)?;
    if poly.degree().unwrap_or(0) > 0 {
        return Err(Error::Parse(format!("{src:?} is not a constant")));
    }
    Ok(poly.coeff(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomials() {
        let k = PadicField::qp(5, 20).unwrap();
        let f = parse_polynomial(&k, "x", "x^2 - 3*x + 1").unwrap();
        let want = Polynomial::new(vec![k.from_int(1), k.from_int(-3), k.from_int(1)]).unwrap();
        assert_eq!(f.coeffs(), want.coeffs());
        let g = parse_polynomial(&k, "Z", "(1+Z)^2 - 1").unwrap();
        assert_eq!(g.coeff(1), k.from_int(2));
        assert_eq!(g.coeff(2), k.one());
        assert!(g.coeff(0).is_zero());
    }

    #[test]
    fn constants() {
        let l = PadicField::new(3, 1, 2, 20).unwrap();
        let x = parse_element(&l, "pi + 1").unwrap();
        assert_eq!(x, l.uniformizer().add(&l.one()));
        let k = PadicField::qp(3, 20).unwrap();
        assert_eq!(parse_element(&k, "1/2").unwrap().mul_int(2), k.one());
        assert!(parse_element(&k, "x").is_err());
        assert!(parse_element(&k, "1 +").is_err());
        assert!(parse_polynomial(&k, "x", "x/x").is_err());
    }
}
