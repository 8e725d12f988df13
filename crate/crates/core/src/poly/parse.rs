use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Polynomial, Rational, Ring};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Int(digits.parse().unwrap()), col));
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => return Err(Error::Syntax { column: col, message: format!("unexpected character `{c}`") }),
        };
        out.push((tok, col));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    ring: &'a Arc<Ring>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, c)| *c)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { column: self.column(), message: message.into() })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Int(e)) => {
                    let Ok(e) = u32::try_from(e) else {
                        return self.err("exponent too large");
                    };
                    self.pos += 1;
                    return Ok(base.pow(e));
                }
                _ => return self.err("expected a nonnegative integer exponent"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let col = self.column();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let mut value = Rational::from_integer(n);
                if let Some(Tok::Slash) = self.peek() {
                    self.pos += 1;
                    let dcol = self.column();
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) => {
                            self.pos += 1;
                            if d.is_zero() {
                                return Err(Error::ZeroDenominator { column: dcol });
                            }
                            value /= Rational::from_integer(d);
                        }
                        _ => return self.err("expected an integer denominator"),
                    }
                }
                Ok(Polynomial::constant(self.ring, value))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match self.ring.index_of(&name) {
                    Some(i) => Ok(Polynomial::var(self.ring, i)),
                    None => Err(Error::UnknownVariable { name, column: col }),
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => self.err("expected `)`"),
                }
            }
            Some(_) => self.err("unexpected token"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a polynomial expression over `ring`.
///
/// Grammar: sums and differences of products of factors, where a factor is an
/// optionally negated power `atom ^ n` and an atom is an integer, a rational
/// literal `a/b`, a variable or a parenthesised expression. Multiplication
/// must be written explicitly.
pub fn parse_poly(text: &str, ring: &Arc<Ring>) -> Result<Polynomial> {
    let toks = tokenize(text)?;
    let end = text.chars().count() + 1;
    let mut parser = Parser { toks, pos: 0, end, ring };
    let p = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return parser.err("unexpected trailing input");
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;
    use num_traits::One;

    #[test]
    fn parses_laplacian_symbol() {
        let r = Ring::new(["x1", "x2"]).unwrap();
        let p = parse_poly("x1^2+x2^2", &r).unwrap();
        let expected = [(Rational::one(), Monomial::new([2, 0])), (Rational::one(), Monomial::new([0, 2]))];
        assert_eq!(p.terms(), &expected[..]);
    }

    #[test]
    fn zero_and_cancellation() {
        let r = Ring::new(["x", "y"]).unwrap();
        assert!(parse_poly("0", &r).unwrap().is_zero());
        assert!(parse_poly("-3/2*x*y^2 + y^2*x*-3/2 + 3*x*y^2", &r).unwrap().is_zero());
        let p = parse_poly("-3/2*x*y^2 + y^2*x*-3/2", &r).unwrap();
        assert_eq!(p.to_string(), "-3*x*y^2");
    }

    #[test]
    fn precedence() {
        let r = Ring::new(["x", "y"]).unwrap();
        assert_eq!(parse_poly("-x^2", &r).unwrap().to_string(), "-x^2");
        assert_eq!(parse_poly("2*x^2*3", &r).unwrap().to_string(), "6*x^2");
        assert_eq!(parse_poly("(x+y)^2", &r).unwrap().to_string(), "x^2+2*x*y+y^2");
        assert_eq!(parse_poly(" x * ( y - 1 ) ", &r).unwrap().to_string(), "x*y-x");
    }

    #[test]
    fn errors_carry_positions() {
        let r = Ring::new(["x", "y"]).unwrap();
        assert_eq!(parse_poly("x + z", &r), Err(Error::UnknownVariable { name: "z".into(), column: 5 }));
        assert_eq!(parse_poly("3/0*x", &r), Err(Error::ZeroDenominator { column: 3 }));
        assert!(matches!(parse_poly("2x", &r), Err(Error::Syntax { column: 2, .. })));
        assert!(matches!(parse_poly("x+", &r), Err(Error::Syntax { column: 3, .. })));
        assert!(matches!(parse_poly("x^y", &r), Err(Error::Syntax { .. })));
        assert!(matches!(parse_poly("x$", &r), Err(Error::Syntax { column: 2, .. })));
    }
}
