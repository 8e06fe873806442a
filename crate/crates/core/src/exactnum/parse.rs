//! Reader for the polynomial text format.
//!
//! Accepts the canonical output of [`MultiPoly`]'s `Display` plus the compact
//! hand-written form used in golden tables: juxtaposition multiplies
//! (`2c1^2c2`), `/` divides by a nonzero constant, `^` takes a nonnegative
//! integer exponent.

use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::MultiPoly;
use super::symbol::Symbol;
use super::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Sym(Symbol),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |pos: usize, msg: &str| Error::Parse {
        pos,
        msg: msg.to_string(),
    };
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        let tok = match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(src[start..i].parse().unwrap())));
                continue;
            }
            b'd' | b'm' | b't' => {
                if bytes.get(i + 1).is_some_and(|c| c.is_ascii_digit()) {
                    return Err(err(i, "symbol followed by a digit is ambiguous"));
                }
                Tok::Sym(src[i..i + 1].parse()?)
            }
            b'c' | b'f' | b'e' => {
                let end = i + 2;
                if end > bytes.len() || !bytes[i + 1].is_ascii_digit() {
                    return Err(err(i, "indexed symbol needs a digit"));
                }
                if bytes.get(end).is_some_and(|c| c.is_ascii_digit()) {
                    return Err(err(i, "symbol index out of range"));
                }
                let sym = src[i..end].parse().map_err(|_| err(i, "unknown symbol"))?;
                out.push((start, Tok::Sym(sym)));
                i = end;
                continue;
            }
            _ => return Err(err(i, "unexpected character")),
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.len)
    }

    fn fail<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse {
            pos: self.offset(),
            msg: msg.to_string(),
        })
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc += self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc -= self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.pos += 1;
                    let den = self.unary()?;
                    match den.as_constant() {
                        Some(c) if !c.is_zero() => acc = acc.scale(&c.recip()),
                        Some(_) => return self.fail("division by zero"),
                        None => return self.fail("divisor must be a constant"),
                    }
                }
                Some(Tok::Num(_)) | Some(Tok::Sym(_)) | Some(Tok::LParen) => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-self.unary()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = n.try_into().or_else(|_| self.fail("exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => self.fail("expected an integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(MultiPoly::constant(Rational::from_integer(n)))
            }
            Some(Tok::Sym(s)) => {
                self.pos += 1;
                Ok(MultiPoly::var(s))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.fail("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => self.fail("expected a number, symbol or `(`"),
        }
    }
}

/// Parses polynomial text into a [`MultiPoly`].
pub fn parse_poly(src: &str) -> Result<MultiPoly> {
    let toks = lex(src)?;
    let mut parser = Parser {
        toks,
        pos: 0,
        len: src.len(),
    };
    let p = parser.expr()?;
    if parser.pos != parser.toks.len() {
        return parser.fail("trailing input");
    }
    Ok(p)
}

impl std::str::FromStr for MultiPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn implicit_multiplication() {
        let a = parse_poly("2c1^2c2+c2^2+c1c3-4c4").unwrap();
        let b = parse_poly("2*c1^2*c2 + c2^2 + c1*c3 - 4*c4").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "2*c1^2*c2 + c1*c3 + c2^2 - 4*c4");
    }

    #[test]
    fn fractions_and_unary_minus() {
        let p = parse_poly("-(d)/(40)(-10+3d)m^5").unwrap();
        let q = parse_poly("-3/40*d^2*m^5 + 1/4*d*m^5").unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn canonical_text_reparses() {
        let p = parse_poly("(d-1)^3*(m+t)/7 - 5/3*e2*f1").unwrap();
        assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn errors() {
        assert!(parse_poly("d/(d-1)").is_err());
        assert!(parse_poly("x+1").is_err());
        assert!(parse_poly("(d+1").is_err());
        assert!(parse_poly("c9").is_err());
        assert!(parse_poly("d^m").is_err());
        assert!(parse_poly("1/0").is_err());
    }
}
