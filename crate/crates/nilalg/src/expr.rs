//! Parser for the scalar and polynomial literal grammar used by all file
//! formats: signed rationals `p/q`, the imaginary unit `i`, tower roots
//! `r1`/`r2`, indeterminate names, `^` integer powers, parentheses and
//! `+ - * /`. Parsing produces a [`RationalFunction`]; helpers narrow the
//! result to a polynomial or a scalar.

use crate::scalar::{Scalar, Tower};
use crate::symbolic::{Polynomial, RationalFunction, RfError, Var};
use num::bigint::BigInt;
use num::rational::BigRational;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ParseError {
    #[error("unexpected character {0:?} at position {1}")]
    UnexpectedChar(char, usize),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("root {0} not available in the declared tower")]
    RootUnavailable(String),
    #[error("division by zero in literal")]
    DivisionByZero,
    #[error("exponent out of range")]
    BadExponent,
    #[error("trailing input at position {0}")]
    TrailingInput(usize),
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Sym(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<Tok>, ParseError> {
    let mut toks = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        match c {
            ' ' | '\t' | '\n' => k += 1,
            '+' => {
                toks.push(Tok::Plus);
                k += 1;
            }
            '-' | '−' => {
                toks.push(Tok::Minus);
                k += 1;
            }
            '*' => {
                toks.push(Tok::Star);
                k += 1;
            }
            '/' => {
                toks.push(Tok::Slash);
                k += 1;
            }
            '^' => {
                toks.push(Tok::Caret);
                k += 1;
            }
            '(' => {
                toks.push(Tok::LParen);
                k += 1;
            }
            ')' => {
                toks.push(Tok::RParen);
                k += 1;
            }
            '0'..='9' => {
                let start = k;
                while k < chars.len() && chars[k].is_ascii_digit() {
                    k += 1;
                }
                let text: String = chars[start..k].iter().collect();
                toks.push(Tok::Int(text.parse().expect("digits")));
            }
            c if c.is_ascii_alphabetic() => {
                let start = k;
                while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                    k += 1;
                }
                toks.push(Tok::Sym(chars[start..k].iter().collect()));
            }
            other => return Err(ParseError::UnexpectedChar(other, k)),
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
    tower: &'a Arc<Tower>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<RationalFunction, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.next();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.next();
                    acc = acc.mul(&self.factor()?);
                }
                Some(Tok::Slash) => {
                    self.next();
                    let d = self.factor()?;
                    acc = acc.div(&d).map_err(|_| ParseError::DivisionByZero)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RationalFunction, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.next();
                Ok(self.factor()?.neg())
            }
            Some(Tok::Plus) => {
                self.next();
                self.factor()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RationalFunction, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.next();
            let neg = if let Some(Tok::Minus) = self.peek() {
                self.next();
                true
            } else {
                false
            };
            match self.next() {
                Some(Tok::Int(n)) => {
                    let e: u32 = n.try_into().map_err(|_| ParseError::BadExponent)?;
                    if e > 64 {
                        return Err(ParseError::BadExponent);
                    }
                    let mut acc = RationalFunction::one();
                    for _ in 0..e {
                        acc = acc.mul(&base);
                    }
                    if neg {
                        acc = acc.inv().map_err(|_| ParseError::DivisionByZero)?;
                    }
                    Ok(acc)
                }
                _ => Err(ParseError::BadExponent),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<RationalFunction, ParseError> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(RationalFunction::from_scalar(Scalar::from_rational(
                BigRational::from_integer(n),
            ))),
            Some(Tok::Sym(name)) => match name.as_str() {
                "i" => Ok(RationalFunction::from_scalar(Scalar::i())),
                "r1" | "r2" => {
                    let k = if name == "r1" { 0 } else { 1 };
                    if self.tower.depth() <= k {
                        return Err(ParseError::RootUnavailable(name));
                    }
                    Ok(RationalFunction::from_scalar(self.tower.root(k)))
                }
                other => match Var::from_name(other) {
                    Some(v) => Ok(RationalFunction::var(v)),
                    None => Err(ParseError::UnknownSymbol(other.to_string())),
                },
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(ParseError::UnexpectedEnd),
                }
            }
            Some(_) | None => Err(ParseError::UnexpectedEnd),
        }
    }
}

/// Parse an expression as a rational function within `tower`.
pub fn parse_rf(s: &str, tower: &Arc<Tower>) -> Result<RationalFunction, ParseError> {
    let toks = lex(s)?;
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        tower,
    };
    let rf = p.expr()?;
    if p.pos != toks.len() {
        return Err(ParseError::TrailingInput(p.pos));
    }
    Ok(rf)
}

/// Parse in the trivial tower (no roots available).
pub fn parse_rf_plain(s: &str) -> Result<RationalFunction, ParseError> {
    parse_rf(s, &Tower::base())
}

pub fn parse_polynomial(s: &str, tower: &Arc<Tower>) -> Result<Polynomial, RfError> {
    let rf = parse_rf(s, tower).map_err(|_| RfError::NotPolynomial)?;
    rf.as_polynomial().ok_or(RfError::NotPolynomial)
}

pub fn parse_scalar(s: &str, tower: &Arc<Tower>) -> Result<Scalar, RfError> {
    let rf = parse_rf(s, tower).map_err(|_| RfError::NotScalar)?;
    rf.as_scalar().ok_or(RfError::NotScalar)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::adjoin_sqrt;

    #[test]
    fn parses_rationals_and_i() {
        let t = Tower::base();
        let s = parse_scalar("1/2 - 1/2*i", &t).unwrap();
        assert_eq!(s.to_string(), "1/2 - 1/2*i");
        let s2 = parse_scalar("-(3/4)", &t).unwrap();
        assert_eq!(s2, Scalar::from_fraction(-3, 4));
    }

    #[test]
    fn parses_polynomials() {
        let t = Tower::base();
        let p = parse_polynomial("2*t*(alpha+t)", &t).unwrap();
        assert_eq!(p.to_string(), "2*t^2 + 2*t*alpha");
        let rf = parse_rf("1/t^2", &t).unwrap();
        assert_eq!(rf.to_string(), "(1)/(t^2)");
    }

    #[test]
    fn parses_roots_in_tower() {
        let base = Tower::base();
        let (t1, r) = adjoin_sqrt(&base, &Scalar::from_int(5)).unwrap();
        let s = parse_scalar("2*r1 + 1", &t1).unwrap();
        assert_eq!(s, Scalar::in_tower(&t1, crate::scalar::Gauss::from_int(1)).add(&r.mul_int(2)));
        assert!(parse_scalar("r2", &t1).is_err());
    }

    #[test]
    fn negative_powers_become_fractions() {
        let t = Tower::base();
        let rf = parse_rf("t^-2", &t).unwrap();
        assert_eq!(rf.to_string(), "(1)/(t^2)");
    }

    #[test]
    fn roundtrip_display_parse() {
        let t = Tower::base();
        for src in ["x1^2 - x2*x3 + 1/3", "(1+i)*t^2 - alpha", "-t + 2"] {
            let p = parse_polynomial(src, &t).unwrap();
            let p2 = parse_polynomial(&p.to_string(), &t).unwrap();
            assert_eq!(p, p2);
        }
    }
}
