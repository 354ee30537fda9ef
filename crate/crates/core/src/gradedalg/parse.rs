//! The shared polynomial text grammar.
//!
//! ```text
//! poly   := ['-'] term (('+'|'-') term)*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! coeff  := integer | integer '/' positive-integer
//! factor := name ('^' positive-integer)?
//! name   := 'p'INT | 'c'INT | 'Q'INT | 'ch'INT | 'ph'INT | 'e' | 'e'INT | 'x' | 'E'INT'_'INT
//! ```
//!
//! Parsing yields an [`Expr`]; what a name means is decided when the
//! expression is evaluated against a resolver.

use std::sync::Arc;

use num::{BigInt, One, Zero};

use super::alphabet::GeneratorAlphabet;
use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::exactq::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub name: String,
    pub power: u32,
    pub offset: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExprTerm {
    pub coeff: Rational,
    pub factors: Vec<Factor>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr {
    pub terms: Vec<ExprTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn err(offset: usize, token: &str, message: &str) -> Error {
    Error::Parse {
        offset,
        token: token.to_string(),
        message: message.to_string(),
    }
}

fn lex(input: &str) -> Result<Vec<(Tok, usize, String)>> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i];
        let start = i;
        match ch {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' | b'-' | b'*' | b'/' | b'^' => {
                let tok = match ch {
                    b'+' => Tok::Plus,
                    b'-' => Tok::Minus,
                    b'*' => Tok::Star,
                    b'/' => Tok::Slash,
                    _ => Tok::Caret,
                };
                i += 1;
                out.push((tok, start, (ch as char).to_string()));
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &input[start..i];
                let n: BigInt = text.parse().expect("digit run parses");
                out.push((Tok::Int(n), start, text.to_string()));
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                    i += 1;
                }
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == b'_' {
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                let text = &input[start..i];
                validate_name(text, start)?;
                out.push((Tok::Name(text.to_string()), start, text.to_string()));
            }
            _ => {
                let c = input[start..].chars().next().unwrap_or('?');
                return Err(err(start, &c.to_string(), "unexpected character"));
            }
        }
    }
    Ok(out)
}

fn validate_name(text: &str, offset: usize) -> Result<()> {
    let letters: String = text.chars().take_while(|c| c.is_ascii_alphabetic()).collect();
    let rest = &text[letters.len()..];
    let positive_index = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) && !s.trim_start_matches('0').is_empty();
    let ok = match letters.as_str() {
        "p" | "c" | "Q" | "ch" | "ph" => positive_index(rest),
        "e" => rest.is_empty() || positive_index(rest),
        "x" => rest.is_empty(),
        "E" => match rest.split_once('_') {
            Some((deg, ord)) => positive_index(deg) && positive_index(ord),
            None => false,
        },
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(err(offset, text, "unknown generator name"))
    }
}

struct Parser {
    toks: Vec<(Tok, usize, String)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn here(&self) -> (usize, String) {
        match self.toks.get(self.pos) {
            Some((_, off, text)) => (*off, text.clone()),
            None => (self.len, "<end>".to_string()),
        }
    }

    fn fail<T>(&self, message: &str) -> Result<T> {
        let (off, text) = self.here();
        Err(err(off, &text, message))
    }

    fn positive_int(&mut self) -> Result<BigInt> {
        match self.peek() {
            Some(Tok::Int(n)) if !n.is_zero() => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            _ => self.fail("expected a positive integer"),
        }
    }

    fn factor(&mut self) -> Result<Factor> {
        let (offset, _) = self.here();
        let name = match self.peek() {
            Some(Tok::Name(n)) => n.clone(),
            _ => return self.fail("expected a generator name"),
        };
        self.pos += 1;
        let mut power = 1u32;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let n = self.positive_int()?;
            power = u32::try_from(n).or_else(|_| self.fail("exponent too large"))?;
        }
        Ok(Factor {
            name,
            power,
            offset,
        })
    }

    fn term(&mut self) -> Result<ExprTerm> {
        let mut coeff = Rational::one();
        let mut factors = Vec::new();
        match self.peek() {
            Some(Tok::Int(n)) => {
                let num = n.clone();
                self.pos += 1;
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    let den = self.positive_int()?;
                    coeff = Rational::new(num, den);
                } else {
                    coeff = Rational::from_integer(num);
                }
            }
            Some(Tok::Name(_)) => factors.push(self.factor()?),
            _ => return self.fail("expected a coefficient or generator"),
        }
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        Ok(ExprTerm { coeff, factors })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = Vec::new();
        let mut negative = false;
        if self.peek() == Some(&Tok::Minus) {
            negative = true;
            self.pos += 1;
        }
        loop {
            let mut t = self.term()?;
            if negative {
                t.coeff = -t.coeff;
            }
            terms.push(t);
            match self.peek() {
                None => break,
                Some(Tok::Plus) => negative = false,
                Some(Tok::Minus) => negative = true,
                Some(_) => return self.fail("expected `+`, `-` or `*`"),
            }
            self.pos += 1;
        }
        Ok(Expr { terms })
    }
}

pub fn parse_expr(input: &str) -> Result<Expr> {
    let toks = lex(input)?;
    let mut p = Parser {
        toks,
        pos: 0,
        len: input.len(),
    };
    if p.peek().is_none() {
        return p.fail("empty expression");
    }
    p.expr()
}

impl Expr {
    /// Evaluates the expression in the ring over `alphabet`, asking
    /// `resolve` for the value of each named factor. Factors are multiplied
    /// left to right, so odd generators pick up their Koszul signs.
    pub fn evaluate<F>(&self, alphabet: &Arc<GeneratorAlphabet>, mut resolve: F) -> Result<Polynomial>
    where
        F: FnMut(&Factor) -> Result<Polynomial>,
    {
        let mut total = Polynomial::zero(alphabet);
        for term in &self.terms {
            let mut value = Polynomial::constant(alphabet, term.coeff.clone());
            for f in &term.factors {
                let base = resolve(f)?;
                value = value.multiply(&base.pow(f.power))?;
            }
            total = total.try_add(&value)?;
        }
        Ok(total)
    }

    pub fn factors(&self) -> impl Iterator<Item = &Factor> {
        self.terms.iter().flat_map(|t| t.factors.iter())
    }
}

/// Parses text whose names are all generators of `alphabet`.
pub fn parse_polynomial(input: &str, alphabet: &Arc<GeneratorAlphabet>) -> Result<Polynomial> {
    let expr = parse_expr(input)?;
    expr.evaluate(alphabet, |f| match alphabet.position(&f.name) {
        Some(i) => Ok(Polynomial::generator_at(alphabet, i)),
        None => Err(Error::UnknownGenerator(f.name.clone())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactq::ratio;

    fn bso() -> Arc<GeneratorAlphabet> {
        GeneratorAlphabet::indexed("p", 4, 4).shared()
    }

    #[test]
    fn parses_and_prints_canonically() {
        let a = bso();
        let p = parse_polynomial("7/45*p2 - 1/45 * p1^2", &a).unwrap();
        assert_eq!(p.to_string(), "-1/45*p1^2 + 7/45*p2");
        let q = parse_polynomial("-p1 + 3 + p1", &a).unwrap();
        assert_eq!(q.to_string(), "3");
        assert_eq!(parse_polynomial("0", &a).unwrap().to_string(), "0");
    }

    #[test]
    fn coefficients_reduce_to_lowest_terms() {
        let a = bso();
        let p = parse_polynomial("4/6*p1", &a).unwrap();
        assert_eq!(p.terms().next().unwrap().1, &ratio(2, 3));
    }

    #[test]
    fn errors_name_the_offending_token() {
        let a = bso();
        match parse_polynomial("p1 + z3", &a) {
            Err(Error::Parse { token, offset, .. }) => {
                assert_eq!(token, "z3");
                assert_eq!(offset, 5);
            }
            other => panic!("unexpected {other:?}"),
        }
        match parse_polynomial("p1 +", &a) {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "<end>"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_polynomial("1/0*p1", &a), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("p0", &a), Err(Error::Parse { .. })));
        assert!(matches!(parse_polynomial("E3", &a), Err(Error::Parse { .. })));
        assert_eq!(
            parse_polynomial("p9", &a),
            Err(Error::UnknownGenerator("p9".into()))
        );
    }

    #[test]
    fn accepts_every_name_form() {
        for name in ["p1", "c12", "Q3", "ch2", "ph4", "e", "e7", "x", "E5_2"] {
            let e = parse_expr(&format!("2*{name}^3")).unwrap();
            let f = e.factors().next().unwrap();
            assert_eq!(f.name, name);
            assert_eq!(f.power, 3);
        }
    }
}
