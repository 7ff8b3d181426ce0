//! Text grammar for polynomials:
//!
//! ```text
//! poly   := sign? term (sign term)*
//! term   := factor ('*' factor)*
//! factor := int ('/' int)? | var ('^' int)?
//! var    := ('x' | 'y') index
//! ```
//!
//! Whitespace is ignored. A single input must use one variable prefix.

use num_bigint::BigInt;

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(char, usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (pos, c) = chars[i];
        match c {
            c if c.is_whitespace() => i += 1,
            '+' | '-' | '*' | '/' | '^' => {
                out.push((
                    pos,
                    match c {
                        '+' => Tok::Plus,
                        '-' => Tok::Minus,
                        '*' => Tok::Star,
                        '/' => Tok::Slash,
                        _ => Tok::Caret,
                    },
                ));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().map(|(_, c)| c).collect();
                out.push((pos, Tok::Int(s.parse().expect("digits"))));
            }
            'x' | 'y' => {
                i += 1;
                let start = i;
                while i < chars.len() && chars[i].1.is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return Err(err(pos, format!("expected variable index after `{c}`")));
                }
                let s: String = chars[start..i].iter().map(|(_, c)| c).collect();
                let idx: usize = s.parse().map_err(|_| err(pos, "variable index too large"))?;
                if idx == 0 {
                    return Err(err(pos, "variable indices start at 1"));
                }
                out.push((pos, Tok::Var(c, idx)));
            }
            _ => return Err(err(pos, format!("unexpected character `{c}`"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    prefix: Option<char>,
    max_index: usize,
}

/// A term before the variable count is known: coefficient and sparse exponents.
type RawTerm = (Rational, Vec<(usize, u32)>);

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn int(&mut self, what: &str) -> Result<BigInt> {
        match self.toks.get(self.at) {
            Some((_, Tok::Int(v))) => {
                let v = v.clone();
                self.at += 1;
                Ok(v)
            }
            _ => Err(err(self.pos(), format!("expected {what}"))),
        }
    }

    fn poly(&mut self) -> Result<Vec<RawTerm>> {
        let mut terms = Vec::new();
        let mut sign = match self.peek() {
            Some(Tok::Minus) => {
                self.at += 1;
                -1
            }
            Some(Tok::Plus) => {
                self.at += 1;
                1
            }
            _ => 1,
        };
        loop {
            let (c, e) = self.term()?;
            let c = if sign < 0 { -c } else { c };
            terms.push((c, e));
            match self.peek() {
                None => break,
                Some(Tok::Plus) => sign = 1,
                Some(Tok::Minus) => sign = -1,
                Some(_) => return Err(err(self.pos(), "expected `+`, `-` or end of input")),
            }
            self.at += 1;
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<RawTerm> {
        let mut coeff = Rational::ONE;
        let mut exps: Vec<(usize, u32)> = Vec::new();
        loop {
            self.factor(&mut coeff, &mut exps)?;
            if self.peek() == Some(&Tok::Star) {
                self.at += 1;
            } else {
                break;
            }
        }
        Ok((coeff, exps))
    }

    fn factor(&mut self, coeff: &mut Rational, exps: &mut Vec<(usize, u32)>) -> Result<()> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(_)) => {
                let num = self.int("integer")?;
                let den = if self.peek() == Some(&Tok::Slash) {
                    self.at += 1;
                    let d = self.int("denominator")?;
                    if d == BigInt::from(0) {
                        return Err(err(pos, "zero denominator"));
                    }
                    d
                } else {
                    BigInt::from(1)
                };
                *coeff = &*coeff * Rational::from_bigints(num, den);
                Ok(())
            }
            Some(Tok::Var(c, idx)) => {
                self.at += 1;
                match self.prefix {
                    None => self.prefix = Some(c),
                    Some(p) if p != c => {
                        return Err(err(pos, format!("mixed variable prefixes `{p}` and `{c}`")))
                    }
                    _ => {}
                }
                self.max_index = self.max_index.max(idx);
                let e = if self.peek() == Some(&Tok::Caret) {
                    self.at += 1;
                    let epos = self.pos();
                    let v = self.int("exponent")?;
                    u32::try_from(v).map_err(|_| err(epos, "exponent too large"))?
                } else {
                    1
                };
                exps.push((idx - 1, e));
                Ok(())
            }
            _ => Err(err(pos, "expected a number or a variable")),
        }
    }
}

/// Parsed polynomial text before fixing the variable count.
pub struct ParsedPolynomial {
    terms: Vec<RawTerm>,
    /// Variable prefix used (`x` or `y`), if any variable occurs.
    pub prefix: Option<char>,
    /// Largest variable index occurring (1-based), 0 for constants.
    pub max_index: usize,
}

impl ParsedPolynomial {
    pub fn into_polynomial(self, n: usize) -> Result<Polynomial> {
        if self.max_index > n {
            return Err(Error::VariableMismatch(self.max_index, n));
        }
        let mut p = Polynomial::zero(n);
        for (c, sparse) in self.terms {
            let mut exps = vec![0u32; n];
            for (i, e) in sparse {
                exps[i] += e;
            }
            p.add_term(Monomial::new(exps), &c);
        }
        Ok(p)
    }
}

pub fn parse_raw(text: &str) -> Result<ParsedPolynomial> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(err(0, "empty polynomial"));
    }
    let mut p = Parser { toks, at: 0, end: text.len(), prefix: None, max_index: 0 };
    let terms = p.poly()?;
    Ok(ParsedPolynomial { terms, prefix: p.prefix, max_index: p.max_index })
}

/// Parses a polynomial in `n` variables (prefix `x` or `y`).
pub fn parse_polynomial(text: &str, n: usize) -> Result<Polynomial> {
    parse_raw(text)?.into_polynomial(n)
}

/// Splits a comma-separated list, tracking each item's byte offset so that
/// parse errors point into the original string.
pub fn parse_polynomial_list(text: &str, n: Option<usize>) -> Result<Vec<Polynomial>> {
    let mut raws = Vec::new();
    let mut offset = 0;
    for item in text.split(',') {
        let raw = parse_raw(item).map_err(|e| match e {
            Error::Parse { pos, msg } => Error::Parse { pos: pos + offset, msg },
            other => other,
        })?;
        raws.push(raw);
        offset += item.len() + 1;
    }
    let n = n.unwrap_or_else(|| raws.iter().map(|r| r.max_index).max().unwrap_or(1).max(1));
    raws.into_iter().map(|r| r.into_polynomial(n)).collect()
}
