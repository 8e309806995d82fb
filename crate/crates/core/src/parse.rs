//! Text front end for polynomials.
//!
//! ```text
//! poly   := sign? term (('+' | '-') term)*
//! term   := coeff? ('*'? factor)*        (at least one of coeff / factor)
//! factor := var ('^' uint)?
//! coeff  := uint | uint '/' uint
//! ```
//!
//! Whitespace is insignificant. With an explicit variable list, variable names
//! are matched longest-first against that list. Without one, a variable is a
//! single letter optionally followed by digits or underscores (`x`, `x1`,
//! `y_2`), so `xy` reads as `x*y`; variables are numbered in order of first
//! appearance.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::monomial::ExponentVector;
use crate::poly::Polynomial;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {kind}")]
pub struct ParseError {
    /// Character offset into the input.
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    InvalidExponent(String),
    UnknownVariable(String),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Syntax(msg) => write!(f, "syntax error: {msg}"),
            ParseErrorKind::InvalidExponent(msg) => write!(f, "invalid exponent: {msg}"),
            ParseErrorKind::UnknownVariable(name) => write!(f, "unknown variable `{name}`"),
        }
    }
}

/// Parses `text` into a polynomial. When `variables` is given, the result
/// lives in exactly that ring and any other name is an error.
pub fn parse_polynomial(
    text: &str,
    variables: Option<&[String]>,
) -> Result<Polynomial, ParseError> {
    let mut parser = Parser {
        chars: text.chars().collect(),
        pos: 0,
        fixed: variables.is_some(),
        names: variables.map(<[String]>::to_vec).unwrap_or_default(),
    };
    let raw = parser.poly()?;
    let n = parser.names.len();
    let terms = raw.into_iter().map(|(coeff, factors)| {
        let mut e = vec![0u32; n];
        for (var, pow) in factors {
            e[var] += pow;
        }
        (ExponentVector::new(e), coeff)
    });
    Ok(Polynomial::from_terms(parser.names, terms).expect("exponent vectors sized to the ring"))
}

type RawTerm = (Rational, Vec<(usize, u32)>);

struct Parser {
    chars: Vec<char>,
    pos: usize,
    fixed: bool,
    names: Vec<String>,
}

impl Parser {
    fn err<T>(&self, kind: ParseErrorKind) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.pos,
            kind,
        })
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        self.err(ParseErrorKind::Syntax(msg.into()))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn poly(&mut self) -> Result<Vec<RawTerm>, ParseError> {
        let mut terms = Vec::new();
        let mut negative = false;
        match self.peek() {
            None => return self.syntax("empty input"),
            Some('-') => {
                negative = true;
                self.pos += 1;
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        loop {
            let (mut c, factors) = self.term()?;
            if negative {
                c = -c;
            }
            terms.push((c, factors));
            match self.peek() {
                None => return Ok(terms),
                Some('+') => negative = false,
                Some('-') => negative = true,
                Some(ch) => return self.syntax(format!("unexpected `{ch}`")),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<RawTerm, ParseError> {
        let mut coeff = Rational::one();
        let mut factors = Vec::new();
        let mut seen_anything = false;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            coeff = self.coefficient()?;
            seen_anything = true;
        }
        loop {
            let mut starred = false;
            if self.peek() == Some('*') {
                if !seen_anything {
                    return self.syntax("`*` before any factor");
                }
                self.pos += 1;
                starred = true;
            }
            match self.peek() {
                Some(c) if is_ident_start(c) => {
                    factors.push(self.factor()?);
                    seen_anything = true;
                }
                Some(c) if c.is_ascii_digit() && seen_anything => {
                    return self.syntax("coefficient must come first in a term");
                }
                _ if starred => return self.syntax("expected a variable after `*`"),
                _ if !seen_anything => return self.syntax("expected a term"),
                _ => return Ok((coeff, factors)),
            }
        }
    }

    fn uint(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        Some(digits.parse().expect("ascii digits"))
    }

    fn coefficient(&mut self) -> Result<Rational, ParseError> {
        let num = match self.uint() {
            Some(n) => n,
            None => return self.syntax("expected a coefficient"),
        };
        if self.peek() != Some('/') {
            return Ok(Rational::from_integer(num));
        }
        self.pos += 1;
        let slash = self.pos;
        match self.uint() {
            Some(d) if d.is_zero() => Err(ParseError {
                position: slash,
                kind: ParseErrorKind::Syntax("zero denominator".into()),
            }),
            Some(d) => Ok(Rational::new(num, d)),
            None => self.syntax("expected a denominator after `/`"),
        }
    }

    fn factor(&mut self) -> Result<(usize, u32), ParseError> {
        let var = self.variable()?;
        if self.peek() != Some('^') {
            return Ok((var, 1));
        }
        self.pos += 1;
        match self.peek() {
            Some('-') => {
                return self.err(ParseErrorKind::InvalidExponent(
                    "exponents must be nonnegative integers".into(),
                ))
            }
            Some(c) if c.is_ascii_digit() => {}
            _ => return self.syntax("expected an exponent after `^`"),
        }
        let start = self.pos;
        let value = self.uint().expect("digit checked above");
        if matches!(self.chars.get(self.pos), Some('.') | Some('/')) {
            return self.err(ParseErrorKind::InvalidExponent(
                "exponents must be integers".into(),
            ));
        }
        u32::try_from(&value)
            .map(|e| (var, e))
            .map_err(|_| ParseError {
                position: start,
                kind: ParseErrorKind::InvalidExponent("exponent too large".into()),
            })
    }

    fn variable(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let rest = &self.chars[self.pos..];
        if self.fixed {
            let best = self
                .names
                .iter()
                .enumerate()
                .filter(|(_, name)| {
                    let name: Vec<char> = name.chars().collect();
                    rest.starts_with(&name)
                })
                .max_by_key(|(_, name)| name.chars().count());
            if let Some((i, name)) = best {
                self.pos += name.chars().count();
                return Ok(i);
            }
            let len = default_ident_len(rest);
            let name: String = rest[..len].iter().collect();
            return self.err(ParseErrorKind::UnknownVariable(name));
        }
        let len = default_ident_len(rest);
        let name: String = rest[..len].iter().collect();
        self.pos += len;
        if let Some(i) = self.names.iter().position(|n| *n == name) {
            return Ok(i);
        }
        self.names.push(name);
        Ok(self.names.len() - 1)
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic()
}

fn default_ident_len(rest: &[char]) -> usize {
    1 + rest[1..]
        .iter()
        .take_while(|c| c.is_ascii_digit() || **c == '_')
        .count()
}
