//! Text expressions for scalars, disc elements and U_q(sl2) elements.
//!
//! Tokens: integers, identifiers, `+ - * / ^ ( )`. `*` multiplies left to
//! right without reordering. `/` divides by a nonzero scalar. Negative
//! exponents are accepted only on invertible bases. Juxtaposition is an
//! error.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::disc::DiscElem;
use crate::scalar::{GaussianRational, Scalar};
use crate::uq::{UqElem, UqGenerator};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{}", self.render())]
pub struct ParseError {
    /// Character offset into the input.
    pub position: usize,
    pub message: String,
    /// Tokens that would have been accepted here; empty for semantic errors.
    pub expected: Vec<String>,
}

impl ParseError {
    fn render(&self) -> String {
        let mut s = format!("at position {}: {}", self.position, self.message);
        if !self.expected.is_empty() {
            s.push_str(&format!("; expected one of: {}", self.expected.join(", ")));
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Sym(c) => write!(f, "`{c}`"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((start, Tok::Int(digits.parse().expect("ascii digits"))));
        } else if c.is_ascii_alphabetic() {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((start, Tok::Ident(chars[start..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((start, Tok::Sym(c)));
            i += 1;
        } else if c == '\u{2212}' {
            out.push((start, Tok::Sym('-')));
            i += 1;
        } else {
            return Err(ParseError {
                position: start,
                message: format!("unexpected character `{c}`"),
                expected: vec![],
            });
        }
    }
    out.push((chars.len(), Tok::End));
    Ok(out)
}

/// What the parser needs from a target algebra.
trait Target: Clone {
    const ATOMS: &'static [&'static str];
    fn atom(name: &str) -> Option<Self>;
    fn from_scalar(c: Scalar) -> Self;
    fn as_scalar(&self) -> Option<Scalar>;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn pow(&self, e: u32) -> Self;
    fn inverse(&self) -> Option<Self>;
}

fn scalar_atom(name: &str) -> Option<Scalar> {
    match name {
        "q" => Some(Scalar::q()),
        "i" => Some(Scalar::i()),
        _ => None,
    }
}

impl Target for Scalar {
    const ATOMS: &'static [&'static str] = &["q", "i"];
    fn atom(name: &str) -> Option<Self> {
        scalar_atom(name)
    }
    fn from_scalar(c: Scalar) -> Self {
        c
    }
    fn as_scalar(&self) -> Option<Scalar> {
        Some(self.clone())
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn pow(&self, e: u32) -> Self {
        Scalar::pow(self, e as i32).expect("nonnegative power")
    }
    fn inverse(&self) -> Option<Self> {
        self.inv().ok()
    }
}

impl Target for DiscElem {
    const ATOMS: &'static [&'static str] = &["z", "zs", "y", "q", "i"];
    fn atom(name: &str) -> Option<Self> {
        match name {
            "z" => Some(DiscElem::z()),
            "zs" => Some(DiscElem::zs()),
            "y" => Some(DiscElem::y()),
            _ => scalar_atom(name).map(DiscElem::scalar),
        }
    }
    fn from_scalar(c: Scalar) -> Self {
        DiscElem::scalar(c)
    }
    fn as_scalar(&self) -> Option<Scalar> {
        DiscElem::as_scalar(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn pow(&self, e: u32) -> Self {
        DiscElem::pow(self, e)
    }
    fn inverse(&self) -> Option<Self> {
        self.as_scalar()?.inv().ok().map(DiscElem::scalar)
    }
}

impl Target for UqElem {
    const ATOMS: &'static [&'static str] = &["e", "f", "k", "kinv", "q", "i"];
    fn atom(name: &str) -> Option<Self> {
        match UqGenerator::from_name(name) {
            Some(g) => Some(g.to_elem()),
            None => scalar_atom(name).map(UqElem::scalar),
        }
    }
    fn from_scalar(c: Scalar) -> Self {
        UqElem::scalar(c)
    }
    fn as_scalar(&self) -> Option<Scalar> {
        UqElem::as_scalar(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn pow(&self, e: u32) -> Self {
        UqElem::pow(self, e)
    }
    fn inverse(&self) -> Option<Self> {
        UqElem::inverse(self)
    }
}

struct Parser<T> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    _target: std::marker::PhantomData<T>,
}

const OPERAND: [&str; 3] = ["integer", "`(`", "`-`"];

impl<T: Target> Parser<T> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn at(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: Vec<String>) -> ParseError {
        ParseError { position: self.at(), message: format!("unexpected {}", self.peek()), expected }
    }

    fn operand_expected() -> Vec<String> {
        OPERAND.iter().map(|s| s.to_string()).chain(T::ATOMS.iter().map(|a| format!("`{a}`"))).collect()
    }

    fn semantic(position: usize, message: impl Into<String>) -> ParseError {
        ParseError { position, message: message.into(), expected: vec![] }
    }

    fn parse_all(&mut self) -> Result<T, ParseError> {
        let v = self.expr()?;
        if *self.peek() != Tok::End {
            let expected = ["`+`", "`-`", "`*`", "`/`", "`^`", "end of input"].map(String::from).to_vec();
            return Err(self.unexpected(expected));
        }
        Ok(v)
    }

    fn expr(&mut self) -> Result<T, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Sym('+') => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Tok::Sym('-') => {
                    self.bump();
                    acc = acc.add(&self.term()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<T, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Sym('*') => {
                    self.bump();
                    acc = acc.mul(&self.unary()?);
                }
                Tok::Sym('/') => {
                    self.bump();
                    let at = self.at();
                    let d = self.unary()?;
                    let c = d.as_scalar().ok_or_else(|| Self::semantic(at, "can only divide by a scalar"))?;
                    let inv = c.inv().map_err(|_| Self::semantic(at, "division by zero"))?;
                    acc = acc.mul(&T::from_scalar(inv));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<T, ParseError> {
        match self.peek() {
            Tok::Sym('-') => {
                self.bump();
                Ok(self.unary()?.neg())
            }
            Tok::Sym('+') => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<T, ParseError> {
        let base_at = self.at();
        let base = self.atom()?;
        if *self.peek() != Tok::Sym('^') {
            return Ok(base);
        }
        self.bump();
        let negative = *self.peek() == Tok::Sym('-');
        if negative {
            self.bump();
        }
        let exp_at = self.at();
        let Tok::Int(n) = self.peek().clone() else {
            return Err(self.unexpected(vec!["integer exponent".into()]));
        };
        self.bump();
        let e = u32::try_from(n).map_err(|_| Self::semantic(exp_at, "exponent too large"))?;
        if !negative {
            return Ok(base.pow(e));
        }
        let inv =
            base.inverse().ok_or_else(|| Self::semantic(base_at, "negative power of a non-invertible element"))?;
        Ok(inv.pow(e))
    }

    fn atom(&mut self) -> Result<T, ParseError> {
        let at = self.at();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                let c = GaussianRational::from_rational(BigRational::from_integer(n));
                Ok(T::from_scalar(Scalar::constant(c)))
            }
            Tok::Ident(name) => {
                self.bump();
                T::atom(&name).ok_or_else(|| ParseError {
                    position: at,
                    message: format!("unknown token `{name}`"),
                    expected: Self::operand_expected(),
                })
            }
            Tok::Sym('(') => {
                self.bump();
                let v = self.expr()?;
                if *self.peek() != Tok::Sym(')') {
                    return Err(self.unexpected(vec![
                        "`)`".into(),
                        "`+`".into(),
                        "`-`".into(),
                        "`*`".into(),
                        "`/`".into(),
                    ]));
                }
                self.bump();
                Ok(v)
            }
            _ => Err(self.unexpected(Self::operand_expected())),
        }
    }
}

fn parse<T: Target>(text: &str) -> Result<T, ParseError> {
    Parser::<T> { toks: tokenize(text)?, pos: 0, _target: std::marker::PhantomData }.parse_all()
}

/// Parses a disc expression over `z`, `zs`, `y`, `q`, `i`.
pub fn parse_disc_expr(text: &str) -> Result<DiscElem, ParseError> {
    parse(text)
}

/// Parses a U_q(sl2) expression over `e`, `f`, `k`, `kinv`, `q`, `i`.
pub fn parse_uq_expr(text: &str) -> Result<UqElem, ParseError> {
    parse(text)
}

/// Parses a scalar expression over `q` and `i`.
pub fn parse_scalar_expr(text: &str) -> Result<Scalar, ParseError> {
    parse(text)
}

/// Parses a constant such as `1/2`, `-3*i` or `2 + 2*i`.
pub fn parse_constant(text: &str) -> Result<GaussianRational, ParseError> {
    parse_scalar_expr(text)?.as_constant().ok_or_else(|| ParseError {
        position: 0,
        message: "expected a constant, found an expression in q".into(),
        expected: vec![],
    })
}
