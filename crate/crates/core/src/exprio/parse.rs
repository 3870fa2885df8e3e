use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use thiserror::Error;

use crate::operator::ShiftOperator;
use crate::polyarith::{Polynomial, Rational, RationalFunction};

/// Largest degree in `n`, power of `S`, or exponent the parser will build.
pub const DEGREE_CAP: usize = 512;
/// Largest bit length of a constant produced by `^`.
const BITS_CAP: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
    pub expected: Vec<&'static str>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected one of: {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("{0}")]
    Parse(ParseError),
    #[error("negative power of S at byte {position}")]
    NegativeShiftPower { position: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    N,
    S,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(i) => format!("integer {i}"),
            Tok::N => "'n'".into(),
            Tok::S => "'S'".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

const ATOM_START: &[&str] = &["integer", "'n'", "'S'", "'('", "'-'", "'+'"];
const AFTER_FACTOR: &[&str] = &["'+'", "'-'", "'*'", "'/'", "'^'", "')'", "end of input"];

fn err(position: usize, message: impl Into<String>, expected: &[&'static str]) -> ExprError {
    ExprError::Parse(ParseError {
        position,
        message: message.into(),
        expected: expected.to_vec(),
    })
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ExprError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let v: BigInt = src[start..i].parse().expect("ascii digits");
                out.push((Tok::Int(v), start));
                continue;
            }
            b'n' => Tok::N,
            b'S' => Tok::S,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                let ch = src[i..].chars().next().unwrap_or('?');
                return Err(err(
                    i,
                    format!("unexpected character {ch:?}"),
                    &["integer", "'n'", "'S'", "operator", "parenthesis"],
                ));
            }
        };
        out.push((tok, i));
        i += 1;
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

/// `sum_i c_i(n) S^i` with rational-function coefficients; zero entries are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Value(BTreeMap<usize, RationalFunction>);

impl Value {
    fn scalar(r: RationalFunction) -> Self {
        let mut m = BTreeMap::new();
        if !r.is_zero() {
            m.insert(0, r);
        }
        Value(m)
    }

    fn has_shift(&self) -> bool {
        self.0.keys().any(|&k| k > 0)
    }

    fn has_n(&self) -> bool {
        self.0
            .values()
            .any(|r| !r.numer().is_constant() || !r.denom().is_constant())
    }

    fn as_scalar(&self) -> Option<RationalFunction> {
        if self.has_shift() {
            None
        } else {
            Some(self.0.get(&0).cloned().unwrap_or_default())
        }
    }

    fn max_degree(&self) -> usize {
        self.0
            .values()
            .map(|r| {
                let a = r.numer().degree().finite().unwrap_or(0);
                let b = r.denom().degree().finite().unwrap_or(0);
                a.max(b)
            })
            .max()
            .unwrap_or(0)
    }

    fn max_shift(&self) -> usize {
        self.0.keys().next_back().copied().unwrap_or(0)
    }

    fn add(mut self, other: Value) -> Value {
        for (k, v) in other.0 {
            let sum = match self.0.remove(&k) {
                Some(cur) => cur.add(&v),
                None => v,
            };
            if !sum.is_zero() {
                self.0.insert(k, sum);
            }
        }
        self
    }

    fn neg(self) -> Value {
        Value(self.0.into_iter().map(|(k, v)| (k, v.neg())).collect())
    }

    fn mul(&self, other: &Value) -> Value {
        let mut out = Value(BTreeMap::new());
        for (i, a) in &self.0 {
            for (j, b) in &other.0 {
                let mut m = BTreeMap::new();
                m.insert(i + j, a.mul(b));
                out = out.add(Value(m));
            }
        }
        out
    }

    fn constant_bits(&self) -> u64 {
        self.0
            .values()
            .flat_map(|r| r.numer().coeffs().iter().chain(r.denom().coeffs()))
            .map(|c| c.numer().bits().max(c.denom().bits()))
            .max()
            .unwrap_or(0)
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn at(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Value, ExprError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(self.term()?);
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.add(self.term()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Value, ExprError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    let at = self.bump().1;
                    let rhs = self.unary()?;
                    if acc.has_shift() && rhs.has_n() {
                        return Err(err(
                            at,
                            "a factor containing S may only multiply an n-free factor on its right",
                            &[],
                        ));
                    }
                    if acc.max_degree() + rhs.max_degree() > DEGREE_CAP
                        || acc.max_shift() + rhs.max_shift() > DEGREE_CAP
                    {
                        return Err(err(at, format!("degree exceeds the cap {DEGREE_CAP}"), &[]));
                    }
                    acc = acc.mul(&rhs);
                }
                Tok::Slash => {
                    let at = self.bump().1;
                    let rhs = self.unary()?;
                    let Some(d) = rhs.as_scalar() else {
                        return Err(err(at, "cannot divide by an expression containing S", &[]));
                    };
                    if d.is_zero() {
                        return Err(err(at, "division by zero", &[]));
                    }
                    if acc.max_degree() + rhs.max_degree() > DEGREE_CAP {
                        return Err(err(at, format!("degree exceeds the cap {DEGREE_CAP}"), &[]));
                    }
                    let inv = RationalFunction::from_poly(Polynomial::one())
                        .div(&d)
                        .expect("nonzero divisor");
                    acc = acc.mul(&Value::scalar(inv));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Value, ExprError> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(self.unary()?.neg())
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Value, ExprError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return self.no_juxtaposition(base);
        }
        let caret_at = self.bump().1;
        let (tok, at) = self.bump();
        let k = match tok {
            Tok::Int(k) => k,
            Tok::Minus if base.has_shift() => {
                return Err(ExprError::NegativeShiftPower { position: at })
            }
            other => {
                return Err(err(
                    at,
                    format!("found {}, exponents are nonnegative integer literals", other.describe()),
                    &["integer"],
                ))
            }
        };
        let k = match k.to_usize() {
            Some(k) if k <= DEGREE_CAP => k,
            _ => return Err(err(at, format!("exponent exceeds the cap {DEGREE_CAP}"), &[])),
        };
        if base.has_shift() && base.has_n() {
            return Err(err(
                caret_at,
                "only n-free expressions containing S may be raised to a power",
                &[],
            ));
        }
        if base.max_degree() * k > DEGREE_CAP || base.max_shift() * k > DEGREE_CAP {
            return Err(err(caret_at, format!("degree exceeds the cap {DEGREE_CAP}"), &[]));
        }
        if base.constant_bits() * k as u64 > BITS_CAP {
            return Err(err(caret_at, "power produces an oversized constant", &[]));
        }
        let mut acc = Value::scalar(RationalFunction::from_poly(Polynomial::one()));
        let mut sq = base;
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        self.no_juxtaposition(acc)
    }

    fn no_juxtaposition(&self, v: Value) -> Result<Value, ExprError> {
        match self.peek() {
            Tok::Int(_) | Tok::N | Tok::S | Tok::LParen => Err(err(
                self.at(),
                "implicit multiplication is not supported, write '*'",
                AFTER_FACTOR,
            )),
            Tok::Caret => Err(err(self.at(), "chained '^' needs parentheses", AFTER_FACTOR)),
            _ => Ok(v),
        }
    }

    fn atom(&mut self) -> Result<Value, ExprError> {
        let (tok, at) = self.bump();
        let v = match tok {
            Tok::Int(i) => Value::scalar(RationalFunction::from_poly(Polynomial::constant(
                Rational::from_integer(i),
            ))),
            Tok::N => Value::scalar(RationalFunction::from_poly(Polynomial::var())),
            Tok::S => {
                let mut m = BTreeMap::new();
                m.insert(1, RationalFunction::from_poly(Polynomial::one()));
                Value(m)
            }
            Tok::LParen => {
                let inner = self.expr()?;
                let (close, at) = self.bump();
                if close != Tok::RParen {
                    return Err(err(
                        at,
                        format!("found {}", close.describe()),
                        &["')'", "'+'", "'-'", "'*'", "'/'", "'^'"],
                    ));
                }
                inner
            }
            other => {
                return Err(err(at, format!("found {}", other.describe()), ATOM_START));
            }
        };
        Ok(v)
    }
}

fn parse_value(text: &str) -> Result<Value, ExprError> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0 };
    let v = p.expr()?;
    if *p.peek() != Tok::End {
        let at = p.at();
        let found = p.peek().describe();
        return Err(err(at, format!("found {found}"), AFTER_FACTOR));
    }
    Ok(v)
}

fn require_polynomial(r: RationalFunction, what: &str) -> Result<Polynomial, ExprError> {
    if r.is_polynomial() {
        let c = r.denom().leading_coeff().cloned().unwrap_or_else(Rational::one);
        Ok(r.numer().scale(&c.recip()))
    } else {
        Err(err(0, format!("{what} has a non-constant denominator"), &[]))
    }
}

/// Parses an S-free expression whose value is a polynomial.
pub fn parse_polynomial(text: &str) -> Result<Polynomial, ExprError> {
    let r = parse_rational_function(text)?;
    require_polynomial(r, "expression")
}

/// Parses an S-free expression.
pub fn parse_rational_function(text: &str) -> Result<RationalFunction, ExprError> {
    let v = parse_value(text)?;
    v.as_scalar()
        .ok_or_else(|| err(0, "S is not allowed here", &[]))
}

/// Parses `sum_i a_i(n) S^i`; coefficients are collected by power of `S`.
pub fn parse_operator(text: &str) -> Result<ShiftOperator, ExprError> {
    let v = parse_value(text)?;
    let top = v.max_shift();
    let mut coeffs = vec![Polynomial::zero(); top + 1];
    for (k, r) in v.0 {
        coeffs[k] = require_polynomial(r, "operator coefficient")?;
    }
    if coeffs.iter().all(Polynomial::is_zero) {
        coeffs.clear();
    }
    Ok(ShiftOperator::new(coeffs))
}
