//! Parser for scalar expressions.
//!
//! Grammar (whitespace ignored, juxtaposition multiplies):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/')? unary)*
//! unary  := '-' unary | '+' unary | power
//! power  := atom ('^' exponent)?
//! atom   := INT | IDENT | '(' expr ')' | '[' bracket ']'
//! exponent := ['-'] INT | '(' ['-'] INT ['/' INT] ')'
//! bracket  := 'a' [('+' | '-') INT] | ['-'] INT
//! ```
//!
//! Identifiers: `s`, `u`, `q` = s², `qa` = u², `t0` = u⁻⁴, `t1` = s⁴u⁴.
//! Fractional exponents are allowed on identifiers whenever the result is an
//! integral monomial in s and u.

use super::{qbracket, su, BracketArg, Field, FracBi, LaurentBi, Ring, RatQ};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("unexpected character {0:?} at offset {1}")]
    BadChar(char, usize),
    #[error("unexpected {found} at offset {pos}, expected {expected}")]
    Unexpected { found: String, expected: &'static str, pos: usize },
    #[error("unknown identifier {0:?}")]
    UnknownIdent(String),
    #[error("exponent {0} does not give an integral power of s and u")]
    BadExponent(String),
    #[error("division by zero")]
    DivByZero,
    #[error("value is not a Laurent polynomial in u")]
    NotLaurent,
    #[error("integer literal too large")]
    Overflow,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut out = Vec::new();
    let b: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < b.len() {
        let c = b[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let st = i;
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = b[st..i].iter().collect();
            out.push((Tok::Int(s.parse().unwrap()), st));
        } else if c.is_ascii_alphabetic() {
            let st = i;
            while i < b.len() && b[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((Tok::Ident(b[st..i].iter().collect()), st));
        } else if "+-*/^()[]".contains(c) {
            out.push((Tok::Sym(c), i));
            i += 1;
        } else {
            return Err(ParseError::BadChar(c, i));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

fn describe(t: Option<&Tok>) -> String {
    match t {
        None => "end of input".into(),
        Some(Tok::Int(n)) => format!("integer {n}"),
        Some(Tok::Ident(s)) => format!("identifier {s:?}"),
        Some(Tok::Sym(c)) => format!("{c:?}"),
    }
}

/// Exponent of an identifier in (s, u) units.
fn ident_weight(name: &str) -> Option<(i32, i32)> {
    Some(match name {
        "s" => (1, 0),
        "u" => (0, 1),
        "q" => (2, 0),
        "qa" => (0, 2),
        "t0" => (0, -4),
        "t1" => (4, 4),
        _ => return None,
    })
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.1)
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        ParseError::Unexpected { found: describe(self.peek()), expected, pos: self.offset() }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char, what: &'static str) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(what))
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                let v = n.to_i64().ok_or(ParseError::Overflow)?;
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.unexpected("integer")),
        }
    }

    fn expr(&mut self) -> Result<FracBi, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc.add(&self.term()?);
            } else if self.eat('-') {
                acc = acc.sub(&self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(Tok::Int(_)) | Some(Tok::Ident(_)) | Some(Tok::Sym('(')) | Some(Tok::Sym('[')))
    }

    fn term(&mut self) -> Result<FracBi, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = acc.mul(&self.unary()?);
            } else if self.eat('/') {
                let d = self.unary()?;
                acc = acc.div(&d).ok_or(ParseError::DivByZero)?;
            } else if self.starts_atom() {
                acc = acc.mul(&self.power()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<FracBi, ParseError> {
        if self.eat('-') {
            Ok(self.unary()?.neg())
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    /// Exponent as a reduced fraction (num, den) with den > 0.
    fn exponent(&mut self) -> Result<(i64, i64), ParseError> {
        if self.eat('(') {
            let neg = self.eat('-');
            let n = self.int()?;
            let d = if self.eat('/') { self.int()? } else { 1 };
            self.expect(')', "')' closing exponent")?;
            if d == 0 {
                return Err(ParseError::DivByZero);
            }
            let n = if neg { -n } else { n };
            let g = num_integer::gcd(n, d);
            Ok((n / g * d.signum(), d.abs() / g))
        } else {
            let neg = self.eat('-');
            let n = self.int()?;
            Ok((if neg { -n } else { n }, 1))
        }
    }

    fn power(&mut self) -> Result<FracBi, ParseError> {
        if let Some(Tok::Ident(name)) = self.peek().cloned() {
            let (ws, wu) = ident_weight(&name).ok_or_else(|| ParseError::UnknownIdent(name.clone()))?;
            self.pos += 1;
            let (n, d) = if self.eat('^') { self.exponent()? } else { (1, 1) };
            let (a, b) = (ws as i64 * n, wu as i64 * n);
            if a % d != 0 || b % d != 0 {
                return Err(ParseError::BadExponent(format!("{n}/{d} on {name}")));
            }
            let (a, b) = (i32::try_from(a / d), i32::try_from(b / d));
            let (Ok(a), Ok(b)) = (a, b) else { return Err(ParseError::Overflow) };
            return Ok(FracBi::from_laurent(su(a, b)));
        }
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let (n, d) = self.exponent()?;
        if d != 1 {
            return Err(ParseError::BadExponent(format!("{n}/{d}")));
        }
        let e = u32::try_from(n.abs()).map_err(|_| ParseError::Overflow)?;
        let p = base.pow(e);
        if n < 0 {
            p.inv().ok_or(ParseError::DivByZero)
        } else {
            Ok(p)
        }
    }

    fn atom(&mut self) -> Result<FracBi, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let r = RatQ::from_rational(&num_rational::BigRational::from_integer(n));
                Ok(FracBi::from_ratq(r))
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(')', "')'")?;
                Ok(v)
            }
            Some(Tok::Sym('[')) => {
                self.pos += 1;
                let arg = self.bracket()?;
                self.expect(']', "']'")?;
                Ok(qbracket(arg))
            }
            _ => Err(self.unexpected("number, identifier, '(' or '['")),
        }
    }

    fn bracket(&mut self) -> Result<BracketArg, ParseError> {
        let to_i32 = |v: i64| i32::try_from(v).map_err(|_| ParseError::Overflow);
        if let Some(Tok::Ident(name)) = self.peek().cloned() {
            if name != "a" {
                return Err(ParseError::UnknownIdent(name));
            }
            self.pos += 1;
            let k = if self.eat('+') {
                self.int()?
            } else if self.eat('-') {
                -self.int()?
            } else {
                0
            };
            return Ok(BracketArg::Alpha(to_i32(k)?));
        }
        let neg = self.eat('-');
        let n = self.int()?;
        Ok(BracketArg::Int(to_i32(if neg { -n } else { n })?))
    }
}

/// Parse an expression into the fraction field.
pub fn parse_expr(src: &str) -> Result<FracBi, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, end: src.len() };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.unexpected("operator or end of input"));
    }
    Ok(v)
}

/// Parse an expression that must be a Laurent polynomial in u.
pub fn parse_laurent(src: &str) -> Result<LaurentBi, ParseError> {
    parse_expr(src)?.to_laurent().map_err(|_| ParseError::NotLaurent)
}
