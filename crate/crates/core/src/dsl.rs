//! Plain-text syntax for symbols.
//!
//! ```text
//! expr   := term { ("+" | "-") term }
//! term   := unary { "*" unary }
//! unary  := "-" unary | factor
//! factor := base [ "^" nat ]
//! base   := number | "z" nat | "conj" "(" expr ")" | "exp" "(" expr ")"
//!         | "K" "(" expr { "," expr } ")" | "(" expr ")"
//! number := float | float "i" | "i"
//! ```
//!
//! `exp` arguments must be affine in `z_k` and `conj(z_k)`; constants fold
//! into the coefficient. `K(w_1, ..., w_n)` is the reproducing kernel
//! `exp(z.conj(w))` and its arguments must be constants. Whitespace is
//! ignored. [`format_symbol`] prints canonical symbols back in this syntax.

use std::fmt;

use num_complex::Complex64;
use thiserror::Error;

use crate::index::MultiIndex;
use crate::symbol::{czeros, HoloSymbol, Symbol, SymbolTerm};

const MAX_POWER: u64 = 64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseErrorKind {
    #[error("empty input")]
    EmptyInput,
    #[error("unexpected character '{0}'")]
    UnexpectedChar(char),
    #[error("expected {expected}, found {found}")]
    UnexpectedToken {
        expected: &'static str,
        found: String,
    },
    #[error("malformed number '{0}'")]
    InvalidNumber(String),
    #[error("unknown identifier '{0}'")]
    UnknownIdentifier(String),
    #[error("exponent {0} is too large (maximum {MAX_POWER})")]
    PowerTooLarge(u64),
    #[error("exp argument is not affine in z and conj(z)")]
    NonlinearExponent,
    #[error("coordinate z{index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("kernel takes {expected} arguments, found {found}")]
    KernelArity { expected: usize, found: usize },
    #[error("expected a constant")]
    NotConstant,
    #[error("dimension must be at least 1")]
    ZeroDimension,
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// Byte offset into the input.
    pub position: usize,
}

impl ParseError {
    fn new(kind: ParseErrorKind, position: usize) -> Self {
        ParseError { kind, position }
    }
}

type PResult<T> = Result<T, ParseError>;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Real(f64),
    Imag(f64),
    Coord(usize),
    Conj,
    Exp,
    Kernel,
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Caret,
    Comma,
    Nat(u64),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Real(v) => format!("number {v}"),
            Tok::Imag(v) => format!("number {v}i"),
            Tok::Nat(v) => format!("number {v}"),
            Tok::Coord(k) => format!("z{k}"),
            Tok::Conj => "'conj'".into(),
            Tok::Exp => "'exp'".into(),
            Tok::Kernel => "'K'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::Comma => "','".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> PResult<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
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
            b'(' => out.push((Tok::LParen, start)),
            b')' => out.push((Tok::RParen, start)),
            b'+' => out.push((Tok::Plus, start)),
            b'-' => out.push((Tok::Minus, start)),
            b'*' => out.push((Tok::Star, start)),
            b'^' => out.push((Tok::Caret, start)),
            b',' => out.push((Tok::Comma, start)),
            b'0'..=b'9' | b'.' => {
                let mut j = i;
                let mut is_int = true;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                if j < bytes.len() && bytes[j] == b'.' {
                    is_int = false;
                    j += 1;
                    while j < bytes.len() && bytes[j].is_ascii_digit() {
                        j += 1;
                    }
                }
                if j < bytes.len() && (bytes[j] == b'e' || bytes[j] == b'E') {
                    is_int = false;
                    j += 1;
                    if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                        j += 1;
                    }
                    let digits = j;
                    while j < bytes.len() && bytes[j].is_ascii_digit() {
                        j += 1;
                    }
                    if digits == j {
                        return Err(ParseError::new(
                            ParseErrorKind::InvalidNumber(text[start..j].to_string()),
                            start,
                        ));
                    }
                }
                let literal = &text[start..j];
                let value: f64 = literal.parse().map_err(|_| {
                    ParseError::new(ParseErrorKind::InvalidNumber(literal.to_string()), start)
                })?;
                if j < bytes.len() && bytes[j] == b'i' && !followed_by_ident(bytes, j + 1) {
                    out.push((Tok::Imag(value), start));
                    j += 1;
                } else if is_int {
                    match literal.parse::<u64>() {
                        Ok(v) => out.push((Tok::Nat(v), start)),
                        Err(_) => out.push((Tok::Real(value), start)),
                    }
                } else {
                    out.push((Tok::Real(value), start));
                }
                i = j;
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                let mut j = i;
                while j < bytes.len() && bytes[j].is_ascii_alphabetic() {
                    j += 1;
                }
                let word = &text[start..j];
                let tok = match word {
                    "z" => {
                        let digits = j;
                        while j < bytes.len() && bytes[j].is_ascii_digit() {
                            j += 1;
                        }
                        if digits == j {
                            return Err(ParseError::new(
                                ParseErrorKind::UnknownIdentifier("z".into()),
                                start,
                            ));
                        }
                        let index = text[digits..j].parse::<usize>().map_err(|_| {
                            ParseError::new(
                                ParseErrorKind::UnknownIdentifier(text[start..j].to_string()),
                                start,
                            )
                        })?;
                        Tok::Coord(index)
                    }
                    "conj" => Tok::Conj,
                    "exp" => Tok::Exp,
                    "K" => Tok::Kernel,
                    "i" => Tok::Imag(1.0),
                    _ => {
                        return Err(ParseError::new(
                            ParseErrorKind::UnknownIdentifier(word.to_string()),
                            start,
                        ))
                    }
                };
                out.push((tok, start));
                i = j;
                continue;
            }
            _ => {
                let c = text[i..].chars().next().unwrap_or('?');
                return Err(ParseError::new(ParseErrorKind::UnexpectedChar(c), start));
            }
        }
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

fn followed_by_ident(bytes: &[u8], j: usize) -> bool {
    j < bytes.len() && (bytes[j].is_ascii_alphanumeric() || bytes[j] == b'_')
}

/// Syntax tree of a symbol expression; `pos` is the byte offset of the node.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolExpr {
    pub node: ExprNode,
    pub pos: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExprNode {
    Literal(Complex64),
    /// One-based coordinate index.
    Coordinate(usize),
    Conj(Box<SymbolExpr>),
    Exp(Box<SymbolExpr>),
    Kernel(Vec<SymbolExpr>),
    Sum(Box<SymbolExpr>, Box<SymbolExpr>),
    Product(Box<SymbolExpr>, Box<SymbolExpr>),
    Power(Box<SymbolExpr>, u32),
    Neg(Box<SymbolExpr>),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> usize {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        ParseError::new(
            ParseErrorKind::UnexpectedToken {
                expected,
                found: self.peek().describe(),
            },
            self.pos(),
        )
    }

    fn expect(&mut self, tok: Tok, expected: &'static str) -> PResult<()> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(expected))
        }
    }

    fn expr(&mut self) -> PResult<SymbolExpr> {
        let mut lhs = self.term()?;
        loop {
            let pos = self.pos();
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    let rhs = self.term()?;
                    lhs = SymbolExpr {
                        node: ExprNode::Sum(Box::new(lhs), Box::new(rhs)),
                        pos,
                    };
                }
                Tok::Minus => {
                    self.bump();
                    let rhs = self.term()?;
                    let neg = SymbolExpr {
                        node: ExprNode::Neg(Box::new(rhs)),
                        pos,
                    };
                    lhs = SymbolExpr {
                        node: ExprNode::Sum(Box::new(lhs), Box::new(neg)),
                        pos,
                    };
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> PResult<SymbolExpr> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::Star {
            let pos = self.pos();
            self.bump();
            let rhs = self.unary()?;
            lhs = SymbolExpr {
                node: ExprNode::Product(Box::new(lhs), Box::new(rhs)),
                pos,
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> PResult<SymbolExpr> {
        if *self.peek() == Tok::Minus {
            let pos = self.pos();
            self.bump();
            let inner = self.unary()?;
            return Ok(SymbolExpr {
                node: ExprNode::Neg(Box::new(inner)),
                pos,
            });
        }
        self.factor()
    }

    fn factor(&mut self) -> PResult<SymbolExpr> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        let pos = self.pos();
        self.bump();
        match self.peek().clone() {
            Tok::Nat(v) if v <= MAX_POWER => {
                self.bump();
                Ok(SymbolExpr {
                    node: ExprNode::Power(Box::new(base), v as u32),
                    pos,
                })
            }
            Tok::Nat(v) => Err(ParseError::new(
                ParseErrorKind::PowerTooLarge(v),
                self.pos(),
            )),
            _ => Err(self.unexpected("a non-negative integer exponent")),
        }
    }

    fn base(&mut self) -> PResult<SymbolExpr> {
        let pos = self.pos();
        let node = match self.peek().clone() {
            Tok::Nat(v) => {
                self.bump();
                ExprNode::Literal(Complex64::new(v as f64, 0.0))
            }
            Tok::Real(v) => {
                self.bump();
                ExprNode::Literal(Complex64::new(v, 0.0))
            }
            Tok::Imag(v) => {
                self.bump();
                ExprNode::Literal(Complex64::new(0.0, v))
            }
            Tok::Coord(k) => {
                self.bump();
                ExprNode::Coordinate(k)
            }
            Tok::Conj | Tok::Exp => {
                let is_conj = *self.peek() == Tok::Conj;
                self.bump();
                self.expect(Tok::LParen, "'('")?;
                let inner = Box::new(self.expr()?);
                self.expect(Tok::RParen, "')'")?;
                if is_conj {
                    ExprNode::Conj(inner)
                } else {
                    ExprNode::Exp(inner)
                }
            }
            Tok::Kernel => {
                self.bump();
                self.expect(Tok::LParen, "'('")?;
                let mut args = vec![self.expr()?];
                while *self.peek() == Tok::Comma {
                    self.bump();
                    args.push(self.expr()?);
                }
                self.expect(Tok::RParen, "',' or ')'")?;
                ExprNode::Kernel(args)
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "')'")?;
                return Ok(SymbolExpr {
                    node: inner.node,
                    pos,
                });
            }
            _ => return Err(self.unexpected("a number, coordinate, conj, exp, K or '('")),
        };
        Ok(SymbolExpr { node, pos })
    }
}

/// Parse text into a syntax tree without lowering it.
pub fn parse_expr(text: &str) -> Result<SymbolExpr, ParseError> {
    let toks = lex(text)?;
    if toks.len() == 1 {
        return Err(ParseError::new(ParseErrorKind::EmptyInput, 0));
    }
    let mut p = Parser { toks, at: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected("an operator or end of input"));
    }
    Ok(e)
}

fn constant_value(s: &Symbol) -> Option<Complex64> {
    match s.terms() {
        [] => Some(Complex64::new(0.0, 0.0)),
        [t] if t.a.is_zero() && t.b.is_zero() && !t.has_exponential() => Some(t.coef),
        _ => None,
    }
}

fn lower(e: &SymbolExpr, n: usize) -> PResult<Symbol> {
    let same = |r: crate::error::Result<Symbol>| r.expect("operands share the parse dimension");
    Ok(match &e.node {
        ExprNode::Literal(v) => Symbol::constant(n, *v),
        ExprNode::Coordinate(k) => {
            if *k == 0 || *k > n {
                return Err(ParseError::new(
                    ParseErrorKind::IndexOutOfRange { index: *k, n },
                    e.pos,
                ));
            }
            same(Symbol::coordinate(n, k - 1))
        }
        ExprNode::Conj(inner) => lower(inner, n)?.conj(),
        ExprNode::Neg(inner) => lower(inner, n)?.neg(),
        ExprNode::Sum(a, b) => same(lower(a, n)?.add(&lower(b, n)?)),
        ExprNode::Product(a, b) => same(lower(a, n)?.mul(&lower(b, n)?)),
        ExprNode::Power(a, k) => lower(a, n)?.pow(*k),
        ExprNode::Exp(inner) => {
            let arg = lower(inner, n)?;
            let mut c = czeros(n);
            let mut d = czeros(n);
            let mut shift = Complex64::new(0.0, 0.0);
            for t in arg.terms() {
                let deg = t.a.degree() + t.b.degree();
                if t.has_exponential() || deg > 1 {
                    return Err(ParseError::new(ParseErrorKind::NonlinearExponent, e.pos));
                }
                if deg == 0 {
                    shift += t.coef;
                } else if let Some(k) = t.a.as_slice().iter().position(|&x| x == 1) {
                    c[k] += t.coef;
                } else {
                    let k =
                        t.b.as_slice()
                            .iter()
                            .position(|&x| x == 1)
                            .expect("degree one");
                    d[k] += t.coef;
                }
            }
            let term = SymbolTerm::new(
                shift.exp(),
                MultiIndex::zeros(n),
                MultiIndex::zeros(n),
                c,
                d,
            );
            same(Symbol::from_terms(n, vec![term]))
        }
        ExprNode::Kernel(args) => {
            if args.len() != n {
                return Err(ParseError::new(
                    ParseErrorKind::KernelArity {
                        expected: n,
                        found: args.len(),
                    },
                    e.pos,
                ));
            }
            let mut w = Vec::with_capacity(n);
            for arg in args {
                let value = constant_value(&lower(arg, n)?)
                    .ok_or_else(|| ParseError::new(ParseErrorKind::NotConstant, arg.pos))?;
                w.push(value);
            }
            HoloSymbol::kernel(&w).into_symbol()
        }
    })
}

/// Parse and lower to a canonical symbol on `C^n`.
pub fn parse_symbol(text: &str, n: usize) -> Result<Symbol, ParseError> {
    if n == 0 {
        return Err(ParseError::new(ParseErrorKind::ZeroDimension, 0));
    }
    lower(&parse_expr(text)?, n)
}

/// Parse a constant such as `2`, `-0.5i` or `(1-2i)`.
pub fn parse_complex(text: &str) -> Result<Complex64, ParseError> {
    let s = parse_symbol(text, 1)?;
    constant_value(&s).ok_or(ParseError::new(ParseErrorKind::NotConstant, 0))
}

/// Thirteen significant digits, enough for a 1e-12 relative round trip, trailing zeros trimmed.
fn fmt_real(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.12e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..13).contains(&exp) {
        let decimals = (12 - exp).max(0) as usize;
        let s = format!("{:.*}", decimals, x);
        trim_zeros(&s)
    } else {
        format!("{}e{}", trim_zeros(mantissa), exp)
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

/// A complex constant as a standalone factor: `2`, `-0.5` or `(1-2i)`.
fn fmt_complex(v: Complex64) -> String {
    if v.im == 0.0 {
        return fmt_real(v.re);
    }
    let sign = if v.im < 0.0 { '-' } else { '+' };
    format!("({}{}{}i)", fmt_real(v.re), sign, fmt_real(v.im.abs()))
}

/// Joins `(coefficient, factor)` pairs as a signed sum.
fn signed_sum(parts: &[(Complex64, String)]) -> String {
    let mut out = String::new();
    for (idx, (coef, factor)) in parts.iter().enumerate() {
        let negative = coef.im == 0.0 && coef.re < 0.0;
        let magnitude = if negative { -*coef } else { *coef };
        if idx == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if factor.is_empty() {
            out.push_str(&fmt_complex(magnitude));
        } else if magnitude == Complex64::new(1.0, 0.0) {
            out.push_str(factor);
        } else {
            out.push_str(&fmt_complex(magnitude));
            out.push('*');
            out.push_str(factor);
        }
    }
    out
}

fn power(base: String, e: u32) -> String {
    if e == 1 {
        base
    } else {
        format!("{base}^{e}")
    }
}

/// Deterministic rendering of a canonical symbol in the parse syntax.
pub fn format_symbol(s: &Symbol) -> String {
    if s.is_zero() {
        return "0".into();
    }
    let parts: Vec<(Complex64, String)> = s
        .terms()
        .iter()
        .map(|t| {
            let mut factors = Vec::new();
            for k in 0..s.dim() {
                if t.a.get(k) > 0 {
                    factors.push(power(format!("z{}", k + 1), t.a.get(k)));
                }
            }
            for k in 0..s.dim() {
                if t.b.get(k) > 0 {
                    factors.push(power(format!("conj(z{})", k + 1), t.b.get(k)));
                }
            }
            if t.has_exponential() {
                let mut lin = Vec::new();
                for k in 0..s.dim() {
                    if t.c[k] != Complex64::new(0.0, 0.0) {
                        lin.push((t.c[k], format!("z{}", k + 1)));
                    }
                }
                for k in 0..s.dim() {
                    if t.d[k] != Complex64::new(0.0, 0.0) {
                        lin.push((t.d[k], format!("conj(z{})", k + 1)));
                    }
                }
                factors.push(format!("exp({})", signed_sum(&lin)));
            }
            (t.coef, factors.join("*"))
        })
        .collect();
    signed_sum(&parts)
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_symbol(self))
    }
}

impl fmt::Display for HoloSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_symbol(self.as_symbol()))
    }
}
