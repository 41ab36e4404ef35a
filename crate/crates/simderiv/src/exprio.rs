//! Text round-tripping for polynomials in x and y.
//!
//! Grammar (no implicit multiplication, whitespace insignificant):
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := atom ('^' uint)?
//! atom     := rational | 'x' | 'y' | '(' expr ')' | '-' factor
//! rational := uint ('/' uint)?
//! ```
//!
//! Unary minus applies to a whole factor, so `-x^2` parses as `-(x^2)`.
//! Exponents are capped at [`MAX_EXPONENT`]. The formatter emits a canonical
//! form (terms in descending lex order with x before y, reduced rational
//! coefficients, unit coefficients and zero exponents elided) that parses
//! back to the same polynomial, and this grammar is the wire format used by
//! the CLI, JSON output, and CSV cells.

use crate::qpoly::{BPoly, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Largest accepted exponent.
pub const MAX_EXPONENT: u32 = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum ParseError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("exponent at position {pos} exceeds the limit {MAX_EXPONENT}")]
    ExponentOverflow { pos: usize },
    #[error("zero denominator at position {pos}")]
    ZeroDenominator { pos: usize },
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize, // 0-based index into chars; reported positions are 1-based
    _src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            chars: src.chars().collect(),
            pos: 0,
            _src: src,
        }
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

    fn here(&self) -> usize {
        self.pos + 1
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax {
            pos: self.here(),
            msg: msg.into(),
        })
    }

    fn parse_uint_digits(&mut self) -> Result<(BigInt, usize), ParseError> {
        self.skip_ws();
        let start = self.here();
        let mut digits = String::new();
        while let Some(c) = self.chars.get(self.pos).copied() {
            if c.is_ascii_digit() {
                digits.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        if digits.is_empty() {
            return self.syntax("expected a digit");
        }
        Ok((digits.parse::<BigInt>().expect("digits"), start))
    }

    fn parse_expr(&mut self) -> Result<BPoly, ParseError> {
        let mut acc = self.parse_term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.bump();
                    acc = &acc + &self.parse_term()?;
                }
                '-' => {
                    self.bump();
                    acc = &acc - &self.parse_term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_term(&mut self) -> Result<BPoly, ParseError> {
        let mut acc = self.parse_factor()?;
        while self.peek() == Some('*') {
            self.bump();
            acc = &acc * &self.parse_factor()?;
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<BPoly, ParseError> {
        let base = self.parse_atom()?;
        if self.peek() == Some('^') {
            self.bump();
            self.skip_ws();
            match self.chars.get(self.pos) {
                Some(c) if c.is_ascii_digit() => {}
                _ => return self.syntax("expected a non-negative integer exponent after '^'"),
            }
            let (n, start) = self.parse_uint_digits()?;
            if n > BigInt::from(MAX_EXPONENT) {
                return Err(ParseError::ExponentOverflow { pos: start });
            }
            let n: u32 = n.try_into().expect("bounded above");
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn parse_atom(&mut self) -> Result<BPoly, ParseError> {
        match self.peek() {
            Some('x') => {
                self.bump();
                Ok(BPoly::var_x())
            }
            Some('y') => {
                self.bump();
                Ok(BPoly::var_y())
            }
            Some('(') => {
                self.bump();
                let inner = self.parse_expr()?;
                if self.peek() != Some(')') {
                    return self.syntax("expected ')'");
                }
                self.bump();
                Ok(inner)
            }
            Some('-') => {
                self.bump();
                let f = self.parse_factor()?;
                Ok(-&f)
            }
            Some(c) if c.is_ascii_digit() => {
                let (num, _) = self.parse_uint_digits()?;
                if self.peek() == Some('/') {
                    self.bump();
                    self.skip_ws();
                    match self.chars.get(self.pos) {
                        Some(c) if c.is_ascii_digit() => {}
                        _ => return self.syntax("expected a denominator after '/'"),
                    }
                    let (den, den_pos) = self.parse_uint_digits()?;
                    if den.is_zero() {
                        return Err(ParseError::ZeroDenominator { pos: den_pos });
                    }
                    return Ok(BPoly::constant(Rat::new(num, den)));
                }
                Ok(BPoly::constant(Rat::from_integer(num)))
            }
            Some(_) => self.syntax("expected a number, 'x', 'y', '(', or '-'"),
            None => self.syntax("unexpected end of input"),
        }
    }
}

/// Parses the grammar above into a canonical [`BPoly`].
pub fn parse_poly(src: &str) -> Result<BPoly, ParseError> {
    let mut p = Parser::new(src);
    let poly = p.parse_expr()?;
    if p.peek().is_some() {
        return p.syntax("trailing input");
    }
    Ok(poly)
}

/// Formats a rational in canonical "p" or "p/q" form.
pub fn format_rat(c: &Rat) -> String {
    if c.denom().is_one() {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Parses a standalone rational scalar ("p", "-p", "p/q", "-p/q").
pub fn parse_rat(src: &str) -> Result<Rat, ParseError> {
    let poly = parse_poly(src)?;
    match poly.to_upoly().and_then(|u| {
        if u.degree().map_or(true, |d| d == 0) {
            Some(u.coeff(0))
        } else {
            None
        }
    }) {
        Some(c) => Ok(c),
        None => Err(ParseError::Syntax {
            pos: 1,
            msg: "expected a rational constant".into(),
        }),
    }
}

fn format_monomial(c: &Rat, i: u32, j: u32) -> String {
    let mut parts: Vec<String> = Vec::new();
    let abs = c.abs();
    if !abs.is_one() || (i == 0 && j == 0) {
        parts.push(format_rat(&abs));
    }
    if i > 0 {
        parts.push(if i == 1 {
            "x".into()
        } else {
            format!("x^{i}")
        });
    }
    if j > 0 {
        parts.push(if j == 1 {
            "y".into()
        } else {
            format!("y^{j}")
        });
    }
    parts.join("*")
}

/// Canonical text form: terms in descending lex order (x before y), reduced
/// coefficients, unit coefficients and zero exponents elided, zero rendered
/// as "0".
pub fn format_poly(f: &BPoly) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, ((i, j), c)) in f.terms().collect::<Vec<_>>().into_iter().rev().enumerate() {
        if idx == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&format_monomial(c, i, j));
    }
    out
}
