//! Human-readable polynomial syntax: `32002*z1*z2^2 + 3*z0^2*z3`.
//!
//! The printer emits terms in descending order, joined by ` + `, with each
//! coefficient as its least non-negative residue (omitted when it is 1 and the
//! monomial is not constant). The parser additionally accepts `-`, repeated
//! factors, and arbitrary integer coefficients.

use std::fmt::Write;

use thiserror::Error;

use super::field::Coeff;
use super::monomial::Monomial;
use super::poly::{PolyRing, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unexpected character {found:?} at byte {pos}")]
    Unexpected { pos: usize, found: char },
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("exponent too large at byte {0}")]
    ExponentOverflow(usize),
    #[error("empty input")]
    Empty,
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn unexpected(&self) -> ParseError {
        match self.s.get(self.pos) {
            Some(&c) => ParseError::Unexpected { pos: self.pos, found: c as char },
            None => ParseError::UnexpectedEnd,
        }
    }

    fn integer(&mut self, modulus: u64) -> Option<(u64, u64)> {
        let start = self.pos;
        let (mut reduced, mut raw) = (0u64, 0u64);
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            let d = (self.s[self.pos] - b'0') as u64;
            reduced = (reduced * 10 + d) % modulus;
            raw = raw.saturating_mul(10).saturating_add(d);
            self.pos += 1;
        }
        (self.pos > start).then_some((reduced, raw))
    }

    fn ident(&mut self) -> Option<String> {
        let start = self.pos;
        if self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphabetic() || self.s[self.pos] == b'_') {
            self.pos += 1;
            while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
                self.pos += 1;
            }
            std::str::from_utf8(&self.s[start..self.pos]).ok().map(str::to_string)
        } else {
            None
        }
    }
}

impl PolyRing {
    pub fn parse(&self, input: &str) -> Result<Polynomial, ParseError> {
        let p = self.field().modulus() as u64;
        let mut cur = Cursor { s: input.as_bytes(), pos: 0 };
        if cur.peek().is_none() {
            return Err(ParseError::Empty);
        }
        let mut terms: Vec<(Monomial, Coeff)> = Vec::new();
        let mut first = true;
        loop {
            let mut negative = false;
            match cur.peek() {
                Some(b'+') if !first => cur.pos += 1,
                Some(b'-') => {
                    cur.pos += 1;
                    negative = true;
                }
                Some(b'+') => cur.pos += 1,
                None => return Err(ParseError::UnexpectedEnd),
                _ if first => {}
                _ => return Err(cur.unexpected()),
            }
            first = false;
            let (mono, coeff) = self.parse_term(&mut cur, p)?;
            let coeff = if negative { self.field().neg(coeff) } else { coeff };
            terms.push((mono, coeff));
            if cur.peek().is_none() {
                break;
            }
        }
        Ok(self.from_terms(terms))
    }

    fn parse_term(&self, cur: &mut Cursor, p: u64) -> Result<(Monomial, Coeff), ParseError> {
        let mut exps = vec![0u16; self.nvars()];
        let mut coeff: u64 = 1;
        loop {
            match cur.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let (v, _) = cur.integer(p).ok_or_else(|| cur.unexpected())?;
                    coeff = coeff * v % p;
                }
                Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                    let Some(name) = cur.ident() else { return Err(cur.unexpected()) };
                    let idx = self.var_index(&name).ok_or(ParseError::UnknownVariable(name))?;
                    let mut e: u64 = 1;
                    if cur.peek() == Some(b'^') {
                        cur.pos += 1;
                        cur.skip_ws();
                        let at = cur.pos;
                        let (_, raw) = cur.integer(u64::MAX).ok_or_else(|| cur.unexpected())?;
                        e = raw;
                        if e > u16::MAX as u64 {
                            return Err(ParseError::ExponentOverflow(at));
                        }
                    }
                    let total = exps[idx] as u64 + e;
                    if total > u16::MAX as u64 {
                        return Err(ParseError::ExponentOverflow(cur.pos));
                    }
                    exps[idx] = total as u16;
                }
                _ => return Err(cur.unexpected()),
            }
            if cur.peek() == Some(b'*') {
                cur.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial::new(&exps), coeff as Coeff))
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut s = String::new();
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('*');
            }
            s.push_str(&self.names()[i]);
            if e > 1 {
                let _ = write!(s, "^{e}");
            }
        }
        s
    }

    pub fn format(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in f.terms().iter().enumerate() {
            if k > 0 {
                out.push_str(" + ");
            }
            if m.is_one() {
                let _ = write!(out, "{c}");
            } else if *c == 1 {
                out.push_str(&self.format_monomial(m));
            } else {
                let _ = write!(out, "{c}*{}", self.format_monomial(m));
            }
        }
        out
    }
}
