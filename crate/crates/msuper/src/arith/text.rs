//! Canonical text form of polynomials and rational functions, plus a parser.
//!
//! Grammar: `poly := term (('+'|'-') term)*`, `term := int ['*' 'q^'int] ['*' 't^'int]`,
//! with unit coefficients and unit exponents elided on output. A rational function
//! renders as `poly` or `poly/(poly)`; a numerator with several terms is parenthesized.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::poly::{Mon, PolyQT};
use super::rat::RatQT;
use crate::error::{Error, Result};

/// Terms ordered by ascending total degree, q-heavier first within a degree.
fn display_order(p: &PolyQT) -> Vec<&(Mon, BigInt)> {
    let mut v: Vec<&(Mon, BigInt)> = p.terms().iter().collect();
    v.sort_by_key(|(m, _)| (m.degree(), std::cmp::Reverse(m.q)));
    v
}

fn mon_text(m: Mon) -> String {
    let mut parts = Vec::new();
    for (v, e) in [("q", m.q), ("t", m.t)] {
        match e {
            0 => {}
            1 => parts.push(v.to_string()),
            _ => parts.push(format!("{v}^{e}")),
        }
    }
    parts.join("*")
}

fn mon_latex(m: Mon) -> String {
    let mut s = String::new();
    for (v, e) in [("q", m.q), ("t", m.t)] {
        match e {
            0 => {}
            1 => s.push_str(v),
            _ => s.push_str(&format!("{v}^{{{e}}}")),
        }
    }
    s
}

fn render_with(p: &PolyQT, mon: fn(Mon) -> String, sep: &str) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (m, c)) in display_order(p).into_iter().enumerate() {
        let neg = c.is_negative();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        let ms = mon(*m);
        if ms.is_empty() {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&ms);
        } else {
            out.push_str(&format!("{a}{sep}{ms}"));
        }
    }
    out
}

pub fn render_poly(p: &PolyQT) -> String {
    render_with(p, mon_text, "*")
}

/// Deterministic canonical string; round-trips through [`parse_rat`].
pub fn render_rat(f: &RatQT) -> String {
    let num = render_poly(f.num());
    if f.den().is_one() {
        return num;
    }
    let num = if f.num().len() > 1 { format!("({num})") } else { num };
    format!("{num}/({})", render_poly(f.den()))
}

pub fn latex_poly(p: &PolyQT) -> String {
    render_with(p, mon_latex, " ")
}

pub fn latex_rat(f: &RatQT) -> String {
    if f.den().is_one() {
        latex_poly(f.num())
    } else {
        format!("\\frac{{{}}}{{{}}}", latex_poly(f.num()), latex_poly(f.den()))
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {}", self.pos))
    }

    fn uint(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(txt.parse().unwrap())
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.eat(b'^') {
            let e = self.uint()?;
            u32::try_from(e).map_err(|_| self.err("exponent too large"))
        } else {
            Ok(1)
        }
    }

    /// A product of an optional integer and powers of q and t.
    fn term(&mut self) -> Result<(Mon, BigInt)> {
        let mut c = BigInt::one();
        let mut m = Mon::default();
        let mut first = true;
        loop {
            match self.peek() {
                Some(b'q') => {
                    self.pos += 1;
                    m.q += self.exponent()?;
                }
                Some(b't') => {
                    self.pos += 1;
                    m.t += self.exponent()?;
                }
                Some(d) if d.is_ascii_digit() => c *= self.uint()?,
                _ => return Err(self.err(if first { "expected term" } else { "expected factor" })),
            }
            first = false;
            if !self.eat(b'*') {
                return Ok((m, c));
            }
        }
    }

    fn poly(&mut self) -> Result<PolyQT> {
        let mut terms = Vec::new();
        let mut neg = self.eat(b'-');
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if neg { -c } else { c }));
            if self.eat(b'+') {
                neg = false;
            } else if self.eat(b'-') {
                neg = true;
            } else {
                return Ok(PolyQT::from_terms(terms));
            }
        }
    }

    fn grouped(&mut self) -> Result<PolyQT> {
        if self.eat(b'(') {
            let p = self.poly()?;
            if !self.eat(b')') {
                return Err(self.err("expected ')'"));
            }
            Ok(p)
        } else {
            self.poly()
        }
    }
}

pub fn parse_poly(s: &str) -> Result<PolyQT> {
    let mut p = Parser { s: s.as_bytes(), pos: 0 };
    let out = p.poly()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

/// Parses `poly` or `poly/(poly)` (the numerator may be parenthesized).
pub fn parse_rat(s: &str) -> Result<RatQT> {
    let mut p = Parser { s: s.as_bytes(), pos: 0 };
    let num = p.grouped()?;
    let den = if p.eat(b'/') { p.grouped()? } else { PolyQT::one() };
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    RatQT::new(num, den)
}

impl std::str::FromStr for RatQT {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_rat(s)
    }
}
