//! Polynomial text syntax.
//!
//! ```text
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'] factor)*
//! factor := atom ['^' integer]
//! atom   := integer ['/' integer] | variable | '(' poly ')'
//! ```
//!
//! Whitespace is insignificant. Columns in errors are 1-based.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{MultiPoly, PolyError};
use crate::linalg::Rational;

pub fn parse_poly(text: &str, vars: &[String]) -> Result<MultiPoly, PolyError> {
    let mut p = Parser { chars: text.char_indices().collect(), pos: 0, vars, text };
    let poly = p.poly()?;
    p.skip_ws();
    if p.pos < p.chars.len() {
        return Err(p.error(format!("unexpected '{}'", p.chars[p.pos].1)));
    }
    Ok(poly)
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    vars: &'a [String],
    text: &'a str,
}

impl Parser<'_> {
    fn error(&self, message: String) -> PolyError {
        let col = self.text[..self.chars.get(self.pos).map_or(self.text.len(), |c| c.0)].chars().count() + 1;
        PolyError::Parse { col, message }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn nvars(&self) -> usize {
        self.vars.len()
    }

    fn poly(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = MultiPoly::zero(self.nvars());
        let mut sign = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -1
            }
            Some('+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { acc.sub(&t) } else { acc.add(&t) };
            match self.peek() {
                Some('+') => sign = 1,
                Some('-') => sign = -1,
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(c) if c.is_ascii_alphanumeric() || c == '_' || c == '(' => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<MultiPoly, PolyError> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let e = self.integer()?;
            let e: u32 = e.try_into().map_err(|_| self.error("exponent too large".into()))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly, PolyError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                let mut q = Rational::from_integer(n);
                if self.peek() == Some('/') {
                    self.pos += 1;
                    self.skip_ws();
                    let d = self.integer()?;
                    if d.is_zero() {
                        return Err(self.error("zero denominator".into()));
                    }
                    q /= Rational::from_integer(d);
                }
                Ok(MultiPoly::constant(self.nvars(), q))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len() && (self.chars[self.pos].1.is_alphanumeric() || self.chars[self.pos].1 == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
                match self.vars.iter().position(|v| *v == name) {
                    Some(i) => Ok(MultiPoly::var(self.nvars(), i)),
                    None => {
                        self.pos = start;
                        Err(self.error(format!("unknown variable '{name}'")))
                    }
                }
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.poly()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'".into()));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) => Err(self.error(format!("unexpected '{c}'"))),
            None => Err(self.error("unexpected end of input".into())),
        }
    }

    fn integer(&mut self) -> Result<BigInt, PolyError> {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer".into()));
        }
        let digits: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        Ok(digits.parse().expect("ascii digits"))
    }
}
