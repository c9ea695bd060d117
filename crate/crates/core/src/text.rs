//! Text grammar for polynomials.
//!
//! Binary polynomials are `+`-joined terms `1`, `x`, `x^K` (or the lone
//! constant `0`). Polynomials over R may prefix a term with `u*` or
//! `(1+u)*`, and the constants `u` and `(1+u)` stand alone. Whitespace is
//! ignored and matching is case-sensitive. Repeated powers add.

use crate::error::{Error, Result};
use crate::gf2::BinPoly;
use crate::ring::{RElem, RPoly};

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        // columns are 1-based character positions in the original text
        let chars = src
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i + 1, c))
            .collect();
        Cursor { chars, pos: 0, src }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.chars
            .get(self.pos)
            .map_or(self.src.chars().count() + 1, |&(col, _)| col)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: 1,
            column: self.column(),
            message: message.into(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        let mut value: usize = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as usize))
                .ok_or_else(|| self.error("exponent too large"))?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an exponent"));
        }
        Ok(value)
    }

    /// `x` or `x^K`, returning the exponent.
    fn monomial(&mut self) -> Result<usize> {
        self.expect('x')?;
        if self.eat('^') {
            self.number()
        } else {
            Ok(1)
        }
    }
}

pub fn parse_binpoly(src: &str) -> Result<BinPoly> {
    let mut cur = Cursor::new(src);
    if cur.at_end() {
        return Err(cur.error("empty polynomial"));
    }
    if cur.chars.len() == 1 && cur.eat('0') {
        return Ok(BinPoly::zero());
    }
    let mut poly = BinPoly::zero();
    loop {
        let exp = match cur.peek() {
            Some('1') => {
                cur.pos += 1;
                0
            }
            Some('x') => cur.monomial()?,
            _ => return Err(cur.error("expected a term '1', 'x' or 'x^K'")),
        };
        poly.flip(exp);
        if cur.at_end() {
            return Ok(poly);
        }
        cur.expect('+')?;
    }
}

fn coefficient(cur: &mut Cursor<'_>) -> Result<Option<RElem>> {
    match cur.peek() {
        Some('u') => {
            cur.pos += 1;
            Ok(Some(RElem::U))
        }
        Some('(') => {
            cur.pos += 1;
            cur.expect('1')?;
            cur.expect('+')?;
            cur.expect('u')?;
            cur.expect(')')?;
            Ok(Some(RElem::ONE_PLUS_U))
        }
        Some('1') => {
            cur.pos += 1;
            Ok(Some(RElem::ONE))
        }
        _ => Ok(None),
    }
}

pub fn parse_rpoly(src: &str) -> Result<RPoly> {
    let mut cur = Cursor::new(src);
    if cur.at_end() {
        return Err(cur.error("empty polynomial"));
    }
    if cur.chars.len() == 1 && cur.eat('0') {
        return Ok(RPoly::zero());
    }
    let mut poly = RPoly::zero();
    loop {
        let (coef, exp) = match coefficient(&mut cur)? {
            Some(c) => {
                if cur.eat('*') {
                    (c, cur.monomial()?)
                } else {
                    (c, 0)
                }
            }
            None if cur.peek() == Some('x') => (RElem::ONE, cur.monomial()?),
            None => return Err(cur.error("expected a term such as '1', 'u', '(1+u)', 'u*x^K'")),
        };
        poly.add_term(coef, exp);
        if cur.at_end() {
            return Ok(poly);
        }
        cur.expect('+')?;
    }
}
