//! Text and LaTeX rendering of [`LieExpr`], plus the parser for the text
//! form.
//!
//! Text grammar (whitespace between tokens is free):
//!
//! ```text
//! expr    := "0" | term (("+" | "-") term)*
//! term    := ["-"] [coeff] bracket
//! coeff   := INT ["/" INT]
//! bracket := "[" factor+ "]"
//! factor  := "X" INT ["^" INT]
//! ```
//!
//! `[X2 X1^2 X3]` denotes the left-nested `[[[X2, X1], X1], X3]`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::comm::{CommTerm, LieExpr};
use super::LieError;
use crate::freealg::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Text,
    Latex,
}

pub fn render(e: &LieExpr, format: RenderFormat) -> String {
    if e.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (pos, term) in e.terms().enumerate() {
        let negative = term.coeff().is_negative();
        match (pos, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let magnitude = term.coeff().abs();
        match format {
            RenderFormat::Text => render_text_term(&mut out, &magnitude, &term),
            RenderFormat::Latex => render_latex_term(&mut out, &magnitude, &term),
        }
    }
    out
}

fn render_text_term(out: &mut String, magnitude: &Rational, term: &CommTerm) {
    if !magnitude.is_one() {
        write!(out, "{magnitude} ").unwrap();
    }
    write!(out, "[X{}", term.head()).unwrap();
    for (index, mult) in term.tail() {
        if mult == 1 {
            write!(out, " X{index}").unwrap();
        } else {
            write!(out, " X{index}^{mult}").unwrap();
        }
    }
    out.push(']');
}

fn render_latex_term(out: &mut String, magnitude: &Rational, term: &CommTerm) {
    if !magnitude.is_one() {
        if magnitude.denom().is_one() {
            write!(out, "{}", magnitude.numer()).unwrap();
        } else {
            write!(
                out,
                "\\frac{{{}}}{{{}}}",
                magnitude.numer(),
                magnitude.denom()
            )
            .unwrap();
        }
    }
    let letters = term.letters().letters();
    let mut body = format!("X_{{{}}}", letters[0]);
    for letter in &letters[1..] {
        body = format!("[{body}, X_{{{letter}}}]");
    }
    out.push_str(&body);
}

pub fn parse(input: &str) -> Result<LieExpr, LieError> {
    Parser { input, pos: 0 }.expr()
}

struct Parser<'a> {
    input: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> LieError {
        LieError::Parse {
            pos: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.input[self.pos..].chars().next()
    }

    fn eat(&mut self, expected: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(expected) {
            self.pos += expected.len_utf8();
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt, LieError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        self.input[start..self.pos]
            .parse()
            .map_err(|_| self.error("bad integer"))
    }

    fn small(&mut self) -> Result<usize, LieError> {
        let value = self.integer()?;
        usize::try_from(value).map_err(|_| self.error("integer too large"))
    }

    fn expr(mut self) -> Result<LieExpr, LieError> {
        self.skip_ws();
        if self.input[self.pos..].trim() == "0" {
            return Ok(LieExpr::new());
        }
        let mut out = LieExpr::new();
        let mut negative = self.eat('-');
        loop {
            let term = self.term(negative)?;
            out.push(term);
            self.skip_ws();
            if self.pos == self.input.len() {
                return Ok(out);
            }
            negative = if self.eat('+') {
                false
            } else if self.eat('-') {
                true
            } else {
                return Err(self.error("expected '+' or '-'"));
            };
        }
    }

    fn term(&mut self, negative: bool) -> Result<CommTerm, LieError> {
        self.skip_ws();
        let mut coeff = Rational::one();
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            let numer = self.integer()?;
            let denom = if self.eat('/') {
                self.integer()?
            } else {
                BigInt::one()
            };
            if denom == BigInt::from(0) {
                return Err(self.error("zero denominator"));
            }
            coeff = Rational::new(numer, denom);
        }
        if negative {
            coeff = -coeff;
        }
        if !self.eat('[') {
            return Err(self.error("expected '['"));
        }
        let mut factors: Vec<(u8, usize)> = Vec::new();
        loop {
            if self.eat(']') {
                break;
            }
            if !self.eat('X') {
                return Err(self.error("expected 'X'"));
            }
            let index = self.small()?;
            let index = u8::try_from(index)
                .ok()
                .filter(|&i| i > 0)
                .ok_or_else(|| self.error("generator index out of range"))?;
            let mult = if self.eat('^') { self.small()? } else { 1 };
            factors.push((index, mult));
        }
        let Some((&(head, head_mult), rest)) = factors.split_first() else {
            return Err(self.error("empty bracket"));
        };
        let mut tail = Vec::with_capacity(factors.len());
        if head_mult != 1 {
            // X2^3 as the first factor is [X2, X2, X2].
            if head_mult == 0 {
                return Err(LieError::ZeroMultiplicity(head));
            }
            tail.push((head, head_mult - 1));
        }
        tail.extend_from_slice(rest);
        CommTerm::new(coeff, head, &tail)
    }
}
