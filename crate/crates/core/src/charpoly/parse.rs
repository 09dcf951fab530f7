//! Text syntax for character polynomials.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (('*'|'/') factor)*
//! factor := atom ['^' int]
//! atom   := int | X<r> | Y<r> | '(' expr ')' | binom '(' expr ',' int ')'
//!         | binom:μ|λ | Cn | Sym2Cn | Wedge2Cn | Wedge3Cn
//! ```
//!
//! Division is only by nonzero constants. Errors carry byte offsets.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{preset, CharacterPolynomial};
use crate::error::{Error, Result};
use crate::partitions::DoublePartition;

pub fn parse_char_poly(input: &str) -> Result<CharacterPolynomial> {
    let mut p = Parser { src: input.as_bytes(), text: input, pos: 0 };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a [u8],
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.pos, msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<CharacterPolynomial> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<CharacterPolynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    self.skip_ws();
                    let at = self.pos;
                    let d = self.factor()?;
                    match d.as_constant() {
                        Some(c) if c != BigRational::from_integer(0.into()) => {
                            acc = acc.scale(&c.recip());
                        }
                        Some(_) => return Err(Error::parse(at, "division by zero")),
                        None => return Err(Error::parse(at, "can only divide by a constant")),
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<CharacterPolynomial> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.uint()?;
            let e = u32::try_from(e).map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn uint(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a nonnegative integer"));
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|_| Error::parse(start, "integer out of range"))
    }

    fn atom(&mut self) -> Result<CharacterPolynomial> {
        match self.peek() {
            None => Err(self.error("unexpected end of input")),
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: BigInt = self.text[start..self.pos].parse().expect("digits");
                Ok(CharacterPolynomial::constant(BigRational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => self.identifier(),
            Some(_) => Err(self.error("unexpected character")),
        }
    }

    fn identifier(&mut self) -> Result<CharacterPolynomial> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        let word = &self.text[start..self.pos];
        if let Some(p) = preset(word) {
            return Ok(p);
        }
        if word == "binom" {
            return if self.src.get(self.pos) == Some(&b':') {
                self.pos += 1;
                self.basis_literal()
            } else {
                self.expect(b'(')?;
                let inner = self.expr()?;
                self.expect(b',')?;
                let k = self.uint()?;
                self.expect(b')')?;
                Ok(inner.binomial(k))
            };
        }
        let (head, digits) = word.split_at(1);
        if (head == "X" || head == "Y") && !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
            let r: usize = digits
                .parse()
                .map_err(|_| Error::parse(start + 1, "index out of range"))?;
            if r == 0 {
                return Err(Error::parse(start + 1, "cycle index must be at least 1"));
            }
            return Ok(if head == "X" {
                CharacterPolynomial::x(r)
            } else {
                CharacterPolynomial::y(r)
            });
        }
        Err(Error::parse(start, format!("unknown identifier {word:?}")))
    }

    /// `binom:μ|λ`, consuming digits, commas and one bar.
    fn basis_literal(&mut self) -> Result<CharacterPolynomial> {
        let start = self.pos;
        while self.pos < self.src.len() && matches!(self.src[self.pos], b'0'..=b'9' | b',' | b'|') {
            self.pos += 1;
        }
        let label: DoublePartition = self.text[start..self.pos].parse().map_err(|e| match e {
            Error::Parse { offset, message } => Error::Parse { offset: start + offset, message },
            other => other,
        })?;
        Ok(CharacterPolynomial::binom_basis_element(&label.positive, &label.negative))
    }
}
