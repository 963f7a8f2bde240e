//! Textual polynomial format.
//!
//! A polynomial is a sum of terms `c * x1^e1 * ... * xn^en`. The printer
//! emits terms in descending graded-lex order, omits a unit coefficient on
//! non-constant terms, writes `xi` for `xi^1`, skips zero exponents, and
//! writes the zero polynomial as `0`. The parser accepts that output plus any
//! reordering, repeated monomials and extra factors such as `2 * x1 * 3 * x1`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{ExactRational, Monomial, Polynomial};
use crate::error::{Error, Result};

pub(super) fn write_polynomial(p: &Polynomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if p.is_zero() {
        return f.write_str("0");
    }
    for (i, (m, c)) in p.terms().rev().enumerate() {
        let sign = if c.is_negative() { "-" } else { "+" };
        match (i, c.is_negative()) {
            (0, false) => {}
            (0, true) => f.write_str("-")?,
            _ => write!(f, " {sign} ")?,
        }
        write_term(m, &c.abs(), f)?;
    }
    Ok(())
}

fn write_term(m: &Monomial, c: &ExactRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    if m.is_constant() || !c.is_one() {
        write!(f, "{c}")?;
        first = false;
    }
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str(" * ")?;
        }
        first = false;
        write!(f, "x{}", i + 1)?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl Polynomial {
    /// Parses the textual format with variables `x1..x{arity}`.
    pub fn parse(text: &str, arity: usize) -> Result<Polynomial> {
        if arity == 0 {
            return Err(Error::ZeroArity);
        }
        Parser {
            src: text.as_bytes(),
            pos: 0,
            arity,
        }
        .polynomial()
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    arity: usize,
}

impl Parser<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset: self.pos,
            message: message.into(),
        })
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

    fn digits(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        // ASCII digits only
        Ok(std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn polynomial(mut self) -> Result<Polynomial> {
        let mut out = Polynomial::zero(self.arity);
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                None if first => return self.err("empty polynomial"),
                None => break,
                Some(_) if first => false,
                Some(c) => return self.err(format!("expected '+' or '-', found '{}'", c as char)),
            };
            first = false;
            let (m, mut c) = self.term()?;
            if negative {
                c = -c;
            }
            out.add_term(m, c);
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<(Monomial, ExactRational)> {
        let mut exps = vec![0u32; self.arity];
        let mut coeff = BigRational::one();
        loop {
            match self.peek() {
                Some(b'x') => {
                    self.pos += 1;
                    let idx: usize = self.digits()?.parse().map_err(|_| self.parse_err("bad index"))?;
                    if idx == 0 || idx > self.arity {
                        return self.err(format!("variable x{idx} outside x1..x{}", self.arity));
                    }
                    let mut e = 1u32;
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        e = self.digits()?.parse().map_err(|_| self.parse_err("bad exponent"))?;
                    }
                    exps[idx - 1] = exps[idx - 1]
                        .checked_add(e)
                        .ok_or_else(|| self.parse_err("exponent overflow"))?;
                }
                Some(c) if c.is_ascii_digit() => {
                    let num: BigInt = self.digits()?.parse().unwrap();
                    let mut den = BigInt::one();
                    if self.peek() == Some(b'/') {
                        self.pos += 1;
                        den = self.digits()?.parse().unwrap();
                        if den.is_zero() {
                            return self.err("zero denominator");
                        }
                    }
                    coeff *= BigRational::new(num, den);
                }
                Some(c) => return self.err(format!("unexpected '{}'", c as char)),
                None => return self.err("unexpected end of input"),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((Monomial(exps), coeff))
    }

    fn parse_err(&self, message: &str) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.to_string(),
        }
    }
}
