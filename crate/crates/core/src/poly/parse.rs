//! Parser for the text form `c*v1^e1*v2 - v3 + 1/2*v4^2`.

use super::monomial::Monomial;
use super::order::PolyRing;
use super::polynomial::{Coeff, Polynomial};
use super::PolyError;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::sync::Arc;

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

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, PolyError> {
        Err(PolyError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn digits(&mut self) -> Result<&str, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }

    fn ident(&mut self) -> Result<&str, PolyError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
            self.pos += 1;
        }
        Ok(std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }
}

/// Parses a rational literal such as `-3`, `7/2`.
pub fn parse_rational(text: &str) -> Result<Coeff, PolyError> {
    let bad = || PolyError::Parse {
        pos: 0,
        msg: format!("bad rational {text:?}"),
    };
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Coeff::new(n, d))
}

pub fn parse_polynomial(ring: &Arc<PolyRing>, text: &str) -> Result<Polynomial, PolyError> {
    let mut cur = Cursor {
        s: text.as_bytes(),
        pos: 0,
    };
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        let mut sign = Coeff::one();
        match cur.peek() {
            None if first => return cur.err("empty input"),
            None => break,
            Some(b'+') => {
                cur.pos += 1;
            }
            Some(b'-') => {
                cur.pos += 1;
                sign = -sign;
            }
            Some(_) if first => {}
            Some(c) => return cur.err(format!("expected + or -, found {:?}", c as char)),
        }
        first = false;
        let mut coeff = sign;
        let mut mono = Monomial::one();
        loop {
            match cur.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n: BigInt = cur.digits()?.parse().unwrap();
                    let mut q = Coeff::from_integer(n);
                    if cur.peek() == Some(b'/') {
                        cur.pos += 1;
                        let d: BigInt = cur.digits()?.parse().unwrap();
                        if d.is_zero() {
                            return cur.err("zero denominator");
                        }
                        q /= Coeff::from_integer(d);
                    }
                    coeff *= q;
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let name = cur.ident()?.to_string();
                    let v = ring
                        .vars
                        .position(&name)
                        .ok_or(PolyError::UnknownVariable(name))?;
                    let mut e: u32 = 1;
                    if cur.peek() == Some(b'^') {
                        cur.pos += 1;
                        e = cur
                            .digits()?
                            .parse()
                            .map_err(|_| PolyError::ExponentOverflow)?;
                    }
                    mono = mono.checked_mul(&Monomial::var_pow(v, e)).ok_or(PolyError::ExponentOverflow)?;
                }
                _ => return cur.err("expected a number or a variable"),
            }
            if cur.peek() == Some(b'*') {
                cur.pos += 1;
            } else {
                break;
            }
        }
        terms.push((coeff, mono));
    }
    Ok(Polynomial::from_terms(ring, terms))
}
