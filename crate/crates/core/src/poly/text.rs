//! Text form of polynomials.
//!
//! ```text
//! poly   := '0' | term ('+' term)*
//! term   := factor ('*' factor)*
//! factor := var ('^' uint)? | '1'
//! ```
//!
//! Variables must belong to the ring's registry; whitespace is ignored. The
//! canonical form lists terms in descending monomial order and the factors of
//! each term in registry order.

use std::fmt;
use std::sync::Arc;

use super::monomial::{Monomial, MAX_VARS};
use super::polynomial::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, m) in self.terms().iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", format_monomial(self.ring(), m))?;
        }
        Ok(())
    }
}

pub fn format_monomial(ring: &Ring, m: &Monomial) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let mut factors = Vec::new();
    for i in 0..ring.arity() {
        match m.exponent(i) {
            0 => {}
            1 => factors.push(ring.name(i).to_string()),
            e => factors.push(format!("{}^{}", ring.name(i), e)),
        }
    }
    factors.join("*")
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    ring: &'a Ring,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { position: self.pos, message: message.into() })
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

    fn uint(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected exponent");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse().or_else(|_| {
            self.pos = start;
            self.err("exponent out of range")
        })
    }

    fn factor(&mut self, exps: &mut [u32; MAX_VARS]) -> Result<()> {
        self.skip_ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(b'1') => {
                self.pos += 1;
                if self.src.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric()) {
                    self.pos = start;
                    return self.err("unexpected token");
                }
                return Ok(());
            }
            Some(c) if c.is_ascii_alphabetic() || *c == b'_' => {}
            Some(_) => return self.err("expected variable"),
            None => return self.err("unexpected end of input"),
        }
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
        let Some(i) = self.ring.index_of(name) else {
            self.pos = start;
            return self.err(format!("unknown variable `{name}`"));
        };
        let mut e = 1;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            e = self.uint()?;
        }
        exps[i] += e;
        if exps[i] > u8::MAX as u32 {
            self.pos = start;
            return self.err("exponent out of range");
        }
        Ok(())
    }

    fn term(&mut self) -> Result<Monomial> {
        let mut exps = [0u32; MAX_VARS];
        self.factor(&mut exps)?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            self.factor(&mut exps)?;
        }
        let small: Vec<u8> = exps[..self.ring.arity()].iter().map(|&e| e as u8).collect();
        Ok(Monomial::new(&small, self.ring.weights()))
    }
}

impl Polynomial {
    pub fn parse(text: &str, ring: &Arc<Ring>) -> Result<Polynomial> {
        let mut p = Parser { src: text.as_bytes(), pos: 0, ring };
        if p.peek().is_none() {
            return p.err("empty input");
        }
        // lone zero
        let save = p.pos;
        if p.src[p.pos] == b'0' {
            p.pos += 1;
            if p.peek().is_none() {
                return Ok(Polynomial::zero(ring));
            }
            p.pos = save;
            return p.err("`0` must stand alone");
        }
        let mut terms = vec![p.term()?];
        loop {
            match p.peek() {
                None => break,
                Some(b'+') => {
                    p.pos += 1;
                    terms.push(p.term()?);
                }
                Some(_) => return p.err("expected `+` or `*`"),
            }
        }
        Ok(Polynomial::from_monomials(ring, terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_form_parses_and_formats_canonically() {
        let ring = Ring::quartic();
        let p = Polynomial::parse("a*e + b*f + c*d + d*e + d*f + e*f + d^2 + e^2 + f^2", &ring).unwrap();
        assert_eq!(p.len(), 9);
        assert_eq!(p.to_string(), "c*d + d^2 + a*e + d*e + e^2 + b*f + d*f + e*f + f^2");
        assert_eq!(Polynomial::parse(&p.to_string(), &ring).unwrap(), p);
    }

    #[test]
    fn zero_and_one() {
        let ring = Ring::plane();
        let z = Polynomial::parse(" 0 ", &ring).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
        assert!(Polynomial::parse("1", &ring).unwrap().is_one());
        assert!(Polynomial::parse("x + x", &ring).unwrap().is_zero());
        assert_eq!(Polynomial::parse("x*x*y^2", &ring).unwrap().to_string(), "x^2*y^2");
    }

    #[test]
    fn errors_carry_positions() {
        let ring = Ring::plane();
        match Polynomial::parse("x + q", &ring) {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("{other:?}"),
        }
        assert!(matches!(Polynomial::parse("x +", &ring), Err(Error::Parse { position: 3, .. })));
        assert!(matches!(Polynomial::parse("x ^", &ring), Err(Error::Parse { .. })));
        assert!(matches!(Polynomial::parse("0 + x", &ring), Err(Error::Parse { position: 0, .. })));
        assert!(matches!(Polynomial::parse("x y", &ring), Err(Error::Parse { position: 2, .. })));
        assert!(matches!(Polynomial::parse("", &ring), Err(Error::Parse { .. })));
    }
}
