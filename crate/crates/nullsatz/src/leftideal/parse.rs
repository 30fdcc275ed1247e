//! Text form of algebra-coefficient polynomials.
//!
//! A polynomial is a sum of products of atoms, as in
//! `(e11 + 2*e12)*x1^2 + e21`: atoms are integers or rationals, variables
//! `x1..xn` (plain `x` when there is one variable), basis names of the
//! algebra, field generator names, and parenthesized subexpressions. Products
//! multiply left to right in the algebra. Variables shadow basis names, and
//! basis names shadow field generators. Errors carry the byte offset of the
//! offending character.

use crate::error::{Error, Result};
use crate::findim::FinDimAlgebra;
use crate::polymod::parse::generator_named;

use super::AlgPoly;

struct Parser<'a> {
    alg: &'a FinDimAlgebra,
    nvars: usize,
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(alg: &'a FinDimAlgebra, nvars: usize, input: &'a str) -> Self {
        Parser { alg, nvars, s: input.as_bytes(), pos: 0 }
    }

    fn err_at(&self, offset: usize, why: impl Into<String>) -> Error {
        Error::Parse { offset, why: why.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn parse_digits(&mut self) -> Result<i64> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err_at(start, "expected digits"));
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        text.parse::<i64>().map_err(|_| self.err_at(start, "number too large"))
    }

    fn parse_ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.s.len()
            && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.s[start..self.pos]).into_owned()
    }

    fn parse_exponent(&mut self) -> Result<u32> {
        // Caller saw '^'.
        self.bump();
        self.skip_ws();
        let at = self.pos;
        let e = self.parse_digits()?;
        u32::try_from(e)
            .ok()
            .filter(|&e| e <= 10_000)
            .ok_or_else(|| self.err_at(at, "exponent out of range"))
    }

    fn constant(&self, c: crate::field::FieldElem) -> AlgPoly {
        AlgPoly::constant(self.nvars, &self.alg.scale(&c, &self.alg.unit()))
    }

    fn parse_atom(&mut self) -> Result<AlgPoly> {
        self.skip_ws();
        let start = self.pos;
        let base = match self.peek() {
            Some(b'(') => {
                self.bump();
                let inner = self.parse_poly()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.err_at(self.pos, "expected ')'"));
                }
                self.bump();
                inner
            }
            Some(b) if b.is_ascii_digit() => {
                let num = self.parse_digits()?;
                self.skip_ws();
                if self.peek() == Some(b'/') {
                    self.bump();
                    self.skip_ws();
                    let den_at = self.pos;
                    let den = self.parse_digits()?;
                    let c = self
                        .alg
                        .field()
                        .from_rational(num, den)
                        .map_err(|_| self.err_at(den_at, "denominator is zero in the field"))?;
                    self.constant(c)
                } else {
                    AlgPoly::constant(self.nvars, &self.alg.from_int(num))
                }
            }
            Some(b) if b.is_ascii_alphabetic() || b == b'_' => {
                let name = self.parse_ident();
                self.name_atom(&name, start)?
            }
            Some(b) => {
                return Err(self.err_at(start, format!("unexpected character '{}'", b as char)))
            }
            None => return Err(self.err_at(start, "expected a term")),
        };
        self.skip_ws();
        if self.peek() == Some(b'^') {
            let e = self.parse_exponent()?;
            let mut acc = AlgPoly::one(self.alg, self.nvars);
            for _ in 0..e {
                acc = acc.mul(self.alg, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn name_atom(&self, name: &str, start: usize) -> Result<AlgPoly> {
        if let Some(rest) = name.strip_prefix('x') {
            if rest.is_empty() && self.nvars == 1 {
                return Ok(AlgPoly::variable(self.alg, 1, 0));
            }
            if !rest.is_empty() && rest.bytes().all(|c| c.is_ascii_digit()) {
                let k: usize = rest
                    .parse()
                    .map_err(|_| self.err_at(start, "variable index too large"))?;
                if k == 0 || k > self.nvars {
                    return Err(self.err_at(
                        start,
                        format!("variable {name} out of range for {} variables", self.nvars),
                    ));
                }
                return Ok(AlgPoly::variable(self.alg, self.nvars, k - 1));
            }
        }
        if let Some(i) = self.alg.names().iter().position(|n| n == name) {
            return Ok(AlgPoly::constant(self.nvars, &self.alg.basis_elem(i)));
        }
        match generator_named(self.alg.field(), name) {
            Some(g) => Ok(self.constant(g)),
            None => Err(self.err_at(start, format!("unknown name '{name}'"))),
        }
    }

    fn parse_signed_atom(&mut self) -> Result<AlgPoly> {
        self.skip_ws();
        let mut negate = false;
        while self.peek() == Some(b'-') {
            negate = !negate;
            self.bump();
            self.skip_ws();
        }
        let atom = self.parse_atom()?;
        Ok(if negate { atom.neg(self.alg) } else { atom })
    }

    fn parse_term(&mut self) -> Result<AlgPoly> {
        let mut acc = self.parse_signed_atom()?;
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.bump();
                let next = self.parse_signed_atom()?;
                acc = acc.mul(self.alg, &next);
            } else {
                return Ok(acc);
            }
        }
    }

    fn parse_poly(&mut self) -> Result<AlgPoly> {
        self.skip_ws();
        if self.peek() == Some(b'+') {
            self.bump();
        }
        let mut acc = self.parse_term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    let t = self.parse_term()?;
                    acc = acc.add(self.alg, &t);
                }
                Some(b'-') => {
                    self.bump();
                    let t = self.parse_term()?;
                    acc = acc.sub(self.alg, &t);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn expect_end(&mut self) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            None => Ok(()),
            Some(b) => Err(self.err_at(self.pos, format!("unexpected character '{}'", b as char))),
        }
    }
}

/// Parse a polynomial with coefficients in the given algebra.
pub fn parse_alg_poly(alg: &FinDimAlgebra, nvars: usize, input: &str) -> Result<AlgPoly> {
    let mut p = Parser::new(alg, nvars, input);
    let poly = p.parse_poly()?;
    p.expect_end()?;
    Ok(poly)
}
