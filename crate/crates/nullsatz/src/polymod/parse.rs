//! Text form of polynomials and vectors.
//!
//! Polynomials are sums of terms like `3*x1^2*x2 + t*x1 - 1`: integer or
//! rational coefficients, variables `x1..xn` (plain `x` when there is one
//! variable), and names of field generators such as `t`. Vectors wrap
//! component polynomials in brackets: `[p1, p2, ...]`. Errors carry the byte
//! offset of the offending character.

use crate::error::{Error, Result};
use crate::field::{ExtField, FieldElem};

use super::mpoly::MPoly;
use super::submodule::ModVector;

/// The generator of the tower step with a given name, embedded upward.
pub(crate) fn generator_named(f: &ExtField, name: &str) -> Option<FieldElem> {
    let steps = f.tower();
    let last = steps.last()?;
    if last.var == name {
        return Some(f.generator());
    }
    let below = f.below()?;
    let g = generator_named(&below, name)?;
    Some(f.embed(&g))
}

struct Parser<'a> {
    f: &'a ExtField,
    nvars: usize,
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(f: &'a ExtField, nvars: usize, input: &'a str) -> Self {
        Parser { f, nvars, s: input.as_bytes(), pos: 0 }
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

    fn parse_atom(&mut self) -> Result<MPoly> {
        self.skip_ws();
        let start = self.pos;
        let base = match self.peek() {
            Some(b) if b.is_ascii_digit() => {
                let num = self.parse_digits()?;
                self.skip_ws();
                if self.peek() == Some(b'/') {
                    self.bump();
                    self.skip_ws();
                    let den_at = self.pos;
                    let den = self.parse_digits()?;
                    let c = self
                        .f
                        .from_rational(num, den)
                        .map_err(|_| self.err_at(den_at, "denominator is zero in the field"))?;
                    MPoly::constant(self.nvars, c)
                } else {
                    MPoly::constant(self.nvars, self.f.from_int(num))
                }
            }
            Some(b) if b.is_ascii_alphabetic() || b == b'_' => {
                let name = self.parse_ident();
                if let Some(rest) = name.strip_prefix('x') {
                    if rest.is_empty() && self.nvars == 1 {
                        MPoly::variable(self.f, 1, 0)
                    } else if !rest.is_empty() && rest.bytes().all(|c| c.is_ascii_digit()) {
                        let k: usize = rest
                            .parse()
                            .map_err(|_| self.err_at(start, "variable index too large"))?;
                        if k == 0 || k > self.nvars {
                            return Err(self.err_at(
                                start,
                                format!("variable {name} out of range for {} variables", self.nvars),
                            ));
                        }
                        MPoly::variable(self.f, self.nvars, k - 1)
                    } else {
                        self.generator_atom(&name, start)?
                    }
                } else {
                    self.generator_atom(&name, start)?
                }
            }
            Some(b) => {
                return Err(self.err_at(start, format!("unexpected character '{}'", b as char)))
            }
            None => return Err(self.err_at(start, "expected a term")),
        };
        self.skip_ws();
        if self.peek() == Some(b'^') {
            let e = self.parse_exponent()?;
            let mut acc = MPoly::constant(self.nvars, self.f.one());
            for _ in 0..e {
                acc = MPoly::mul(self.f, &acc, &base);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn generator_atom(&self, name: &str, start: usize) -> Result<MPoly> {
        match generator_named(self.f, name) {
            Some(g) => Ok(MPoly::constant(self.nvars, g)),
            None => Err(self.err_at(start, format!("unknown name '{name}'"))),
        }
    }

    fn parse_term(&mut self) -> Result<MPoly> {
        let mut acc = self.parse_atom()?;
        loop {
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.bump();
                let next = self.parse_atom()?;
                acc = MPoly::mul(self.f, &acc, &next);
            } else {
                return Ok(acc);
            }
        }
    }

    fn parse_poly(&mut self) -> Result<MPoly> {
        self.skip_ws();
        let mut negate = false;
        match self.peek() {
            Some(b'-') => {
                negate = true;
                self.bump();
            }
            Some(b'+') => self.bump(),
            _ => {}
        }
        let mut acc = self.parse_term()?;
        if negate {
            acc = MPoly::neg(self.f, &acc);
        }
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'+') => {
                    self.bump();
                    let t = self.parse_term()?;
                    acc = MPoly::add(self.f, &acc, &t);
                }
                Some(b'-') => {
                    self.bump();
                    let t = self.parse_term()?;
                    acc = MPoly::sub(self.f, &acc, &t);
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

/// Parse a polynomial in `nvars` variables over a field.
pub fn parse_poly(f: &ExtField, nvars: usize, input: &str) -> Result<MPoly> {
    let mut p = Parser::new(f, nvars, input);
    let poly = p.parse_poly()?;
    p.expect_end()?;
    Ok(poly)
}

/// Parse a bracketed vector `[p1, p2, ...]`; the rank is the component count.
pub fn parse_vector(f: &ExtField, nvars: usize, input: &str) -> Result<ModVector> {
    let mut p = Parser::new(f, nvars, input);
    p.skip_ws();
    if p.peek() != Some(b'[') {
        return Err(p.err_at(p.pos, "expected '['"));
    }
    p.bump();
    let mut comps = vec![p.parse_poly()?];
    loop {
        p.skip_ws();
        match p.peek() {
            Some(b',') => {
                p.bump();
                comps.push(p.parse_poly()?);
            }
            Some(b']') => {
                p.bump();
                break;
            }
            Some(b) => {
                return Err(p.err_at(p.pos, format!("expected ',' or ']', found '{}'", b as char)))
            }
            None => return Err(p.err_at(p.pos, "unterminated vector: expected ']'")),
        }
    }
    p.expect_end()?;
    ModVector::from_components(comps)
}
