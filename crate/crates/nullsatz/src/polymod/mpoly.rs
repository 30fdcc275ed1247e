//! Multivariate polynomials with exact coefficients.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{ExtField, FieldElem};

use super::{cmp_monomials, TermRule};

/// Exponent vector of a monomial, one entry per variable.
pub type MultiIndex = Vec<u32>;

/// A polynomial in `nvars` variables, stored as a map from exponent vector
/// to nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<MultiIndex, FieldElem>,
}

impl MPoly {
    /// The zero polynomial.
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    /// A constant polynomial.
    pub fn constant(nvars: usize, c: FieldElem) -> Self {
        let mut p = MPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// The variable `x(l+1)` as a polynomial.
    pub fn variable(f: &ExtField, nvars: usize, l: usize) -> Self {
        assert!(l < nvars, "variable index out of range");
        let mut exp = vec![0u32; nvars];
        exp[l] = 1;
        MPoly::term(nvars, exp, f.one())
    }

    /// A single term; a zero coefficient gives the zero polynomial.
    pub fn term(nvars: usize, exp: MultiIndex, c: FieldElem) -> Self {
        assert_eq!(exp.len(), nvars, "exponent width mismatch");
        let mut p = MPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    /// Collect `(exponent, coefficient)` pairs, dropping zero coefficients.
    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (MultiIndex, FieldElem)>,
    ) -> Self {
        let mut p = MPoly::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent width mismatch");
            if !c.is_zero() {
                p.terms.insert(e, c);
            }
        }
        p
    }

    /// Number of variables this polynomial is written in.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterate over `(exponent, coefficient)` pairs in storage order.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &FieldElem)> {
        self.terms.iter()
    }

    /// Number of terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of an exponent vector, zero when absent.
    pub fn coeff(&self, f: &ExtField, exp: &[u32]) -> FieldElem {
        self.terms.get(exp).cloned().unwrap_or_else(|| f.zero())
    }

    /// Largest total degree among the terms, `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum::<u32>()).max()
    }

    /// The largest term under a term rule.
    pub fn leading(&self, rule: TermRule) -> Option<(&MultiIndex, &FieldElem)> {
        self.terms
            .iter()
            .max_by(|a, b| cmp_monomials(rule, a.0, b.0))
    }

    fn accumulate(&mut self, f: &ExtField, exp: MultiIndex, c: &FieldElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(slot) => {
                *slot = f.add(slot, c);
                if slot.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c.clone());
            }
        }
    }

    /// Sum of two polynomials.
    pub fn add(f: &ExtField, a: &MPoly, b: &MPoly) -> MPoly {
        assert_eq!(a.nvars, b.nvars, "variable count mismatch");
        let mut out = a.clone();
        for (e, c) in &b.terms {
            out.accumulate(f, e.clone(), c);
        }
        out
    }

    /// Difference of two polynomials.
    pub fn sub(f: &ExtField, a: &MPoly, b: &MPoly) -> MPoly {
        MPoly::add(f, a, &MPoly::neg(f, b))
    }

    /// Negation.
    pub fn neg(f: &ExtField, a: &MPoly) -> MPoly {
        let mut out = MPoly::zero(a.nvars);
        for (e, c) in &a.terms {
            out.terms.insert(e.clone(), f.neg(c));
        }
        out
    }

    /// Multiply by a scalar.
    pub fn scale(f: &ExtField, a: &MPoly, c: &FieldElem) -> MPoly {
        let mut out = MPoly::zero(a.nvars);
        if c.is_zero() {
            return out;
        }
        for (e, k) in &a.terms {
            let prod = f.mul(k, c);
            if !prod.is_zero() {
                out.terms.insert(e.clone(), prod);
            }
        }
        out
    }

    /// Multiply by a single term.
    pub fn mul_term(f: &ExtField, a: &MPoly, exp: &[u32], c: &FieldElem) -> MPoly {
        assert_eq!(exp.len(), a.nvars, "exponent width mismatch");
        let mut out = MPoly::zero(a.nvars);
        if c.is_zero() {
            return out;
        }
        for (e, k) in &a.terms {
            let shifted: MultiIndex = e.iter().zip(exp).map(|(&x, &y)| x + y).collect();
            let prod = f.mul(k, c);
            if !prod.is_zero() {
                out.terms.insert(shifted, prod);
            }
        }
        out
    }

    /// Product of two polynomials.
    pub fn mul(f: &ExtField, a: &MPoly, b: &MPoly) -> MPoly {
        assert_eq!(a.nvars, b.nvars, "variable count mismatch");
        let mut out = MPoly::zero(a.nvars);
        for (e, c) in &b.terms {
            let part = MPoly::mul_term(f, a, e, c);
            out = MPoly::add(f, &out, &part);
        }
        out
    }

    /// Evaluate at a point whose coordinates live in an extension of the
    /// coefficient field, embedding each coefficient with `lift`.
    pub fn eval_lifted(
        &self,
        big: &ExtField,
        point: &[FieldElem],
        lift: impl Fn(&FieldElem) -> FieldElem,
    ) -> Result<FieldElem> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                at: "polymod::eval",
                why: format!("point has {} coordinates, polynomial has {} variables",
                    point.len(), self.nvars),
            });
        }
        let mut acc = big.zero();
        for (e, c) in &self.terms {
            let mut term = lift(c);
            for (l, &exp) in e.iter().enumerate() {
                if exp > 0 {
                    term = big.mul(&term, &big.pow_u64(&point[l], u64::from(exp)));
                }
            }
            acc = big.add(&acc, &term);
        }
        Ok(acc)
    }

    /// Evaluate at a point of the coefficient field itself.
    pub fn eval(&self, f: &ExtField, point: &[FieldElem]) -> Result<FieldElem> {
        self.eval_lifted(f, point, FieldElem::clone)
    }

    /// Render with `x1..xn` variable names (plain `x` when there is one).
    pub fn render(&self, f: &ExtField) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            let coeff = f.elem_to_string(c);
            let is_const = e.iter().all(|&k| k == 0);
            if coeff != "1" || is_const {
                if coeff.contains(['+', '-']) && !is_const {
                    factors.push(format!("({coeff})"));
                } else {
                    factors.push(coeff);
                }
            }
            for (l, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let name = if self.nvars == 1 { "x".into() } else { format!("x{}", l + 1) };
                if k == 1 {
                    factors.push(name);
                } else {
                    factors.push(format!("{name}^{k}"));
                }
            }
            parts.push(factors.join("*"));
        }
        parts.join(" + ")
    }
}
