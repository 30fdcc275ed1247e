//! Normal-form arithmetic in the first Weyl algebra over the rationals.
//!
//! The algebra is generated by `x` and `y` subject to `yx = xy + 1`. Every
//! element has a unique normal form with `x` written before `y`, and the
//! product of two normal forms is computed by the reordering rule
//! `y^j x^k = Σ_m C(j,m)·k·(k-1)···(k-m+1)·x^(k-m) y^(j-m)`. On top of the
//! arithmetic sit a faithful action on rational polynomials and a
//! certificate that replays, as exact identities, the computation showing
//! the left ideal generated by `yx` has no semiprime-quotient radical
//! shrink: its radical would need every scalar, yet `x` stays outside.

mod certificate;
mod rep;

pub use certificate::{
    certificate_check, simplicity_smoke, CertificateReport, IdentityOutcome, SmokeOutcome,
};
pub use rep::{poly_rep_apply, RatPoly};

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

/// An element of the first Weyl algebra in PBW normal form: a finite sum of
/// terms `c · x^i y^j` keyed by the exponent pair, with no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElem {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl WeylElem {
    /// The zero element.
    pub fn zero() -> Self {
        WeylElem { terms: BTreeMap::new() }
    }

    /// The multiplicative unit.
    pub fn one() -> Self {
        Self::monomial(0, 0, BigRational::one())
    }

    /// The generator `x`.
    pub fn x() -> Self {
        Self::monomial(1, 0, BigRational::one())
    }

    /// The generator `y`.
    pub fn y() -> Self {
        Self::monomial(0, 1, BigRational::one())
    }

    /// The single term `c · x^i y^j`.
    pub fn monomial(i: u32, j: u32, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        WeylElem { terms }
    }

    /// Build from `(i, j, coefficient)` triples, summing repeats.
    pub fn from_terms(items: impl IntoIterator<Item = (u32, u32, BigRational)>) -> Self {
        let mut out = Self::zero();
        for (i, j, c) in items {
            out.add_term(i, j, c);
        }
        out
    }

    /// The terms in increasing `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &BigRational)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    /// Whether this is the zero element.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The largest exponent of `x` and of `y` over all terms, zero when empty.
    pub fn bidegree(&self) -> (u32, u32) {
        let mut d = (0, 0);
        for &(i, j) in self.terms.keys() {
            d.0 = d.0.max(i);
            d.1 = d.1.max(j);
        }
        d
    }

    fn add_term(&mut self, i: u32, j: u32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    /// Sum of two elements.
    pub fn add(&self, other: &WeylElem) -> WeylElem {
        let mut out = self.clone();
        for (i, j, c) in other.terms() {
            out.add_term(i, j, c.clone());
        }
        out
    }

    /// Difference of two elements.
    pub fn sub(&self, other: &WeylElem) -> WeylElem {
        self.add(&other.neg())
    }

    /// Additive inverse.
    pub fn neg(&self) -> WeylElem {
        WeylElem { terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect() }
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &BigRational) -> WeylElem {
        if c.is_zero() {
            return Self::zero();
        }
        WeylElem { terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect() }
    }

    /// Formal derivative with respect to `x` on normal forms; this equals
    /// the commutator `y·a − a·y`.
    pub fn x_derivative(&self) -> WeylElem {
        let mut out = Self::zero();
        for (i, j, c) in self.terms() {
            if i > 0 {
                out.add_term(i - 1, j, c * BigRational::from_integer(BigInt::from(i)));
            }
        }
        out
    }

    /// A seeded random element with exponents bounded by `max_i` and `max_j`
    /// and small integer coefficients, possibly zero.
    pub fn random(rng: &mut impl Rng, max_i: u32, max_j: u32) -> WeylElem {
        let mut out = Self::zero();
        for i in 0..=max_i {
            for j in 0..=max_j {
                if rng.gen_bool(0.3) {
                    let c = BigRational::from_integer(BigInt::from(rng.gen_range(-4i64..=4)));
                    out.add_term(i, j, c);
                }
            }
        }
        out
    }

    /// Render as a sum of `c*x^i*y^j` terms, highest term first.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (&(i, j), c) in self.terms.iter().rev() {
            let mut factors = Vec::new();
            let coeff = c.to_string();
            let is_const = i == 0 && j == 0;
            if coeff != "1" || is_const {
                if c.is_negative() && !is_const {
                    factors.push(format!("({coeff})"));
                } else {
                    factors.push(coeff);
                }
            }
            for (name, e) in [("x", i), ("y", j)] {
                if e == 1 {
                    factors.push(name.into());
                } else if e > 1 {
                    factors.push(format!("{name}^{e}"));
                }
            }
            parts.push(factors.join("*"));
        }
        parts.join(" + ")
    }
}

/// Product in the Weyl algebra, returned in PBW normal form.
pub fn weyl_mul(a: &WeylElem, b: &WeylElem) -> WeylElem {
    let mut out = WeylElem::zero();
    for (i, j, c) in a.terms() {
        for (k, l, d) in b.terms() {
            let cd = c * d;
            // x^i y^j · x^k y^l: reorder y^j x^k, then attach the outer
            // powers. Each m counts how many y's land on an x, and the
            // coefficient C(j,m)·k·(k-1)···(k-m+1) updates incrementally.
            let mut coeff = BigInt::one();
            for m in 0..=j.min(k) {
                let scaled = &cd * BigRational::from_integer(coeff.clone());
                out.add_term(i + k - m, j + l - m, scaled);
                if m < j.min(k) {
                    coeff *= BigInt::from(u64::from(j - m) * u64::from(k - m));
                    coeff /= BigInt::from(m + 1);
                }
            }
        }
    }
    out
}
