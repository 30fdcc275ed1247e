//! Exact field arithmetic for the coefficient fields of everything else in
//! the crate: the rationals, prime fields, and towers of simple algebraic
//! extensions over either.
//!
//! A tower is written down as a base field plus an ordered list of extension
//! steps, each a named variable and a monic irreducible polynomial over the
//! field below. Elements are stored in nested polynomial form, one coefficient
//! vector per tower step, always reduced, so structural equality is field
//! equality. All arithmetic is exact; nothing here ever rounds.

mod factor;
mod linalg;
pub mod unipoly;

pub use factor::{factor_degree_counts, factor_monic, irreducible_of_degree, roots_in_field};
pub use linalg::{intersect_rowspaces, ExactMatrix};
pub use unipoly::UniPoly;

use crate::error::{Error, Result};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

/// Largest prime modulus accepted; keeps `u64` products inside `u128`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

/// The base of a tower: the rationals or a prime field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseField {
    /// The field of rational numbers.
    Rationals,
    /// The prime field with `p` elements.
    Prime(u64),
}

/// One extension step: a variable name and a monic irreducible polynomial
/// (little-endian coefficients) over the field below it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerStep {
    pub var: String,
    pub minpoly: Vec<FieldElem>,
}

impl TowerStep {
    /// Degree of this step over the field below.
    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }
}

/// An element of some [`ExtField`]. Elements do not carry their field; every
/// operation takes the owning field as context, which keeps elements plain
/// data and lets structural equality coincide with field equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldElem {
    /// An element of the rational base.
    Rat(BigRational),
    /// An element of a prime-field base, reduced to `0..p`.
    Mod(u64),
    /// An element of an extension step: coefficients over the field below,
    /// exactly `degree` of them.
    Ext(Vec<FieldElem>),
}

impl FieldElem {
    /// Structural zero test; valid because elements are always reduced.
    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rat(r) => r.is_zero(),
            FieldElem::Mod(m) => *m == 0,
            FieldElem::Ext(v) => v.iter().all(FieldElem::is_zero),
        }
    }
}

/// A field description: base plus tower. Towers of height at most two cover
/// everything the rest of the crate needs (a center over the base, then one
/// extension of the center for points); taller requests are refused rather
/// than silently flattened.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtField {
    base: BaseField,
    tower: Vec<TowerStep>,
}

/// Maximum number of extension steps above the base.
pub const MAX_TOWER_HEIGHT: usize = 2;

impl ExtField {
    /// The field of rational numbers.
    pub fn rationals() -> Self {
        ExtField { base: BaseField::Rationals, tower: Vec::new() }
    }

    /// The prime field with `p` elements. `p` must be prime and small enough
    /// for overflow-free products.
    pub fn prime(p: u64) -> Result<Self> {
        if p > MAX_PRIME {
            return Err(Error::NotSupported {
                at: "field::prime",
                why: format!("modulus {p} exceeds the cap {MAX_PRIME}"),
            });
        }
        if !is_prime_u64(p) {
            return Err(Error::NotSupported {
                at: "field::prime",
                why: format!("{p} is not prime"),
            });
        }
        Ok(ExtField { base: BaseField::Prime(p), tower: Vec::new() })
    }

    /// Extend this field by a monic irreducible polynomial in a fresh
    /// variable. Irreducibility is checked; towers beyond height
    /// [`MAX_TOWER_HEIGHT`] are refused.
    pub fn make_extension(&self, var: &str, minpoly: &[FieldElem]) -> Result<ExtField> {
        const AT: &str = "field::make_extension";
        if self.tower.len() >= MAX_TOWER_HEIGHT {
            return Err(Error::NotSupported {
                at: AT,
                why: format!("tower height {} is already at the cap", self.tower.len()),
            });
        }
        let mp: Vec<FieldElem> = minpoly.to_vec();
        for c in &mp {
            self.check_shape(c, AT)?;
        }
        let mp = unipoly::trim(mp);
        if mp.len() < 3 {
            return Err(Error::NotSupported {
                at: AT,
                why: format!("extension degree must be at least 2, got {}", mp.len().saturating_sub(1)),
            });
        }
        if mp.last() != Some(&self.one()) {
            return Err(Error::NotMonic { at: AT });
        }
        if self.tower.iter().any(|s| s.var == var) {
            return Err(Error::NotSupported {
                at: AT,
                why: format!("variable name {var:?} already used in the tower"),
            });
        }
        factor::check_irreducible(self, &mp, AT)?;
        let mut tower = self.tower.clone();
        tower.push(TowerStep { var: var.to_string(), minpoly: mp });
        Ok(ExtField { base: self.base.clone(), tower })
    }

    /// The base of the tower.
    pub fn base(&self) -> &BaseField {
        &self.base
    }

    /// The extension steps above the base, bottom first.
    pub fn tower(&self) -> &[TowerStep] {
        &self.tower
    }

    /// The field one step below, if any.
    pub fn below(&self) -> Option<ExtField> {
        if self.tower.is_empty() {
            None
        } else {
            Some(ExtField {
                base: self.base.clone(),
                tower: self.tower[..self.tower.len() - 1].to_vec(),
            })
        }
    }

    /// Characteristic of the field: 0 for the rationals, `p` otherwise.
    pub fn characteristic(&self) -> u64 {
        match self.base {
            BaseField::Rationals => 0,
            BaseField::Prime(p) => p,
        }
    }

    /// Degree over the base field: the product of the tower step degrees.
    pub fn absolute_degree(&self) -> usize {
        self.tower.iter().map(TowerStep::degree).product()
    }

    /// Number of elements, `None` over the rationals.
    pub fn size(&self) -> Option<BigUint> {
        match self.base {
            BaseField::Rationals => None,
            BaseField::Prime(p) => Some(BigUint::from(p).pow(self.absolute_degree() as u32)),
        }
    }

    /// Additive identity.
    pub fn zero(&self) -> FieldElem {
        self.shaped_const(Shape::Zero)
    }

    /// Multiplicative identity.
    pub fn one(&self) -> FieldElem {
        self.shaped_const(Shape::One)
    }

    /// The image of an integer.
    pub fn from_int(&self, n: i64) -> FieldElem {
        let base = match self.base {
            BaseField::Rationals => FieldElem::Rat(BigRational::from_integer(n.into())),
            BaseField::Prime(p) => FieldElem::Mod(n.rem_euclid(p as i64) as u64),
        };
        self.lift_scalar(base)
    }

    /// The image of an exact rational, meaningful over any base.
    pub fn from_rational(&self, num: i64, den: i64) -> Result<FieldElem> {
        const AT: &str = "field::from_rational";
        if den == 0 {
            return Err(Error::NotSupported { at: AT, why: "zero denominator".into() });
        }
        let n = self.from_int(num);
        let d = self.from_int(den);
        self.div(&n, &d)
    }

    /// The generator of the top tower step, or 1 for a bare base field.
    pub fn generator(&self) -> FieldElem {
        match self.tower.last() {
            None => self.one(),
            Some(step) => {
                let below = self.below().expect("tower nonempty");
                let mut v = vec![below.zero(); step.degree()];
                v[1] = below.one();
                FieldElem::Ext(v)
            }
        }
    }

    /// Wrap an element of the field one step below as an element here.
    pub fn embed(&self, below_elem: &FieldElem) -> FieldElem {
        match self.tower.last() {
            None => below_elem.clone(),
            Some(step) => {
                let below = self.below().expect("tower nonempty");
                let mut v = vec![below.zero(); step.degree()];
                v[0] = below_elem.clone();
                FieldElem::Ext(v)
            }
        }
    }

    /// Top-level coefficients of `a` over the field below; a bare base field
    /// yields the singleton `[a]`.
    pub fn top_coords(&self, a: &FieldElem) -> Vec<FieldElem> {
        match (self.tower.last(), a) {
            (None, _) => vec![a.clone()],
            (Some(_), FieldElem::Ext(v)) => v.clone(),
            _ => panic!("element shape does not match field"),
        }
    }

    /// Coordinates of `a` over a field lower in this field's tower; the
    /// tower of `sub` must be an initial segment of this field's tower.
    pub fn coords_over(&self, sub: &ExtField, a: &FieldElem) -> Result<Vec<FieldElem>> {
        const AT: &str = "field::coords_over";
        if self == sub {
            return Ok(vec![a.clone()]);
        }
        let below = self.below().ok_or_else(|| Error::MixedParents {
            at: AT,
            why: "the requested field is not below this one".into(),
        })?;
        let mut out = Vec::new();
        for c in self.top_coords(a) {
            out.extend(below.coords_over(sub, &c)?);
        }
        Ok(out)
    }

    /// Embed an element of a field lower in this field's tower.
    pub fn embed_from(&self, sub: &ExtField, a: &FieldElem) -> Result<FieldElem> {
        const AT: &str = "field::embed_from";
        if self == sub {
            return Ok(a.clone());
        }
        let below = self.below().ok_or_else(|| Error::MixedParents {
            at: AT,
            why: "the requested field is not below this one".into(),
        })?;
        let lifted = below.embed_from(sub, a)?;
        Ok(self.embed(&lifted))
    }

    /// Build an element from top-level coefficients over the field below.
    pub fn from_top_coords(&self, coords: &[FieldElem]) -> Result<FieldElem> {
        const AT: &str = "field::from_top_coords";
        match self.tower.last() {
            None => {
                if coords.len() != 1 {
                    return Err(Error::DimensionMismatch {
                        at: AT,
                        why: format!("base field expects 1 coordinate, got {}", coords.len()),
                    });
                }
                self.check_shape(&coords[0], AT)?;
                Ok(coords[0].clone())
            }
            Some(step) => {
                if coords.len() != step.degree() {
                    return Err(Error::DimensionMismatch {
                        at: AT,
                        why: format!("expected {} coordinates, got {}", step.degree(), coords.len()),
                    });
                }
                let below = self.below().expect("tower nonempty");
                for c in coords {
                    below.check_shape(c, AT)?;
                }
                Ok(FieldElem::Ext(coords.to_vec()))
            }
        }
    }

    /// Flatten an element to its coordinate vector over the base, in the
    /// monomial basis of the tower (inner generator fastest).
    pub fn flatten(&self, a: &FieldElem) -> Vec<FieldElem> {
        match (self.tower.last(), a) {
            (None, _) => vec![a.clone()],
            (Some(_), FieldElem::Ext(v)) => {
                let below = self.below().expect("tower nonempty");
                v.iter().flat_map(|c| below.flatten(c)).collect()
            }
            _ => panic!("element shape does not match field"),
        }
    }

    /// Rebuild an element from its flat coordinate vector over the base.
    pub fn unflatten(&self, coords: &[FieldElem]) -> Result<FieldElem> {
        const AT: &str = "field::unflatten";
        if coords.len() != self.absolute_degree() {
            return Err(Error::DimensionMismatch {
                at: AT,
                why: format!("expected {} coordinates, got {}", self.absolute_degree(), coords.len()),
            });
        }
        match self.tower.last() {
            None => Ok(coords[0].clone()),
            Some(step) => {
                let below = self.below().expect("tower nonempty");
                let chunk = below.absolute_degree();
                let mut v = Vec::with_capacity(step.degree());
                for i in 0..step.degree() {
                    v.push(below.unflatten(&coords[i * chunk..(i + 1) * chunk])?);
                }
                Ok(FieldElem::Ext(v))
            }
        }
    }

    /// Validate that `a` has the shape of an element of this field.
    pub fn check_shape(&self, a: &FieldElem, at: &'static str) -> Result<()> {
        let ok = match (self.tower.last(), a) {
            (None, FieldElem::Rat(_)) => matches!(self.base, BaseField::Rationals),
            (None, FieldElem::Mod(m)) => match self.base {
                BaseField::Prime(p) => *m < p,
                _ => false,
            },
            (Some(step), FieldElem::Ext(v)) => {
                v.len() == step.degree() && {
                    let below = self.below().expect("tower nonempty");
                    v.iter().all(|c| below.check_shape(c, at).is_ok())
                }
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::MixedParents { at, why: "element shape does not match field".into() })
        }
    }

    /// Sum.
    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        match (a, b) {
            (FieldElem::Rat(x), FieldElem::Rat(y)) => FieldElem::Rat(x + y),
            (FieldElem::Mod(x), FieldElem::Mod(y)) => {
                let p = self.char_of_base();
                FieldElem::Mod(add_mod(*x, *y, p))
            }
            (FieldElem::Ext(x), FieldElem::Ext(y)) => {
                let below = self.below().expect("ext elem over bare base");
                FieldElem::Ext(x.iter().zip(y).map(|(u, v)| below.add(u, v)).collect())
            }
            _ => panic!("mismatched element shapes in add"),
        }
    }

    /// Difference.
    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        self.add(a, &self.neg(b))
    }

    /// Negation.
    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        match a {
            FieldElem::Rat(x) => FieldElem::Rat(-x),
            FieldElem::Mod(x) => {
                let p = self.char_of_base();
                FieldElem::Mod(if *x == 0 { 0 } else { p - *x })
            }
            FieldElem::Ext(v) => {
                let below = self.below().expect("ext elem over bare base");
                FieldElem::Ext(v.iter().map(|c| below.neg(c)).collect())
            }
        }
    }

    /// Product.
    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        match (a, b) {
            (FieldElem::Rat(x), FieldElem::Rat(y)) => FieldElem::Rat(x * y),
            (FieldElem::Mod(x), FieldElem::Mod(y)) => {
                let p = self.char_of_base();
                FieldElem::Mod(mul_mod(*x, *y, p))
            }
            (FieldElem::Ext(x), FieldElem::Ext(y)) => {
                let below = self.below().expect("ext elem over bare base");
                let step = self.tower.last().expect("ext elem over bare base");
                let d = step.degree();
                // Schoolbook product, then reduction by the monic minimal
                // polynomial from the top coefficient down.
                let mut prod = vec![below.zero(); 2 * d - 1];
                for (i, xi) in x.iter().enumerate() {
                    if xi.is_zero() {
                        continue;
                    }
                    for (j, yj) in y.iter().enumerate() {
                        if yj.is_zero() {
                            continue;
                        }
                        let t = below.mul(xi, yj);
                        prod[i + j] = below.add(&prod[i + j], &t);
                    }
                }
                for i in (d..2 * d - 1).rev() {
                    if prod[i].is_zero() {
                        continue;
                    }
                    let c = prod[i].clone();
                    prod[i] = below.zero();
                    for (j, mj) in step.minpoly[..d].iter().enumerate() {
                        let t = below.mul(&c, mj);
                        prod[i - d + j] = below.sub(&prod[i - d + j], &t);
                    }
                }
                prod.truncate(d);
                FieldElem::Ext(prod)
            }
            _ => panic!("mismatched element shapes in mul"),
        }
    }

    /// Multiplicative inverse; dividing by zero is an error.
    pub fn inv(&self, a: &FieldElem) -> Result<FieldElem> {
        const AT: &str = "field::inv";
        if a.is_zero() {
            return Err(Error::NotSupported { at: AT, why: "division by zero".into() });
        }
        match a {
            FieldElem::Rat(x) => Ok(FieldElem::Rat(x.recip())),
            FieldElem::Mod(x) => {
                let p = self.char_of_base();
                Ok(FieldElem::Mod(inv_mod(*x, p)))
            }
            FieldElem::Ext(v) => {
                let below = self.below().expect("ext elem over bare base");
                let step = self.tower.last().expect("ext elem over bare base");
                let poly = unipoly::trim(v.clone());
                let (g, _, t) = unipoly::ext_gcd(&below, &step.minpoly, &poly)?;
                // The minimal polynomial is irreducible, so the gcd with any
                // nonzero representative is a unit.
                let g0 = g.first().cloned().unwrap_or_else(|| below.zero());
                if g.len() != 1 || g0.is_zero() {
                    return Err(Error::InternalInconsistency {
                        at: AT,
                        why: "gcd with an irreducible modulus was not a unit".into(),
                    });
                }
                let ginv = below.inv(&g0)?;
                let mut out = unipoly::scale(&below, &t, &ginv);
                out = unipoly::rem(&below, &out, &step.minpoly)?;
                out.resize(step.degree(), below.zero());
                Ok(FieldElem::Ext(out))
            }
        }
    }

    /// Quotient.
    pub fn div(&self, a: &FieldElem, b: &FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// `a` raised to a nonnegative integer power.
    pub fn pow(&self, a: &FieldElem, e: &BigUint) -> FieldElem {
        let mut result = self.one();
        if e.is_zero() {
            return result;
        }
        let bits = e.bits();
        for i in (0..bits).rev() {
            result = self.mul(&result, &result);
            if e.bit(i) {
                result = self.mul(&result, a);
            }
        }
        result
    }

    /// Convenience power with a machine exponent.
    pub fn pow_u64(&self, a: &FieldElem, e: u64) -> FieldElem {
        self.pow(a, &BigUint::from(e))
    }

    /// All elements of a finite field, in a fixed deterministic order
    /// (coordinates over the base counted with the lowest coordinate
    /// fastest). Errors over the rationals or past `cap`.
    pub fn elements(&self, cap: u64) -> Result<Vec<FieldElem>> {
        const AT: &str = "field::elements";
        let size = self.size().ok_or(Error::InfiniteBaseField { at: AT })?;
        if size > BigUint::from(cap) {
            return Err(Error::TooLargeForExhaustion { at: AT, count: size.to_string(), cap });
        }
        let p = self.char_of_base();
        let deg = self.absolute_degree();
        let mut out = Vec::new();
        let mut odometer = vec![0u64; deg];
        loop {
            let coords: Vec<FieldElem> = odometer.iter().map(|&v| FieldElem::Mod(v)).collect();
            out.push(self.unflatten(&coords).expect("shape by construction"));
            let mut i = 0;
            loop {
                if i == deg {
                    return Ok(out);
                }
                odometer[i] += 1;
                if odometer[i] < p {
                    break;
                }
                odometer[i] = 0;
                i += 1;
            }
        }
    }

    /// A uniformly random element over a finite base; over the rationals, a
    /// small integer, which is all the callers need.
    pub fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> FieldElem {
        match self.base {
            BaseField::Rationals => self.from_int(rng.gen_range(-9i64..=9)),
            BaseField::Prime(p) => {
                let deg = self.absolute_degree();
                let coords: Vec<FieldElem> =
                    (0..deg).map(|_| FieldElem::Mod(rng.gen_range(0..p))).collect();
                self.unflatten(&coords).expect("shape by construction")
            }
        }
    }

    /// True if `a` lies in the subfield of degree `sub_degree` over the field
    /// below the top step. Only meaningful for finite fields with a tower.
    pub fn in_subfield_of_top_degree(&self, a: &FieldElem, sub_degree: usize) -> Result<bool> {
        const AT: &str = "field::in_subfield_of_top_degree";
        let step = self.tower.last().ok_or(Error::NotSupported {
            at: AT,
            why: "field has no extension step".into(),
        })?;
        if step.degree() % sub_degree != 0 {
            return Ok(false);
        }
        let below = self.below().expect("tower nonempty");
        let q_below = below.size().ok_or(Error::InfiniteBaseField { at: AT })?;
        let q_sub = q_below.pow(sub_degree as u32);
        Ok(self.pow(a, &q_sub) == *a)
    }

    /// Render an element using the tower variable names, e.g. `2*u + 1`.
    pub fn elem_to_string(&self, a: &FieldElem) -> String {
        match (self.tower.last(), a) {
            (None, FieldElem::Rat(r)) => format_rational(r),
            (None, FieldElem::Mod(m)) => m.to_string(),
            (Some(step), FieldElem::Ext(v)) => {
                let below = self.below().expect("tower nonempty");
                let mut parts: Vec<String> = Vec::new();
                for (i, c) in v.iter().enumerate().rev() {
                    if c.is_zero() {
                        continue;
                    }
                    let cs = below.elem_to_string(c);
                    let needs_parens = cs.contains('+') || cs.contains('-') || cs.contains(' ');
                    let coeff = if needs_parens { format!("({cs})") } else { cs };
                    let term = match i {
                        0 => coeff,
                        1 if coeff == "1" => step.var.clone(),
                        1 => format!("{coeff}*{}", step.var),
                        _ if coeff == "1" => format!("{}^{i}", step.var),
                        _ => format!("{coeff}*{}^{i}", step.var),
                    };
                    parts.push(term);
                }
                if parts.is_empty() {
                    "0".to_string()
                } else {
                    parts.join(" + ")
                }
            }
            _ => panic!("element shape does not match field"),
        }
    }

    fn char_of_base(&self) -> u64 {
        match self.base {
            BaseField::Prime(p) => p,
            BaseField::Rationals => panic!("prime-field operation over the rationals"),
        }
    }

    fn lift_scalar(&self, scalar: FieldElem) -> FieldElem {
        let mut e = scalar;
        let mut partial = ExtField { base: self.base.clone(), tower: Vec::new() };
        for step in &self.tower {
            partial.tower.push(step.clone());
            e = partial.embed_raw(e, step.degree());
        }
        e
    }

    fn embed_raw(&self, below_elem: FieldElem, degree: usize) -> FieldElem {
        let below = self.below().expect("tower nonempty");
        let mut v = vec![below.zero(); degree];
        v[0] = below_elem;
        FieldElem::Ext(v)
    }

    fn shaped_const(&self, which: Shape) -> FieldElem {
        let base = match (&self.base, which) {
            (BaseField::Rationals, Shape::Zero) => FieldElem::Rat(BigRational::zero()),
            (BaseField::Rationals, Shape::One) => FieldElem::Rat(BigRational::one()),
            (BaseField::Prime(_), Shape::Zero) => FieldElem::Mod(0),
            (BaseField::Prime(p), Shape::One) => FieldElem::Mod(if *p == 1 { 0 } else { 1 }),
        };
        self.lift_scalar(base)
    }
}

#[derive(Clone, Copy)]
enum Shape {
    Zero,
    One,
}

/// Canonical rendering of a rational: `n` for integers, `n/d` otherwise.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse a rational from `n` or `n/d` form.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: num_bigint::BigInt = n.trim().parse().ok()?;
        let d: num_bigint::BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n: num_bigint::BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(n))
    }
}

fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Extended Euclid; `a` is nonzero mod the prime `p`.
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "inverse of a unit mod a prime");
    t0.rem_euclid(p as i128) as u64
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

