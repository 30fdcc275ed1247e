//! Irreducibility testing and univariate factorization at desk scale.
//!
//! Over a finite field the tests are the deterministic Frobenius gcd
//! criteria, and factorization is trial division by all monic polynomials of
//! at most half the degree, enumerated in a fixed order. Over the rationals,
//! reducibility is detected by the rational-root test plus a Kronecker
//! interpolation search for low-degree factors. Both routes are exact and
//! complete inside their caps and refuse loudly outside them; nothing falls
//! back to a heuristic.

use super::unipoly::{self, UniPoly};
use super::{ExtField, FieldElem};
use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Work cap for brute-force candidate enumeration over finite fields.
const FINITE_ENUM_CAP: u64 = 2_000_000;
/// Degree cap for factor search over the rationals.
const RATIONAL_DEGREE_CAP: usize = 8;
/// Cap on the integer magnitudes fed to divisor enumeration.
const DIVISOR_MAGNITUDE_CAP: u64 = 1_000_000_000_000;
/// Cap on the number of interpolation tuples tried per factor degree.
const KRONECKER_TUPLE_CAP: u64 = 5_000_000;

/// Verify that a monic polynomial of degree at least 1 is irreducible.
pub fn check_irreducible(f: &ExtField, p: &UniPoly, at: &'static str) -> Result<()> {
    let d = unipoly::deg(p).unwrap_or(0);
    if d == 0 {
        return Err(Error::NotIrreducible { at, why: "constant polynomial".into() });
    }
    if d == 1 {
        return Ok(());
    }
    match f.size() {
        Some(q) => check_irreducible_finite(f, p, &q, at),
        None => {
            if !f.tower().is_empty() {
                return Err(Error::NotSupported {
                    at,
                    why: "irreducibility over an extension of the rationals is out of scope".into(),
                });
            }
            check_irreducible_rational(p, at)
        }
    }
}

fn check_irreducible_finite(f: &ExtField, p: &UniPoly, q: &BigUint, at: &'static str) -> Result<()> {
    // A reducible polynomial of degree d has an irreducible factor of degree
    // at most d/2, and that factor divides x^(q^i) - x for its degree i.
    let d = unipoly::deg(p).expect("degree checked");
    let x = unipoly::monomial(f, 1);
    for i in 1..=d / 2 {
        let qe = q.pow(i as u32);
        let frob = unipoly::powmod(f, &x, &qe, p)?;
        let diff = unipoly::sub(f, &frob, &x);
        let g = unipoly::gcd(f, p, &diff)?;
        if unipoly::deg(&g).unwrap_or(0) > 0 {
            return Err(Error::NotIrreducible {
                at,
                why: format!("shares a factor of degree dividing {i} with the field polynomial"),
            });
        }
    }
    Ok(())
}

fn check_irreducible_rational(p: &UniPoly, at: &'static str) -> Result<()> {
    let d = unipoly::deg(p).expect("degree checked");
    if d > 6 {
        return Err(Error::NotSupported {
            at,
            why: format!("rational irreducibility testing is capped at degree 6, got {d}"),
        });
    }
    let rat = ExtField::rationals();
    let dp = unipoly::derivative(&rat, p);
    let g = unipoly::gcd(&rat, p, &dp)?;
    if unipoly::deg(&g).unwrap_or(0) > 0 {
        return Err(Error::NotIrreducible { at, why: "polynomial has a repeated factor".into() });
    }
    let g_int = clear_denominators(p);
    if let Some(root) = integer_root(&g_int.poly)? {
        let orig = BigRational::new(root, BigInt::from(g_int.scale.clone()));
        return Err(Error::NotIrreducible { at, why: format!("has rational root {orig}") });
    }
    for fd in 2..=d / 2 {
        if let Some(h) = kronecker_search(&g_int.poly, fd, at)? {
            let back = g_int.factor_back(&h);
            return Err(Error::NotIrreducible {
                at,
                why: format!("has factor {}", unipoly::to_string(&rat, &back, "x")),
            });
        }
    }
    Ok(())
}

/// Factor a nonzero polynomial into monic irreducibles with multiplicities,
/// sorted deterministically. The unit is dropped.
pub fn factor_monic(f: &ExtField, p: &UniPoly) -> Result<Vec<(UniPoly, usize)>> {
    const AT: &str = "field::factor_monic";
    if p.is_empty() {
        return Err(Error::NotSupported { at: AT, why: "cannot factor the zero polynomial".into() });
    }
    let p = unipoly::monic(f, p)?;
    match f.size() {
        Some(q) => factor_finite(f, &p, &q),
        None => {
            if !f.tower().is_empty() {
                return Err(Error::NotSupported {
                    at: AT,
                    why: "factoring over an extension of the rationals is out of scope".into(),
                });
            }
            factor_rational(&p)
        }
    }
}

fn factor_finite(f: &ExtField, p: &UniPoly, q: &BigUint) -> Result<Vec<(UniPoly, usize)>> {
    const AT: &str = "field::factor_monic";
    let mut remaining = p.clone();
    let mut out: Vec<(UniPoly, usize)> = Vec::new();
    let mut d = 1usize;
    while unipoly::deg(&remaining).unwrap_or(0) >= 2 * d {
        let count = q.pow(d as u32);
        if count > BigUint::from(FINITE_ENUM_CAP) {
            return Err(Error::TooLargeForExhaustion {
                at: AT,
                count: count.to_string(),
                cap: FINITE_ENUM_CAP,
            });
        }
        let elems = f.elements(FINITE_ENUM_CAP)?;
        let mut odometer = vec![0usize; d];
        'cands: loop {
            let mut cand: UniPoly = odometer.iter().map(|&i| elems[i].clone()).collect();
            cand.push(f.one());
            let mut mult = 0usize;
            loop {
                let (quot, rem) = unipoly::divrem(f, &remaining, &cand)?;
                if rem.is_empty() {
                    remaining = quot;
                    mult += 1;
                } else {
                    break;
                }
            }
            if mult > 0 {
                out.push((cand, mult));
                if unipoly::deg(&remaining).unwrap_or(0) < 2 * d {
                    break 'cands;
                }
            }
            let mut i = 0;
            loop {
                if i == d {
                    break 'cands;
                }
                odometer[i] += 1;
                if odometer[i] < elems.len() {
                    break;
                }
                odometer[i] = 0;
                i += 1;
            }
        }
        d += 1;
    }
    if unipoly::deg(&remaining).unwrap_or(0) >= 1 {
        out.push((remaining, 1));
    }
    Ok(out)
}

fn factor_rational(p: &UniPoly) -> Result<Vec<(UniPoly, usize)>> {
    const AT: &str = "field::factor_monic";
    let rat = ExtField::rationals();
    let d = unipoly::deg(p).unwrap_or(0);
    if d == 0 {
        return Ok(Vec::new());
    }
    if d > RATIONAL_DEGREE_CAP {
        return Err(Error::NotSupported {
            at: AT,
            why: format!("rational factoring is capped at degree {RATIONAL_DEGREE_CAP}, got {d}"),
        });
    }
    // Find one monic irreducible factor, divide out all its occurrences,
    // recurse on the quotient.
    let factor = find_one_rational_factor(p, AT)?;
    let mut remaining = p.clone();
    let mut mult = 0usize;
    loop {
        let (quot, rem) = unipoly::divrem(&rat, &remaining, &factor)?;
        if rem.is_empty() {
            remaining = quot;
            mult += 1;
        } else {
            break;
        }
    }
    let mut out = vec![(factor, mult)];
    if unipoly::deg(&remaining).unwrap_or(0) >= 1 {
        out.extend(factor_rational(&remaining)?);
    }
    out.sort_by(|a, b| cmp_polys(&a.0, &b.0));
    Ok(out)
}

/// One monic irreducible factor of a monic rational polynomial of degree
/// at least 1; the polynomial itself when it is irreducible.
fn find_one_rational_factor(p: &UniPoly, at: &'static str) -> Result<UniPoly> {
    let d = unipoly::deg(p).expect("nonzero");
    if d == 1 {
        return Ok(p.clone());
    }
    let g_int = clear_denominators(p);
    if let Some(root) = integer_root(&g_int.poly)? {
        let r = BigRational::new(root, BigInt::from(g_int.scale.clone()));
        return Ok(vec![FieldElem::Rat(-r), FieldElem::Rat(BigRational::one())]);
    }
    for fd in 2..=d / 2 {
        if let Some(h) = kronecker_search(&g_int.poly, fd, at)? {
            // A factor of minimal degree is irreducible: any proper factor
            // of it would be a smaller-degree factor already excluded.
            return Ok(g_int.factor_back(&h));
        }
    }
    Ok(p.clone())
}

/// A monic rational polynomial rescaled to a monic integer polynomial via
/// x -> y / scale.
struct IntegerModel {
    poly: Vec<BigInt>,
    scale: BigUint,
}

impl IntegerModel {
    /// Map a monic integer factor h(y) back to a monic rational factor of
    /// the original: h(scale * x) / scale^deg.
    fn factor_back(&self, h: &[BigInt]) -> UniPoly {
        let m = h.len() - 1;
        let s = BigInt::from(self.scale.clone());
        let mut out = Vec::with_capacity(h.len());
        for (i, c) in h.iter().enumerate() {
            // coefficient of x^i: h_i * scale^i / scale^m
            let num = c * s.pow(i as u32);
            let den = s.pow(m as u32);
            out.push(FieldElem::Rat(BigRational::new(num, den)));
        }
        unipoly::trim(out)
    }
}

fn clear_denominators(p: &UniPoly) -> IntegerModel {
    let n = unipoly::deg(p).expect("nonzero");
    let mut scale = BigUint::one();
    for c in p {
        if let FieldElem::Rat(r) = c {
            let den = r.denom().magnitude().clone();
            scale = num_integer::lcm(scale, den);
        }
    }
    let s = BigInt::from(scale.clone());
    let mut poly = Vec::with_capacity(p.len());
    for (i, c) in p.iter().enumerate() {
        let FieldElem::Rat(r) = c else { panic!("rational polynomial expected") };
        // coefficient of y^i in scale^n * p(y/scale) is p_i * scale^(n-i)
        let v = r * BigRational::from_integer(s.pow((n - i) as u32));
        debug_assert!(v.is_integer());
        poly.push(v.to_integer());
    }
    IntegerModel { poly, scale }
}

/// An integer root of a monic integer polynomial, if any.
fn integer_root(g: &[BigInt]) -> Result<Option<BigInt>> {
    if g[0].is_zero() {
        return Ok(Some(BigInt::zero()));
    }
    let divisors = signed_divisors(&g[0])?;
    Ok(divisors.into_iter().find(|cand| eval_int(g, cand).is_zero()))
}

fn eval_int(g: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in g.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn signed_divisors(v: &BigInt) -> Result<Vec<BigInt>> {
    const AT: &str = "field::factor_monic";
    let mag = v.magnitude().clone();
    if mag > BigUint::from(DIVISOR_MAGNITUDE_CAP) {
        return Err(Error::NotSupported {
            at: AT,
            why: format!("value {mag} too large for divisor enumeration"),
        });
    }
    let m: u64 = mag.try_into().expect("under cap");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= m {
        if m % d == 0 {
            small.push(d);
            if d != m / d {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    let mut out = Vec::with_capacity(small.len() * 2);
    for d in small {
        out.push(BigInt::from(d));
        out.push(-BigInt::from(d));
    }
    Ok(out)
}

/// Search for a monic integer factor of exact degree `fd` by Kronecker
/// interpolation: a factor's value at any integer point divides the
/// polynomial's value there, so candidates come from divisor tuples.
fn kronecker_search(g: &[BigInt], fd: usize, at: &'static str) -> Result<Option<Vec<BigInt>>> {
    let rat = ExtField::rationals();
    let mut points: Vec<BigInt> = Vec::new();
    let mut k = 0i64;
    while points.len() < fd + 1 {
        points.push(BigInt::from(k));
        k = if k > 0 { -k } else { -k + 1 };
    }
    let mut divisor_lists: Vec<Vec<BigInt>> = Vec::new();
    let mut combos = BigUint::one();
    for x in &points {
        let v = eval_int(g, x);
        // No integer roots remain at this stage, so every value is nonzero.
        let ds = signed_divisors(&v)?;
        combos *= BigUint::from(ds.len());
        divisor_lists.push(ds);
    }
    if combos > BigUint::from(KRONECKER_TUPLE_CAP) {
        return Err(Error::NotSupported {
            at,
            why: format!("Kronecker search needs {combos} divisor tuples, cap is {KRONECKER_TUPLE_CAP}"),
        });
    }
    let g_rat: UniPoly = g.iter().map(|c| FieldElem::Rat(BigRational::from_integer(c.clone()))).collect();
    let mut odometer = vec![0usize; points.len()];
    loop {
        let values: Vec<BigInt> =
            odometer.iter().enumerate().map(|(i, &j)| divisor_lists[i][j].clone()).collect();
        if let Some(h) = interpolate_monic_integer(&points, &values, fd) {
            let h_rat: UniPoly =
                h.iter().map(|c| FieldElem::Rat(BigRational::from_integer(c.clone()))).collect();
            let (_, r) = unipoly::divrem(&rat, &g_rat, &h_rat)?;
            if r.is_empty() {
                return Ok(Some(h));
            }
        }
        let mut i = 0;
        loop {
            if i == odometer.len() {
                return Ok(None);
            }
            odometer[i] += 1;
            if odometer[i] < divisor_lists[i].len() {
                break;
            }
            odometer[i] = 0;
            i += 1;
        }
    }
}

/// Lagrange interpolation; keep only candidates that come out monic of the
/// requested degree with integer coefficients.
fn interpolate_monic_integer(points: &[BigInt], values: &[BigInt], fd: usize) -> Option<Vec<BigInt>> {
    let n = points.len();
    let mut coeffs = vec![BigRational::zero(); n];
    for i in 0..n {
        // Basis polynomial through point i, scaled by the value there.
        let mut num = vec![BigRational::one()];
        let mut den = BigRational::one();
        for j in 0..n {
            if i == j {
                continue;
            }
            let xj = BigRational::from_integer(points[j].clone());
            // multiply num by (x - xj)
            let mut next = vec![BigRational::zero(); num.len() + 1];
            for (k, c) in num.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * &xj;
            }
            num = next;
            den *= BigRational::from_integer(points[i].clone()) - xj;
        }
        let scale = BigRational::from_integer(values[i].clone()) / den;
        for (k, c) in num.iter().enumerate() {
            coeffs[k] += c * &scale;
        }
    }
    while coeffs.last().map(|c| c.is_zero()) == Some(true) {
        coeffs.pop();
    }
    if coeffs.len() != fd + 1 {
        return None;
    }
    if !coeffs.last().expect("nonempty").is_one() {
        return None;
    }
    let mut out = Vec::with_capacity(coeffs.len());
    for c in coeffs {
        if !c.is_integer() {
            return None;
        }
        out.push(c.to_integer());
    }
    Some(out)
}

/// First monic irreducible polynomial of degree `e` over a finite field, in
/// the fixed enumeration order.
pub fn irreducible_of_degree(f: &ExtField, e: usize) -> Result<UniPoly> {
    const AT: &str = "field::irreducible_of_degree";
    if e == 0 {
        return Err(Error::NotSupported { at: AT, why: "degree must be positive".into() });
    }
    if e == 1 {
        return Ok(unipoly::monomial(f, 1));
    }
    let q = f.size().ok_or(Error::InfiniteBaseField { at: AT })?;
    let count = q.pow(e as u32);
    if count > BigUint::from(FINITE_ENUM_CAP) {
        return Err(Error::TooLargeForExhaustion { at: AT, count: count.to_string(), cap: FINITE_ENUM_CAP });
    }
    let elems = f.elements(FINITE_ENUM_CAP)?;
    let mut odometer = vec![0usize; e];
    loop {
        let mut cand: UniPoly = odometer.iter().map(|&i| elems[i].clone()).collect();
        cand.push(f.one());
        if check_irreducible(f, &cand, AT).is_ok() {
            return Ok(cand);
        }
        let mut i = 0;
        loop {
            if i == e {
                return Err(Error::InternalInconsistency {
                    at: AT,
                    why: format!("no irreducible of degree {e} found over a finite field"),
                });
            }
            odometer[i] += 1;
            if odometer[i] < elems.len() {
                break;
            }
            odometer[i] = 0;
            i += 1;
        }
    }
}

/// Degrees of the distinct irreducible factors, with their counts, computed
/// from Frobenius gcds without producing the factors themselves.
pub fn factor_degree_counts(f: &ExtField, p: &UniPoly) -> Result<BTreeMap<usize, usize>> {
    const AT: &str = "field::factor_degree_counts";
    let q = f.size().ok_or(Error::InfiniteBaseField { at: AT })?;
    let d = unipoly::deg(p)
        .ok_or(Error::NotSupported { at: AT, why: "zero polynomial".into() })?;
    let x = unipoly::monomial(f, 1);
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for e in 1..=d {
        let qe = q.pow(e as u32);
        let frob = unipoly::powmod(f, &x, &qe, p)?;
        let diff = unipoly::sub(f, &frob, &x);
        let g = unipoly::gcd(f, p, &diff)?;
        // gcd with x^(q^e) - x collects each distinct factor of degree
        // dividing e exactly once.
        let total = unipoly::deg(&g).unwrap_or(0);
        let mut accounted = 0usize;
        for (&dd, &c) in &counts {
            if e % dd == 0 {
                accounted += dd * c;
            }
        }
        if total > accounted {
            debug_assert_eq!((total - accounted) % e, 0);
            counts.insert(e, (total - accounted) / e);
        }
    }
    Ok(counts)
}

/// All roots of a polynomial in a finite field, by direct scan, in the
/// field's enumeration order.
pub fn roots_in_field(f: &ExtField, p: &UniPoly, cap: u64) -> Result<Vec<FieldElem>> {
    let mut out = Vec::new();
    for c in f.elements(cap)? {
        if unipoly::eval(f, p, &c).is_zero() {
            out.push(c);
        }
    }
    Ok(out)
}

fn cmp_polys(a: &UniPoly, b: &UniPoly) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| format!("{a:?}").cmp(&format!("{b:?}")))
}
