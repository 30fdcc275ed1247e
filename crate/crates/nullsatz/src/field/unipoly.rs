//! Univariate polynomial helpers over an [`ExtField`](super::ExtField).
//!
//! Polynomials are little-endian coefficient vectors with no trailing zeros;
//! the zero polynomial is the empty vector. These are internal workhorses for
//! extension arithmetic, irreducibility testing, factoring, and minimal
//! polynomials; the multivariate story lives in `polymod`.

use super::{ExtField, FieldElem};
use crate::error::{Error, Result};
use num_bigint::BigUint;

/// A univariate polynomial: little-endian coefficients, trimmed.
pub type UniPoly = Vec<FieldElem>;

/// Drop trailing zeros.
pub fn trim(mut p: UniPoly) -> UniPoly {
    while p.last().map(FieldElem::is_zero) == Some(true) {
        p.pop();
    }
    p
}

/// Degree, or `None` for the zero polynomial.
pub fn deg(p: &UniPoly) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

/// Constant polynomial.
pub fn constant(c: FieldElem) -> UniPoly {
    trim(vec![c])
}

/// The monomial `x^k`.
pub fn monomial(f: &ExtField, k: usize) -> UniPoly {
    let mut p = vec![f.zero(); k + 1];
    p[k] = f.one();
    p
}

/// Sum.
pub fn add(f: &ExtField, a: &UniPoly, b: &UniPoly) -> UniPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(|| f.zero());
        let y = b.get(i).cloned().unwrap_or_else(|| f.zero());
        out.push(f.add(&x, &y));
    }
    trim(out)
}

/// Difference.
pub fn sub(f: &ExtField, a: &UniPoly, b: &UniPoly) -> UniPoly {
    add(f, a, &neg(f, b))
}

/// Negation.
pub fn neg(f: &ExtField, a: &UniPoly) -> UniPoly {
    a.iter().map(|c| f.neg(c)).collect()
}

/// Scalar multiple.
pub fn scale(f: &ExtField, a: &UniPoly, c: &FieldElem) -> UniPoly {
    trim(a.iter().map(|x| f.mul(x, c)).collect())
}

/// Product.
pub fn mul(f: &ExtField, a: &UniPoly, b: &UniPoly) -> UniPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let t = f.mul(x, y);
            out[i + j] = f.add(&out[i + j], &t);
        }
    }
    trim(out)
}

/// Quotient and remainder; the divisor must be nonzero.
pub fn divrem(f: &ExtField, a: &UniPoly, b: &UniPoly) -> Result<(UniPoly, UniPoly)> {
    const AT: &str = "field::unipoly::divrem";
    let db = deg(b).ok_or(Error::NotSupported { at: AT, why: "division by zero polynomial".into() })?;
    let lc_inv = f.inv(b.last().expect("nonzero divisor"))?;
    let mut rem = a.clone();
    let mut quot: Vec<FieldElem> = Vec::new();
    while let Some(dr) = deg(&rem) {
        if dr < db {
            break;
        }
        let c = f.mul(rem.last().expect("nonzero remainder"), &lc_inv);
        let shift = dr - db;
        if quot.len() < shift + 1 {
            quot.resize(shift + 1, f.zero());
        }
        quot[shift] = f.add(&quot[shift], &c);
        for (j, bj) in b.iter().enumerate() {
            let t = f.mul(&c, bj);
            rem[shift + j] = f.sub(&rem[shift + j], &t);
        }
        rem = trim(rem);
    }
    Ok((trim(quot), rem))
}

/// Remainder only.
pub fn rem(f: &ExtField, a: &UniPoly, b: &UniPoly) -> Result<UniPoly> {
    Ok(divrem(f, a, b)?.1)
}

/// Make monic by dividing by the leading coefficient.
pub fn monic(f: &ExtField, a: &UniPoly) -> Result<UniPoly> {
    match a.last() {
        None => Ok(Vec::new()),
        Some(lc) => {
            let inv = f.inv(lc)?;
            Ok(scale(f, a, &inv))
        }
    }
}

/// Monic greatest common divisor.
pub fn gcd(f: &ExtField, a: &UniPoly, b: &UniPoly) -> Result<UniPoly> {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    while !r1.is_empty() {
        let r = rem(f, &r0, &r1)?;
        r0 = r1;
        r1 = r;
    }
    monic(f, &r0)
}

/// Extended Euclid: returns `(g, s, t)` with `s*a + t*b = g`; `g` is not
/// normalized to monic.
pub fn ext_gcd(f: &ExtField, a: &UniPoly, b: &UniPoly) -> Result<(UniPoly, UniPoly, UniPoly)> {
    let mut r0 = a.clone();
    let mut r1 = b.clone();
    let mut s0 = constant(f.one());
    let mut s1: UniPoly = Vec::new();
    let mut t0: UniPoly = Vec::new();
    let mut t1 = constant(f.one());
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1)?;
        let ns = sub(f, &s0, &mul(f, &q, &s1));
        let nt = sub(f, &t0, &mul(f, &q, &t1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = ns;
        t0 = t1;
        t1 = nt;
    }
    Ok((r0, s0, t0))
}

/// `base^e mod m` by square and multiply.
pub fn powmod(f: &ExtField, base: &UniPoly, e: &BigUint, m: &UniPoly) -> Result<UniPoly> {
    let mut result = constant(f.one());
    let bits = e.bits();
    for i in (0..bits).rev() {
        result = rem(f, &mul(f, &result, &result), m)?;
        if e.bit(i) {
            result = rem(f, &mul(f, &result, base), m)?;
        }
    }
    Ok(result)
}

/// Evaluate at a point of any extension of `f`; coefficients are embedded by
/// the caller-provided lift.
pub fn eval(f: &ExtField, p: &UniPoly, x: &FieldElem) -> FieldElem {
    let mut acc = f.zero();
    for c in p.iter().rev() {
        acc = f.mul(&acc, x);
        acc = f.add(&acc, c);
    }
    acc
}

/// Evaluate a polynomial over a subfield at a point of `big`, embedding each
/// coefficient with `lift`.
pub fn eval_lifted(
    big: &ExtField,
    p: &UniPoly,
    x: &FieldElem,
    lift: impl Fn(&FieldElem) -> FieldElem,
) -> FieldElem {
    let mut acc = big.zero();
    for c in p.iter().rev() {
        acc = big.mul(&acc, x);
        acc = big.add(&acc, &lift(c));
    }
    acc
}

/// Formal derivative.
pub fn derivative(f: &ExtField, p: &UniPoly) -> UniPoly {
    if p.len() <= 1 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(p.len() - 1);
    for (i, c) in p.iter().enumerate().skip(1) {
        let k = f.from_int(i as i64);
        out.push(f.mul(c, &k));
    }
    trim(out)
}

/// Render with a variable name, for diagnostics.
pub fn to_string(f: &ExtField, p: &UniPoly, var: &str) -> String {
    if p.is_empty() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (i, c) in p.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let cs = f.elem_to_string(c);
        let needs_parens = cs.contains('+') || cs.contains('-') || cs.contains(' ');
        let coeff = if needs_parens { format!("({cs})") } else { cs };
        parts.push(match i {
            0 => coeff,
            1 if coeff == "1" => var.to_string(),
            1 => format!("{coeff}*{var}"),
            _ if coeff == "1" => format!("{var}^{i}"),
            _ => format!("{coeff}*{var}^{i}"),
        });
    }
    parts.join(" + ")
}
