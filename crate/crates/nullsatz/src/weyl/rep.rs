//! A faithful action on rational polynomials: `x` multiplies by `t` and
//! `y` differentiates, so `yx − xy` acts as the identity and the algebra
//! relation is realized by honest operators.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::WeylElem;

/// A univariate rational polynomial as dense coefficients, constant first,
/// with no trailing zeros.
pub type RatPoly = Vec<BigRational>;

fn trim(mut p: RatPoly) -> RatPoly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn derivative(p: &[BigRational]) -> RatPoly {
    let mut out = Vec::new();
    for (e, c) in p.iter().enumerate().skip(1) {
        out.push(c * BigRational::from_integer(BigInt::from(e)));
    }
    trim(out)
}

/// Apply a Weyl element to a polynomial in `t`: each normal-form term
/// `c · x^i y^j` sends `p` to `c · t^i · (d/dt)^j p`, so application is a
/// ring action: `apply(a·b, p) = apply(a, apply(b, p))`.
pub fn poly_rep_apply(a: &WeylElem, p: &[BigRational]) -> RatPoly {
    let mut acc: RatPoly = Vec::new();
    for (i, j, c) in a.terms() {
        let mut q = trim(p.to_vec());
        for _ in 0..j {
            q = derivative(&q);
        }
        if q.is_empty() {
            continue;
        }
        let shift = i as usize;
        if acc.len() < q.len() + shift {
            acc.resize(q.len() + shift, BigRational::zero());
        }
        for (e, v) in q.iter().enumerate() {
            acc[e + shift] += v * c;
        }
    }
    trim(acc)
}
