//! Directional ideals: the annihilator conditions a single evaluation point
//! and direction vector impose on `A[x1..xn]`. Evaluation composes the split
//! of a simple factor with substitution of the point, so a polynomial lands
//! in a matrix over the point's field; the directional ideal collects every
//! polynomial whose matrix kills the direction vector.
//!
//! Points may live in an extension of the scalar field. The ideal is built
//! from the exact kernel of the evaluation map on a degree-truncated basis,
//! completed by the point's scalar vanishing ideal times the unit.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::field::{ExactMatrix, ExtField, FieldElem};
use crate::findim::{CenterMatrix, FinDimAlgebra, SimpleFactor, WedderburnData};
use crate::polymod::{cmp_monomials, monomial_divides, MPoly, MultiIndex, TermRule};

use super::{generate, AlgPoly, LeftIdeal};

/// An evaluation point together with the direction it constrains: a simple
/// factor, a point over an extension field, and a nonzero column vector.
#[derive(Debug, Clone)]
pub struct DirectionalPoint {
    /// Index of the simple factor in the Wedderburn decomposition.
    pub factor: usize,
    /// Field of the point's coordinates, an extension of the factor center.
    pub field: ExtField,
    /// Coordinates of the point, one per variable.
    pub xi: Vec<FieldElem>,
    /// Direction vector of length `k`, nonzero.
    pub v: Vec<FieldElem>,
}

/// Multi-index ordered by the degree-compatible comparison, smallest first.
#[derive(Debug, Clone, PartialEq, Eq)]
struct DrlMono(MultiIndex);

impl Ord for DrlMono {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_monomials(TermRule::DegRevLex, &self.0, &other.0)
    }
}

impl PartialOrd for DrlMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `xi^exp` in the point's field.
fn point_power(big: &ExtField, xi: &[FieldElem], exp: &[u32]) -> FieldElem {
    let mut out = big.one();
    for (l, &e) in exp.iter().enumerate() {
        if e > 0 {
            out = big.mul(&out, &big.pow_u64(&xi[l], u64::from(e)));
        }
    }
    out
}

/// The scalar polynomials over the base field vanishing at a point with
/// coordinates in an extension: a reduced basis plus the standard monomials
/// spanning the quotient.
pub fn vanishing_ideal(
    f: &ExtField,
    big: &ExtField,
    xi: &[FieldElem],
) -> Result<(Vec<MPoly>, Vec<MultiIndex>)> {
    const AT: &str = "leftideal::vanishing_ideal";
    let nvars = xi.len();
    if nvars == 0 {
        return Err(Error::NotSupported {
            at: AT,
            why: "at least one polynomial variable is required".into(),
        });
    }
    let mut std_monos: Vec<MultiIndex> = Vec::new();
    let mut std_vals: Vec<Vec<FieldElem>> = Vec::new();
    let mut gens: Vec<MPoly> = Vec::new();
    let mut leads: Vec<MultiIndex> = Vec::new();
    let mut work: BTreeSet<DrlMono> = BTreeSet::new();
    work.insert(DrlMono(vec![0; nvars]));
    while let Some(DrlMono(m)) = work.pop_first() {
        if leads.iter().any(|l| monomial_divides(l, &m)) {
            continue;
        }
        let row = big.coords_over(f, &point_power(big, xi, &m))?;
        let width = row.len();
        let mat = ExactMatrix::from_rows(f, std_vals.clone(), width)?.transpose(f);
        match mat.solve(f, &row)? {
            Some(c) => {
                // x^m minus the matched combination of earlier standard
                // monomials vanishes at the point; its lead is x^m.
                let mut p = MPoly::from_terms(nvars, [(m.clone(), f.one())]);
                for (s, cs) in std_monos.iter().zip(&c) {
                    if !cs.is_zero() {
                        let tail = MPoly::from_terms(nvars, [(s.clone(), cs.clone())]);
                        p = MPoly::sub(f, &p, &tail);
                    }
                }
                gens.push(p);
                leads.push(m);
            }
            None => {
                for l in 0..nvars {
                    let mut next = m.clone();
                    next[l] += 1;
                    work.insert(DrlMono(next));
                }
                std_monos.push(m);
                std_vals.push(row);
            }
        }
    }
    Ok((gens, std_monos))
}

/// Embed a factor-center entry into the point's field, or report that the
/// point's field cannot receive the factor.
fn embed_center(
    big: &ExtField,
    factor: &SimpleFactor,
    c: &FieldElem,
    at: &'static str,
) -> Result<FieldElem> {
    big.embed_from(&factor.center, c).map_err(|_| Error::NotSplit {
        at,
        why: "the evaluation field does not contain the factor center".into(),
    })
}

/// Evaluate a polynomial at a point of a simple factor: apply the factor
/// split to each coefficient, substitute the point for the variables, and
/// sum the matrices over the point's field.
pub fn evaluate(
    alg: &FinDimAlgebra,
    w: &WedderburnData,
    a: &AlgPoly,
    factor_index: usize,
    big: &ExtField,
    xi: &[FieldElem],
) -> Result<CenterMatrix> {
    const AT: &str = "leftideal::evaluate";
    let count = w.factors.len();
    if factor_index >= count {
        return Err(Error::FactorIndexOutOfRange { at: AT, index: factor_index, count });
    }
    if a.dim() != alg.dim() {
        return Err(Error::MixedParents {
            at: AT,
            why: "the polynomial does not live over the decomposed algebra".into(),
        });
    }
    if xi.len() != a.nvars() {
        return Err(Error::DimensionMismatch {
            at: AT,
            why: format!("point has {} coordinates, polynomial has {} variables",
                xi.len(),
                a.nvars()),
        });
    }
    let factor = &w.factors[factor_index];
    let k = factor.k;
    let mut out = vec![vec![big.zero(); k]; k];
    for (exp, coeff) in a.terms() {
        let theta = factor.theta_hat(coeff);
        let power = point_power(big, xi, exp);
        for r in 0..k {
            for c in 0..k {
                let entry = embed_center(big, factor, &theta[r][c], AT)?;
                out[r][c] = big.add(&out[r][c], &big.mul(&power, &entry));
            }
        }
    }
    Ok(out)
}

/// The left ideal of all polynomials whose evaluation at the point kills the
/// direction vector.
///
/// The kernel of the evaluation map is computed exactly on the basis
/// `b_i * x^nu` with `nu` ranging over the standard monomials of the point's
/// scalar vanishing ideal; the vanishing ideal itself, placed on the unit,
/// supplies the remaining generators.
pub fn directional_ideal(
    alg: &FinDimAlgebra,
    w: &WedderburnData,
    p: &DirectionalPoint,
    nvars: usize,
) -> Result<LeftIdeal> {
    const AT: &str = "leftideal::directional_ideal";
    let count = w.factors.len();
    if p.factor >= count {
        return Err(Error::FactorIndexOutOfRange { at: AT, index: p.factor, count });
    }
    let factor = &w.factors[p.factor];
    let k = factor.k;
    if p.v.len() != k {
        return Err(Error::DimensionMismatch {
            at: AT,
            why: format!("direction vector has length {}, factor has size {}", p.v.len(), k),
        });
    }
    if p.v.iter().all(FieldElem::is_zero) {
        return Err(Error::ZeroVector { at: AT });
    }
    if p.xi.len() != nvars {
        return Err(Error::DimensionMismatch {
            at: AT,
            why: format!("point has {} coordinates, expected {}", p.xi.len(), nvars),
        });
    }
    let f = alg.field();
    let big = &p.field;
    let d = alg.dim();
    // Image of each basis element's split applied to the direction vector.
    let mut u: Vec<Vec<FieldElem>> = Vec::with_capacity(d);
    for i in 0..d {
        let theta = factor.theta_hat_basis(i);
        let mut ui = vec![big.zero(); k];
        for r in 0..k {
            for c in 0..k {
                let entry = embed_center(big, factor, &theta[r][c], AT)?;
                ui[r] = big.add(&ui[r], &big.mul(&entry, &p.v[c]));
            }
        }
        u.push(ui);
    }
    let (scalar_gens, standard) = vanishing_ideal(f, big, &p.xi)?;
    // Row (nu, i) is the flattened evaluation of b_i * x^nu against the
    // direction vector; its left kernel is the truncated part of the ideal.
    let width = big.coords_over(f, &big.zero())?.len() * k;
    let mut rows: Vec<Vec<FieldElem>> = Vec::with_capacity(d * standard.len());
    for nu in &standard {
        let power = point_power(big, &p.xi, nu);
        for ui in &u {
            let mut row = Vec::with_capacity(width);
            for r in 0..k {
                row.extend(big.coords_over(f, &big.mul(&power, &ui[r]))?);
            }
            rows.push(row);
        }
    }
    let mat = ExactMatrix::from_rows(f, rows, width)?.transpose(f);
    let mut gens: Vec<AlgPoly> = Vec::new();
    for c in mat.kernel_basis(f) {
        let terms = standard.iter().enumerate().map(|(ni, nu)| {
            let coeff: Vec<FieldElem> = (0..d).map(|i| c[ni * d + i].clone()).collect();
            (nu.clone(), coeff)
        });
        gens.push(AlgPoly::from_terms(d, nvars, terms));
    }
    for m in &scalar_gens {
        gens.push(AlgPoly::from_scalar(alg, m));
    }
    generate(alg, nvars, &gens)
}
