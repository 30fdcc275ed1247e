//! Finite-codimension test for left ideals: whether the quotient is a
//! finite-dimensional vector space, and whether the scalar polynomials that
//! act centrally on it form a field. The second question is decided on the
//! subalgebra generated by the image of the unit under the variable and
//! central-coefficient multiplications, which is exactly the image of the
//! center's polynomial ring in the quotient.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::{ExactMatrix, ExtField, FieldElem};
use crate::findim::{center_basis, radical, wedderburn, FinDimAlgebra};
use crate::leftideal::{AlgPoly, LeftIdeal};
use crate::polymod::{normal_form, standard_pairs, MultiIndex, Submodule};

/// Coordinates of a polynomial over the standard pairs of a finite
/// quotient: reduce, then read off the surviving terms.
pub(super) fn nf_on_pairs(
    f: &ExtField,
    backing: &Submodule,
    pairs: &[(usize, MultiIndex)],
    p: &AlgPoly,
) -> Result<Vec<FieldElem>> {
    let reduced = normal_form(f, &p.to_modvector(), backing)?;
    let index: BTreeMap<(usize, &MultiIndex), usize> =
        pairs.iter().enumerate().map(|(col, (i, m))| ((*i, m), col)).collect();
    let mut out = vec![f.zero(); pairs.len()];
    for (pos, comp) in reduced.components().iter().enumerate() {
        for (exp, c) in comp.terms() {
            let Some(&col) = index.get(&(pos, exp)) else {
                return Err(Error::InternalInconsistency {
                    at: "radical::nf_on_pairs",
                    why: "a reduced polynomial contains a non-standard term".into(),
                });
            };
            out[col] = c.clone();
        }
    }
    Ok(out)
}

/// One multiplication operator on the quotient, presented column by column.
fn operator_matrix(
    f: &ExtField,
    backing: &Submodule,
    pairs: &[(usize, MultiIndex)],
    image_of_pair: impl Fn(usize, &MultiIndex) -> AlgPoly,
) -> Result<ExactMatrix> {
    let t = pairs.len();
    let mut m = ExactMatrix::zeros(f, t, t);
    for (col, (i, exp)) in pairs.iter().enumerate() {
        let coords = nf_on_pairs(f, backing, pairs, &image_of_pair(*i, exp))?;
        for (row, c) in coords.into_iter().enumerate() {
            *m.at_mut(row, col) = c;
        }
    }
    Ok(m)
}

/// Whether a left ideal has finite codimension with a maximal scalar trace:
/// the quotient must be finite-dimensional, and the scalar polynomials must
/// act on it through a field. Returns the verdict and the codimension when
/// it is defined.
///
/// This is the commutative-style maximality test; the demonstration module
/// exhibits a directional ideal that passes it without being maximal.
pub fn finite_codim_check(
    alg: &FinDimAlgebra,
    ideal: &LeftIdeal,
) -> Result<(bool, Option<usize>)> {
    const AT: &str = "radical::finite_codim_check";
    if ideal.dim() != alg.dim() {
        return Err(Error::MixedParents {
            at: AT,
            why: "the ideal does not live over the given algebra".into(),
        });
    }
    let Some(pairs) = standard_pairs(ideal.backing())? else {
        return Ok((false, None));
    };
    let codim = pairs.len();
    if codim == 0 {
        return Ok((false, Some(0)));
    }
    let f = alg.field();
    let n = ideal.nvars();
    let d = alg.dim();
    let backing = ideal.backing();

    // Commuting operators: multiplication by each variable and by each
    // basis element of the coefficient center.
    let mut ops: Vec<ExactMatrix> = Vec::new();
    for l in 0..n {
        ops.push(operator_matrix(f, backing, &pairs, |i, exp| {
            let mut shifted = exp.to_vec();
            shifted[l] += 1;
            AlgPoly::from_terms(d, n, [(shifted, alg.basis_elem(i))])
        })?);
    }
    for z in center_basis(alg) {
        ops.push(operator_matrix(f, backing, &pairs, |i, exp| {
            AlgPoly::from_terms(d, n, [(exp.to_vec(), alg.mul(&z, &alg.basis_elem(i)))])
        })?);
    }

    // Close the unit's image under the operators, remembering which word of
    // operators produced each new basis vector.
    let start = nf_on_pairs(f, backing, &pairs, &AlgPoly::one(alg, n))?;
    let mut reps: Vec<(Vec<FieldElem>, Vec<usize>)> = vec![(start, Vec::new())];
    let mut next = 0;
    while next < reps.len() {
        let (vec_here, word_here) = reps[next].clone();
        for (o, op) in ops.iter().enumerate() {
            let image = op.apply(f, &vec_here)?;
            let rows: Vec<Vec<FieldElem>> = reps.iter().map(|(v, _)| v.clone()).collect();
            let span = ExactMatrix::from_rows(f, rows, codim)?;
            if !span.row_space_contains(f, &image)? {
                let mut word = word_here.clone();
                word.push(o);
                reps.push((image, word));
            }
        }
        next += 1;
    }

    let t = reps.len();
    if t == 1 {
        // The scalar image is the base field itself.
        return Ok((true, Some(codim)));
    }
    let basis_rows: Vec<Vec<FieldElem>> = reps.iter().map(|(v, _)| v.clone()).collect();
    let solver = ExactMatrix::from_rows(f, basis_rows, codim)?.transpose(f);
    let coords_of = |v: &[FieldElem]| -> Result<Vec<FieldElem>> {
        solver.solve(f, v)?.ok_or(Error::InternalInconsistency {
            at: AT,
            why: "a product left the scalar closure".into(),
        })
    };

    // The scalar image is a commutative algebra; products apply one basis
    // vector's operator word to the other vector.
    let mut structure: Vec<Vec<Vec<FieldElem>>> = Vec::with_capacity(t);
    for a in 0..t {
        let mut row = Vec::with_capacity(t);
        for b in 0..t {
            let mut prod = reps[b].0.clone();
            for &o in &reps[a].1 {
                prod = ops[o].apply(f, &prod)?;
            }
            row.push(coords_of(&prod)?);
        }
        structure.push(row);
    }
    let unit = coords_of(&reps[0].0)?;
    let walg = FinDimAlgebra::new(f.clone(), structure, unit, None)?;

    let is_field = radical(&walg)?.is_empty() && {
        let wd = wedderburn(&walg)?;
        wd.factors.len() == 1 && wd.factors[0].k == 1
    };
    Ok((is_field, Some(codim)))
}
