//! The structural radical computation: adjoin the coefficient radical, split
//! along the simple factors, reduce each factor to a row submodule over its
//! center, intercept the submodule against every point of its variety, and
//! reassemble. All interception happens by exact linear algebra in the
//! finite quotient; no repeated basis completion is involved.

use crate::error::{Error, Result};
use crate::field::{ExactMatrix, ExtField, FieldElem};
use crate::findim::{AlgElem, FinDimAlgebra, WedderburnData};
use crate::leftideal::{
    contains, evaluate, generate, is_semiprime_left_witnessed, AlgPoly, DirectionalPoint,
    LeftIdeal,
};
use crate::polymod::{
    enumerate_points, is_zero_dimensional, module_groebner, standard_pairs, MPoly, ModVector,
    MultiIndex, Submodule,
};

use super::{FactorIdeal, RadicalResult};

/// Exhaustive output verification runs when the base field raised to the
/// quotient dimension stays below this many elements.
const INLINE_SEMIPRIME_CAP: u64 = 512;

/// The row submodule a left ideal induces on one simple factor: apply the
/// factor split to every coefficient of every basis polynomial and collect
/// the matrix rows, then complete the result over the factor center.
pub fn factor_rows(
    alg: &FinDimAlgebra,
    w: &WedderburnData,
    ideal: &LeftIdeal,
    j: usize,
) -> Result<Submodule> {
    const AT: &str = "radical::factor_rows";
    let count = w.factors.len();
    if j >= count {
        return Err(Error::FactorIndexOutOfRange { at: AT, index: j, count });
    }
    if ideal.dim() != alg.dim() {
        return Err(Error::MixedParents {
            at: AT,
            why: "the ideal does not live over the decomposed algebra".into(),
        });
    }
    let factor = &w.factors[j];
    let e = &factor.center;
    let k = factor.k;
    let n = ideal.nvars();
    let mut rows: Vec<ModVector> = Vec::new();
    for g in ideal.basis_polys(alg) {
        let mut comps = vec![vec![MPoly::zero(n); k]; k];
        for (exp, coeff) in g.terms() {
            let theta = factor.theta_hat(coeff);
            for s in 0..k {
                for t in 0..k {
                    if theta[s][t].is_zero() {
                        continue;
                    }
                    let term = MPoly::term(n, exp.clone(), theta[s][t].clone());
                    comps[s][t] = MPoly::add(e, &comps[s][t], &term);
                }
            }
        }
        for row in comps {
            rows.push(ModVector::from_components(row)?);
        }
    }
    module_groebner(e, &Submodule::new(k, n, rows)?, Default::default())
}

/// Generators of the left ideal a factor's row submodule pulls back to:
/// place each basis row in the first matrix row, map the matrix into the
/// semisimple quotient, and lift along the section.
pub fn rows_to_generators(
    alg: &FinDimAlgebra,
    w: &WedderburnData,
    j: usize,
    rows: &Submodule,
) -> Result<Vec<AlgPoly>> {
    const AT: &str = "radical::rows_to_generators";
    let count = w.factors.len();
    if j >= count {
        return Err(Error::FactorIndexOutOfRange { at: AT, index: j, count });
    }
    let factor = &w.factors[j];
    let e = &factor.center;
    let k = factor.k;
    if rows.rank() != k {
        return Err(Error::RankMismatch { at: AT, expected: k, got: rows.rank() });
    }
    let n = rows.nvars();
    let basis = rows.basis().ok_or(Error::NotSupported {
        at: AT,
        why: "the row submodule has no cached basis; complete it first".into(),
    })?;
    let mut out = Vec::with_capacity(basis.len());
    for row in basis {
        let mut exps: Vec<MultiIndex> = Vec::new();
        for p in row.components() {
            for (exp, _) in p.terms() {
                if !exps.contains(exp) {
                    exps.push(exp.clone());
                }
            }
        }
        let mut terms = Vec::with_capacity(exps.len());
        for exp in exps {
            let mut m = vec![vec![e.zero(); k]; k];
            for t in 0..k {
                m[0][t] = row.component(t).coeff(e, &exp);
            }
            let q = factor.matrix_to_quotient(&w.quotient, &m);
            terms.push((exp, w.lift(&q)));
        }
        out.push(AlgPoly::from_terms(alg.dim(), n, terms));
    }
    Ok(out)
}

/// `xi^exp * v` in the point's field.
fn scaled_point_power(
    big: &ExtField,
    xi: &[FieldElem],
    exp: &[u32],
    v: &FieldElem,
) -> FieldElem {
    let mut out = v.clone();
    for (l, &e) in exp.iter().enumerate() {
        if e > 0 {
            out = big.mul(&out, &big.pow_u64(&xi[l], u64::from(e)));
        }
    }
    out
}

/// A point of the variety together with one certified kernel direction.
type UsedPoint = (ExtField, Vec<FieldElem>, Vec<FieldElem>);

/// Intercept one factor's row submodule against every point of its variety:
/// evaluate the basis rows at each point, extract the kernel directions, and
/// add the joint kernel of the resulting linear conditions to the submodule.
/// Returns the enlarged submodule and the points and directions used.
fn intercept_rows(
    e: &ExtField,
    k: usize,
    nj: &Submodule,
    pairs: &[(usize, MultiIndex)],
    points: &[(ExtField, Vec<FieldElem>)],
) -> Result<(Submodule, Vec<UsedPoint>)> {
    const AT: &str = "radical::rad_pipeline";
    let n = nj.nvars();
    let basis = nj.basis().expect("completed by factor_rows");
    let mut cond_rows: Vec<Vec<FieldElem>> = Vec::new();
    let mut used: Vec<UsedPoint> = Vec::new();
    for (big, xi) in points {
        let lift = |c: &FieldElem| big.embed_from(e, c).expect("center sits below");
        let mut stacked: Vec<Vec<FieldElem>> = Vec::with_capacity(basis.len());
        for row in basis {
            let vals: Result<Vec<FieldElem>> =
                (0..k).map(|t| row.component(t).eval_lifted(big, xi, lift)).collect();
            stacked.push(vals?);
        }
        let kern = ExactMatrix::from_rows(big, stacked, k)?.kernel_basis(big);
        if kern.is_empty() {
            return Err(Error::InternalInconsistency {
                at: AT,
                why: "a variety point has full-rank row evaluations".into(),
            });
        }
        for v in kern {
            let width = big.coords_over(e, &big.zero())?.len();
            let mut rows_here = vec![vec![e.zero(); pairs.len()]; width];
            for (col, (pos, exp)) in pairs.iter().enumerate() {
                let val = scaled_point_power(big, xi, exp, &v[*pos]);
                for (delta, c) in big.coords_over(e, &val)?.into_iter().enumerate() {
                    rows_here[delta][col] = c;
                }
            }
            cond_rows.extend(rows_here);
            used.push((big.clone(), xi.clone(), v));
        }
    }
    if cond_rows.is_empty() {
        // A proper submodule with a finite nonzero quotient over a finite
        // field always meets some point of its variety.
        return Err(Error::InternalInconsistency {
            at: AT,
            why: "a proper row module yielded no directional point".into(),
        });
    }
    let cond = ExactMatrix::from_rows(e, cond_rows, pairs.len())?;
    let mut enlarged: Vec<ModVector> = basis.to_vec();
    for c in cond.kernel_basis(e) {
        let mut comps = vec![MPoly::zero(n); k];
        for (col, (pos, exp)) in pairs.iter().enumerate() {
            if c[col].is_zero() {
                continue;
            }
            let term = MPoly::term(n, exp.clone(), c[col].clone());
            comps[*pos] = MPoly::add(e, &comps[*pos], &term);
        }
        enlarged.push(ModVector::from_components(comps)?);
    }
    let nrad = module_groebner(e, &Submodule::new(k, n, enlarged)?, Default::default())?;
    Ok((nrad, used))
}

/// Every element of the quotient of the output's backing submodule, as
/// candidate polynomials for the exhaustive semiprimeness check.
fn quotient_candidates(
    alg: &FinDimAlgebra,
    output: &LeftIdeal,
) -> Result<Option<Vec<AlgPoly>>> {
    let f = alg.field();
    let Some(pairs) = standard_pairs(output.backing())? else {
        return Ok(None);
    };
    if pairs.is_empty() {
        return Ok(Some(Vec::new()));
    }
    let Some(size) = f.size() else {
        return Ok(None);
    };
    let total = size.pow(pairs.len() as u32);
    if total > num_bigint::BigUint::from(INLINE_SEMIPRIME_CAP) {
        return Ok(None);
    }
    let elems = f.elements(INLINE_SEMIPRIME_CAP)?;
    let n = output.nvars();
    let d = alg.dim();
    let mut out = Vec::new();
    let mut idx = vec![0usize; pairs.len()];
    loop {
        if idx.iter().any(|&i| i != 0) {
            let mut terms: std::collections::BTreeMap<MultiIndex, AlgElem> =
                std::collections::BTreeMap::new();
            for (col, (pos, exp)) in pairs.iter().enumerate() {
                let c = &elems[idx[col]];
                if c.is_zero() {
                    continue;
                }
                let entry = terms.entry(exp.clone()).or_insert_with(|| vec![f.zero(); d]);
                entry[*pos] = c.clone();
            }
            out.push(AlgPoly::from_terms(d, n, terms));
        }
        let mut l = 0;
        loop {
            if l == pairs.len() {
                break;
            }
            idx[l] += 1;
            if idx[l] < elems.len() {
                break;
            }
            idx[l] = 0;
            l += 1;
        }
        if l == pairs.len() {
            break;
        }
    }
    Ok(Some(out))
}

/// The radical of a finitely generated left ideal, with the per-factor row
/// submodules and the directional points that certify the answer.
///
/// The base field must be finite, since the interception enumerates variety
/// points, and the ideal must induce a finite-dimensional quotient on every
/// factor's row submodule once the coefficient radical is adjoined.
pub fn rad_pipeline(
    alg: &FinDimAlgebra,
    w: &WedderburnData,
    ideal: &LeftIdeal,
) -> Result<RadicalResult> {
    const AT: &str = "radical::rad_pipeline";
    if ideal.dim() != alg.dim() {
        return Err(Error::MixedParents {
            at: AT,
            why: "the ideal does not live over the decomposed algebra".into(),
        });
    }
    if alg.field().size().is_none() {
        return Err(Error::InfiniteBaseField { at: AT });
    }
    let n = ideal.nvars();

    // Adjoining the coefficient radical changes nothing: it is a nilpotent
    // two-sided ideal of the polynomial ring, hence inside every maximal
    // left ideal, hence inside the radical already.
    let mut adjoined = ideal.generators().to_vec();
    for r in &w.rad_basis {
        adjoined.push(AlgPoly::constant(n, r));
    }
    let closed = generate(alg, n, &adjoined)?;

    let mut certificate: Vec<DirectionalPoint> = Vec::new();
    let mut factor_rows_out: Vec<FactorIdeal> = Vec::new();
    let mut factor_radicals_out: Vec<FactorIdeal> = Vec::new();
    let mut output_gens: Vec<AlgPoly> = Vec::new();
    for r in &w.rad_basis {
        output_gens.push(AlgPoly::constant(n, r));
    }

    for j in 0..w.factors.len() {
        let factor = &w.factors[j];
        let e = &factor.center;
        let k = factor.k;
        let nj = factor_rows(alg, w, &closed, j)?;
        let (finite, bound) = is_zero_dimensional(e, &nj)?;
        if !finite {
            return Err(Error::NotZeroDimensional {
                at: AT,
                why: format!("the row module of factor {j} has an infinite-dimensional quotient"),
            });
        }
        let bound = bound.ok_or(Error::InternalInconsistency {
            at: AT,
            why: "a finite quotient came without a degree bound".into(),
        })?;
        let pairs = standard_pairs(&nj)?.ok_or(Error::InternalInconsistency {
            at: AT,
            why: "a finite quotient came without standard pairs".into(),
        })?;

        let nrad = if pairs.is_empty() {
            // The row module is everything; its variety is empty and it is
            // its own radical.
            nj.clone()
        } else {
            let points = enumerate_points(e, &nj, bound)?;
            let (nrad, used) = intercept_rows(e, k, &nj, &pairs, &points)?;
            for (big, xi, v) in used {
                certificate.push(DirectionalPoint { factor: j, field: big, xi, v });
            }
            nrad
        };

        factor_rows_out.push(FactorIdeal { factor: j, rows: nj });
        output_gens.extend(rows_to_generators(alg, w, j, &nrad)?);
        factor_radicals_out.push(FactorIdeal { factor: j, rows: nrad });
    }

    let output = generate(alg, n, &output_gens)?;

    // The input must sit inside its radical.
    for g in ideal.generators() {
        if !contains(alg, &output, g) {
            return Err(Error::InternalInconsistency {
                at: AT,
                why: "an input generator fell outside the computed radical".into(),
            });
        }
    }
    // Every certified direction must be killed by the whole output.
    for p in &certificate {
        let k = w.factors[p.factor].k;
        for b in output.basis_polys(alg) {
            let m = evaluate(alg, w, &b, p.factor, &p.field, &p.xi)?;
            for row in m.iter().take(k) {
                let mut acc = p.field.zero();
                for (t, entry) in row.iter().enumerate() {
                    acc = p.field.add(&acc, &p.field.mul(entry, &p.v[t]));
                }
                if !acc.is_zero() {
                    return Err(Error::InternalInconsistency {
                        at: AT,
                        why: "the output fails to annihilate a certified direction".into(),
                    });
                }
            }
        }
    }
    // On a small quotient, verify semiprimeness outright.
    if let Some(candidates) = quotient_candidates(alg, &output)? {
        let (ok, _) = is_semiprime_left_witnessed(alg, &output, &candidates);
        if !ok {
            return Err(Error::InternalInconsistency {
                at: AT,
                why: "the computed radical failed the exhaustive semiprimeness check".into(),
            });
        }
    }

    Ok(RadicalResult {
        input: ideal.clone(),
        output,
        certificate,
        factor_rows: factor_rows_out,
        factor_radicals: factor_radicals_out,
    })
}
