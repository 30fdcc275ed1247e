//! Separability identities from matrix splittings.
//!
//! For a split semisimple algebra A with center R this produces, for each
//! member u_i of an R-spanning family of A, a finite family of pairs
//! (e_i^a, f_i^a) such that sum_a e_i^a x f_i^a is central for every x and
//! the map x -> sum_i omega_i(x) u_i, with omega_i(x) that central sum, is
//! the identity on A. The pairs come from matrix units: inside a factor
//! isomorphic to M_k(E) the family for the (s,t) generator is
//! {(E_ls, E_tl) : l = 1..k}, and the central value is the (s,t) entry of x
//! times the factor's idempotent.

use super::{wedderburn, AlgElem, FinDimAlgebra};
use crate::error::{Error, Result};
use crate::field::ExactMatrix;

/// One sandwiching pair (left, right) of a separability family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualPair {
    pub left: AlgElem,
    pub right: AlgElem,
}

/// A full separability identity: generators u_i of A over its center and,
/// for each, the sandwiching pairs whose sum implements omega_i.
#[derive(Debug, Clone)]
pub struct DualBasisData {
    /// R-module generators u_i of A, one per identity.
    pub generators: Vec<AlgElem>,
    /// Sandwiching pairs per generator.
    pub pairs: Vec<Vec<DualPair>>,
    /// Basis of the center R inside A.
    pub center_basis: Vec<AlgElem>,
}

impl DualBasisData {
    /// omega_i(x) = sum_a e_i^a x f_i^a, an element of the center.
    pub fn omega(&self, a: &FinDimAlgebra, i: usize, x: &AlgElem) -> AlgElem {
        let mut acc = a.zero();
        for p in &self.pairs[i] {
            let t = a.mul(&a.mul(&p.left, x), &p.right);
            acc = a.add(&acc, &t);
        }
        acc
    }

    /// Check the defining identities on every algebra basis element:
    /// each omega_i lands in the center, each omega_i is R-linear, and
    /// x = sum_i omega_i(x) u_i.
    pub fn verify(&self, a: &FinDimAlgebra) -> Result<()> {
        const AT: &str = "findim::dualbasis::verify";
        let f = a.field();
        let d = a.dim();
        let center_mat =
            ExactMatrix::from_rows(f, self.center_basis.clone(), d).expect("uniform");
        for bi in 0..d {
            let x = a.basis_elem(bi);
            let mut recon = a.zero();
            for i in 0..self.generators.len() {
                let w = self.omega(a, i, &x);
                if !center_mat.row_space_contains(f, &w).expect("width") {
                    return Err(Error::InternalInconsistency {
                        at: AT,
                        why: format!("omega_{i} of basis element {bi} is not central"),
                    });
                }
                recon = a.add(&recon, &a.mul(&w, &self.generators[i]));
            }
            if recon != x {
                return Err(Error::InternalInconsistency {
                    at: AT,
                    why: format!("reconstruction fails on basis element {bi}"),
                });
            }
            for r in &self.center_basis {
                let rx = a.mul(r, &x);
                for i in 0..self.generators.len() {
                    let lhs = self.omega(a, i, &rx);
                    let rhs = a.mul(r, &self.omega(a, i, &x));
                    if lhs != rhs {
                        return Err(Error::InternalInconsistency {
                            at: AT,
                            why: format!("omega_{i} is not center-linear at basis element {bi}"),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// Construct the separability identity for a split semisimple algebra.
///
/// Fails with `NotAzumaya` when the algebra has a nonzero radical, since no
/// center-valued identity of this shape can reconstruct a nilpotent element,
/// and propagates `NotSplit` from the factor decomposition.
pub fn xi_preimage(a: &FinDimAlgebra) -> Result<DualBasisData> {
    const AT: &str = "findim::dualbasis::xi_preimage";
    let wd = wedderburn(a)?;
    if !wd.rad_basis.is_empty() {
        return Err(Error::NotAzumaya {
            at: AT,
            why: format!("the algebra has a radical of dimension {}", wd.rad_basis.len()),
        });
    }
    // rad = 0, so the quotient is A itself in the same coordinates.
    let b = &wd.quotient;
    let e = |factor: &super::SimpleFactor, r: usize, s: usize| -> AlgElem {
        let ef = &factor.center;
        let mut m = vec![vec![ef.zero(); factor.k]; factor.k];
        m[r][s] = ef.one();
        factor.matrix_to_quotient(b, &m)
    };

    let mut generators = Vec::new();
    let mut pairs = Vec::new();
    for factor in &wd.factors {
        let k = factor.k;
        for s in 0..k {
            for t in 0..k {
                generators.push(e(factor, s, t));
                let mut family = Vec::with_capacity(k);
                for l in 0..k {
                    family.push(DualPair { left: e(factor, l, s), right: e(factor, t, l) });
                }
                pairs.push(family);
            }
        }
    }
    let mut center_rows = Vec::new();
    for factor in &wd.factors {
        center_rows.extend(factor.center_basis.iter().cloned());
    }
    let data = DualBasisData { generators, pairs, center_basis: center_rows };
    data.verify(a)?;
    Ok(data)
}
