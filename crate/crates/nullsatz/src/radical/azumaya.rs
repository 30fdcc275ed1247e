//! The center correspondence for split matrix algebras: scalar ideals of the
//! center's polynomial ring lift to two-sided ideals of the matrix
//! polynomial ring, two-sided ideals trace back to scalar ideals, and the
//! two maps invert each other. A finite quotient by a two-sided ideal can be
//! presented as an algebra again, which makes preserved maximality checkable
//! by decomposition.

use crate::error::{Error, Result};
use crate::findim::{FinDimAlgebra, WedderburnData};
use crate::leftideal::{contains, generate, AlgPoly, LeftIdeal};
use crate::polymod::{
    intersect_submodules, module_groebner, standard_pairs, MPoly, ModVector, Submodule,
};

use super::codim::nf_on_pairs;

/// Require a split coefficient algebra: trivial radical and one simple
/// factor.
fn require_split<'w>(
    w: &'w WedderburnData,
    at: &'static str,
) -> Result<&'w crate::findim::SimpleFactor> {
    if !w.rad_basis.is_empty() || w.factors.len() != 1 {
        return Err(Error::NotSplit {
            at,
            why: "the correspondence needs a single split matrix factor".into(),
        });
    }
    Ok(&w.factors[0])
}

/// Require closure under right multiplication by the coefficient algebra.
fn require_two_sided(
    alg: &FinDimAlgebra,
    ideal: &LeftIdeal,
    at: &'static str,
) -> Result<()> {
    let n = ideal.nvars();
    for p in ideal.basis_polys(alg) {
        for i in 0..alg.dim() {
            let right = p.mul(alg, &AlgPoly::constant(n, &alg.basis_elem(i)));
            if !contains(alg, ideal, &right) {
                return Err(Error::NotSupported {
                    at,
                    why: "the left ideal is not closed under right multiplication".into(),
                });
            }
        }
    }
    Ok(())
}

/// Lift an ideal of the center's polynomial ring to the two-sided ideal of
/// matrix polynomials it generates: each scalar generator is placed on the
/// identity matrix.
pub fn matrix_ideal_from_center(
    alg: &FinDimAlgebra,
    w: &WedderburnData,
    gens: &[MPoly],
    nvars: usize,
) -> Result<LeftIdeal> {
    const AT: &str = "radical::matrix_ideal_from_center";
    let factor = require_split(w, AT)?;
    let e = &factor.center;
    let k = factor.k;
    let mut lifted = Vec::with_capacity(gens.len());
    for p in gens {
        if p.nvars() != nvars {
            return Err(Error::DimensionMismatch {
                at: AT,
                why: format!("generator in {} variables, expected {nvars}", p.nvars()),
            });
        }
        let terms = p.terms().map(|(exp, c)| {
            let mut m = vec![vec![e.zero(); k]; k];
            for s in 0..k {
                m[s][s] = c.clone();
            }
            (exp.clone(), w.lift(&factor.matrix_to_quotient(&w.quotient, &m)))
        });
        lifted.push(AlgPoly::from_terms(alg.dim(), nvars, terms));
    }
    generate(alg, nvars, &lifted)
}

/// Trace a two-sided ideal of matrix polynomials back to the scalar ideal of
/// the center's polynomial ring: the polynomials that, placed on the
/// identity, land in the ideal. Computed per matrix column through the row
/// submodule and intersected.
pub fn center_ideal_from_matrix(
    alg: &FinDimAlgebra,
    w: &WedderburnData,
    ideal: &LeftIdeal,
) -> Result<Submodule> {
    const AT: &str = "radical::center_ideal_from_matrix";
    let factor = require_split(w, AT)?;
    if ideal.dim() != alg.dim() {
        return Err(Error::MixedParents {
            at: AT,
            why: "the ideal does not live over the decomposed algebra".into(),
        });
    }
    require_two_sided(alg, ideal, AT)?;
    let e = &factor.center;
    let k = factor.k;
    let n = ideal.nvars();
    let rows = super::factor_rows(alg, w, ideal, 0)?;

    let mut acc: Option<Submodule> = None;
    for s in 0..k {
        let cyclic = module_groebner(
            e,
            &Submodule::new(k, n, vec![ModVector::unit(k, s, MPoly::constant(n, e.one()))])?,
            Default::default(),
        )?;
        let inter = intersect_submodules(e, &rows, &cyclic)?;
        let mut scalar_gens: Vec<ModVector> = Vec::new();
        for v in inter.basis().expect("intersection comes completed") {
            scalar_gens.push(ModVector::from_components(vec![v.component(s).clone()])?);
        }
        let js = module_groebner(e, &Submodule::new(1, n, scalar_gens)?, Default::default())?;
        acc = Some(match acc {
            None => js,
            Some(prev) => intersect_submodules(e, &prev, &js)?,
        });
    }
    Ok(acc.expect("matrix factors have positive size"))
}

/// Present the quotient by a two-sided ideal of finite codimension as an
/// algebra on the standard pairs of the ideal's backing submodule.
pub fn quotient_by_two_sided(
    alg: &FinDimAlgebra,
    ideal: &LeftIdeal,
) -> Result<FinDimAlgebra> {
    const AT: &str = "radical::quotient_by_two_sided";
    if ideal.dim() != alg.dim() {
        return Err(Error::MixedParents {
            at: AT,
            why: "the ideal does not live over the given algebra".into(),
        });
    }
    require_two_sided(alg, ideal, AT)?;
    let pairs = standard_pairs(ideal.backing())?.ok_or_else(|| Error::NotZeroDimensional {
        at: AT,
        why: "the quotient is infinite-dimensional".into(),
    })?;
    if pairs.is_empty() {
        return Err(Error::NotSupported {
            at: AT,
            why: "the quotient is the zero ring".into(),
        });
    }
    let f = alg.field();
    let d = alg.dim();
    let n = ideal.nvars();
    let backing = ideal.backing();

    let monomial = |i: usize, exp: &[u32]| {
        AlgPoly::from_terms(d, n, [(exp.to_vec(), alg.basis_elem(i))])
    };
    let mut structure = Vec::with_capacity(pairs.len());
    for (i, exp_i) in &pairs {
        let left = monomial(*i, exp_i);
        let mut row = Vec::with_capacity(pairs.len());
        for (t, exp_t) in &pairs {
            let prod = left.mul(alg, &monomial(*t, exp_t));
            row.push(nf_on_pairs(f, backing, &pairs, &prod)?);
        }
        structure.push(row);
    }
    let unit = nf_on_pairs(f, backing, &pairs, &AlgPoly::one(alg, n))?;
    let names = pairs
        .iter()
        .map(|(i, exp)| {
            let base = alg.names()[*i].clone();
            if exp.iter().all(|&x| x == 0) {
                return base;
            }
            let mut parts = vec![base];
            for (l, &x) in exp.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let var = if exp.len() == 1 { "x".to_string() } else { format!("x{}", l + 1) };
                parts.push(if x == 1 { var } else { format!("{var}^{x}") });
            }
            parts.join("*")
        })
        .collect();
    FinDimAlgebra::new(f.clone(), structure, unit, Some(names))
}
