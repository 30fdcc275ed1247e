//! A rational demonstration that a directional ideal of finite codimension
//! need not be maximal. Over the 2 by 2 rational matrices, the direction
//! `(1, sqrt(2))` at the point 0 gives an ideal strictly inside the one for
//! the rational direction `(1, 0)`, which is itself proper; the first ideal
//! nevertheless passes the commutative-style finite-codimension test. Over
//! an algebraically closed field no such strict chain exists.

use crate::error::{Error, Result};
use crate::field::ExtField;
use crate::findim::{presets, wedderburn, FinDimAlgebra, WedderburnData};
use crate::leftideal::{
    contains, directional_ideal, AlgPoly, DirectionalPoint, LeftIdeal,
};
use crate::polymod::MPoly;

use super::finite_codim_check;

/// The two nested directional ideals and the evidence of strictness.
#[derive(Debug, Clone)]
pub struct NonmaximalDemo {
    /// The 2 by 2 matrix algebra over the rationals.
    pub algebra: FinDimAlgebra,
    /// Its decomposition, used by the directional machinery.
    pub wedderburn: WedderburnData,
    /// The ideal of the irrational direction `(1, sqrt(2))` at 0.
    pub narrow: LeftIdeal,
    /// The ideal of the rational direction `(1, 0)` at 0.
    pub wide: LeftIdeal,
    /// A member of the wide ideal missing from the narrow one.
    pub witness: AlgPoly,
    /// A polynomial both ideals contain.
    pub shared: AlgPoly,
    /// Codimension of the narrow ideal.
    pub narrow_codim: usize,
    /// Codimension of the wide ideal.
    pub wide_codim: usize,
}

/// Build the demonstration and verify every claim it makes.
pub fn nonmaximal_directional_demo() -> Result<NonmaximalDemo> {
    const AT: &str = "radical::nonmaximal_directional_demo";
    let fail = |why: &str| Error::InternalInconsistency { at: AT, why: why.into() };

    let rat = ExtField::rationals();
    let alg = presets::matrix_algebra(&rat, 2)?;
    let w = wedderburn(&alg)?;
    let root2 =
        rat.make_extension("r", &[rat.from_int(-2), rat.zero(), rat.one()])?;

    let narrow = directional_ideal(
        &alg,
        &w,
        &DirectionalPoint {
            factor: 0,
            field: root2.clone(),
            xi: vec![root2.zero()],
            v: vec![root2.one(), root2.generator()],
        },
        1,
    )?;
    let wide = directional_ideal(
        &alg,
        &w,
        &DirectionalPoint {
            factor: 0,
            field: rat.clone(),
            xi: vec![rat.zero()],
            v: vec![rat.one(), rat.zero()],
        },
        1,
    )?;

    for p in narrow.basis_polys(&alg) {
        if !contains(&alg, &wide, &p) {
            return Err(fail("the irrational ideal is not inside the rational one"));
        }
    }
    let e12 = alg
        .names()
        .iter()
        .position(|s| s == "e12")
        .ok_or_else(|| fail("the matrix algebra lost its unit names"))?;
    let witness = AlgPoly::constant(1, &alg.basis_elem(e12));
    if !contains(&alg, &wide, &witness) {
        return Err(fail("the witness fell outside the wide ideal"));
    }
    if contains(&alg, &narrow, &witness) {
        return Err(fail("the witness failed to separate the two ideals"));
    }
    if contains(&alg, &wide, &AlgPoly::one(&alg, 1)) {
        return Err(fail("the wide ideal is not proper"));
    }
    let shared = AlgPoly::from_scalar(&alg, &MPoly::variable(&rat, 1, 0));
    if !contains(&alg, &narrow, &shared) || !contains(&alg, &wide, &shared) {
        return Err(fail("the shared polynomial is missing from an ideal"));
    }

    let (narrow_ok, narrow_codim) = finite_codim_check(&alg, &narrow)?;
    let (wide_ok, wide_codim) = finite_codim_check(&alg, &wide)?;
    if !narrow_ok || !wide_ok {
        return Err(fail("a directional ideal failed the finite-codimension test"));
    }
    let narrow_codim = narrow_codim.ok_or_else(|| fail("missing narrow codimension"))?;
    let wide_codim = wide_codim.ok_or_else(|| fail("missing wide codimension"))?;

    Ok(NonmaximalDemo {
        algebra: alg,
        wedderburn: w,
        narrow,
        wide,
        witness,
        shared,
        narrow_codim,
        wide_codim,
    })
}
