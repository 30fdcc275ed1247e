//! Jacobson radical of a finite-dimensional algebra, exact in every
//! characteristic.
//!
//! Three routes feed one certificate. In characteristic 0 or p > dim the
//! kernel of the trace form (a,b) -> Tr(L_a L_b) is the radical. Over finite
//! fields of small characteristic that kernel can be too big, so a descending
//! chain cuts it down with the characteristic-polynomial coefficient maps
//! sigma_{p^k} (linearized by an inverse Frobenius twist); elements of the
//! radical satisfy every sigma constraint because their left multiples are
//! nilpotent. Whatever route ran, the result is certified: it must be a
//! two-sided ideal and nilpotent, which pins it below the radical, while the
//! construction pins it above. A certification failure falls back to an
//! exhaustive sum of nilpotent principal ideals on small algebras and is a
//! hard error otherwise.

use super::{subspace_product, AlgElem, FinDimAlgebra};
use crate::error::{Error, Result};
use crate::field::{unipoly, ExactMatrix, ExtField, FieldElem, UniPoly};
use num_bigint::BigUint;

const EXHAUSTIVE_FALLBACK_CAP: u64 = 65536;

/// Basis of the Jacobson radical, as canonical subspace rows.
pub fn radical(a: &FinDimAlgebra) -> Result<Vec<AlgElem>> {
    const AT: &str = "findim::radical";
    let p = a.field().characteristic();
    let candidate = if p == 0 || p as usize > a.dim() {
        trace_form_kernel(a, &full_basis(a))
    } else {
        small_characteristic_chain(a)?
    };
    if certify_nilpotent_ideal(a, &candidate) {
        return Ok(candidate);
    }
    // The chain is trusted modulo this certificate; on the rare failure,
    // recompute by brute force where feasible.
    if a.count_elements().is_some_and(|c| c <= EXHAUSTIVE_FALLBACK_CAP as u128) {
        let brute = exhaustive_radical(a)?;
        if certify_nilpotent_ideal(a, &brute) {
            return Ok(brute);
        }
    }
    Err(Error::InternalInconsistency {
        at: AT,
        why: "radical candidate failed the nilpotent-ideal certificate".into(),
    })
}

fn full_basis(a: &FinDimAlgebra) -> Vec<AlgElem> {
    (0..a.dim()).map(|i| a.basis_elem(i)).collect()
}

/// Kernel of the form (x, y) -> Tr(L_{xy}) with x restricted to the span of
/// `space`, y ranging over the same span.
fn trace_form_kernel(a: &FinDimAlgebra, space: &[AlgElem]) -> Vec<AlgElem> {
    let f = a.field();
    let n = space.len();
    if n == 0 {
        return Vec::new();
    }
    let mut gram = ExactMatrix::zeros(f, n, n);
    for (yi, y) in space.iter().enumerate() {
        for (xi, x) in space.iter().enumerate() {
            *gram.at_mut(yi, xi) = a.trace_left(&a.mul(x, y));
        }
    }
    in_span_coords(a, space, gram.kernel_basis(f))
}

/// Convert kernel vectors expressed in `space` coordinates back to algebra
/// coordinates, canonicalized.
fn in_span_coords(
    a: &FinDimAlgebra,
    space: &[AlgElem],
    coords: Vec<Vec<FieldElem>>,
) -> Vec<AlgElem> {
    let f = a.field();
    let mut rows = Vec::new();
    for c in coords {
        let mut v = a.zero();
        for (ci, basis_vec) in c.iter().zip(space) {
            if ci.is_zero() {
                continue;
            }
            let scaled = a.scale(ci, basis_vec);
            v = a.add(&v, &scaled);
        }
        rows.push(v);
    }
    if rows.is_empty() {
        return rows;
    }
    ExactMatrix::from_rows(f, rows, a.dim()).expect("uniform").row_space_basis(f)
}

/// Descending chain over a perfect field of characteristic p <= dim: start
/// from the trace-form kernel, then impose, for k = 1, 2, ... while
/// p^k <= dim A, the linearized constraints sigma_{p^k}(L_{xy}) = 0 for y in
/// the current space.
fn small_characteristic_chain(a: &FinDimAlgebra) -> Result<Vec<AlgElem>> {
    let f = a.field();
    let p = f.characteristic();
    let d = a.dim();
    let mut space = trace_form_kernel(a, &full_basis(a));
    let mut pk: u64 = 1;
    let mut k: usize = 0;
    loop {
        pk = pk.saturating_mul(p);
        k += 1;
        if pk as usize > d || space.is_empty() {
            break;
        }
        let n = space.len();
        let mut constraints = ExactMatrix::zeros(f, n, n);
        for (yi, y) in space.iter().enumerate() {
            for (xi, x) in space.iter().enumerate() {
                let l = a.left_mult_matrix(&a.mul(x, y));
                let sigma = sigma_coefficient(f, &l, pk as usize)?;
                *constraints.at_mut(yi, xi) = inverse_frobenius(f, &sigma, k);
            }
        }
        space = in_span_coords(a, &space, constraints.kernel_basis(f));
    }
    Ok(space)
}

/// sigma_j(M): the degree-j elementary symmetric function of the eigenvalues,
/// read off the characteristic polynomial.
fn sigma_coefficient(f: &ExtField, m: &ExactMatrix, j: usize) -> Result<FieldElem> {
    let chi = charpoly(f, m)?;
    let d = chi.len() - 1;
    if j > d {
        return Ok(f.zero());
    }
    let c = chi[d - j].clone();
    // chi = prod(lambda - eigenvalue): coefficient of lambda^(d-j) is
    // (-1)^j sigma_j.
    Ok(if j % 2 == 0 { c } else { f.neg(&c) })
}

/// Inverse of the k-fold Frobenius t -> t^(p^k) on a finite field.
fn inverse_frobenius(f: &ExtField, t: &FieldElem, k: usize) -> FieldElem {
    let p = f.characteristic();
    let m = f.absolute_degree();
    let j = (m - (k % m)) % m;
    if j == 0 {
        return t.clone();
    }
    let e = BigUint::from(p).pow(j as u32);
    f.pow(t, &e)
}

/// Characteristic polynomial det(lambda I - M) by fraction-free elimination.
/// Leading principal minors of lambda I - M are monic in lambda, so no
/// pivoting is ever needed and every division is exact.
pub fn charpoly(f: &ExtField, m: &ExactMatrix) -> Result<UniPoly> {
    const AT: &str = "findim::charpoly";
    let n = m.nrows();
    if n != m.ncols() {
        return Err(Error::DimensionMismatch {
            at: AT,
            why: format!("{}x{} matrix has no characteristic polynomial", n, m.ncols()),
        });
    }
    if n == 0 {
        return Ok(unipoly::constant(f.one()));
    }
    let mut grid: Vec<Vec<UniPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut p = vec![f.neg(m.at(i, j))];
                    if i == j {
                        p.push(f.one());
                    }
                    unipoly::trim(p)
                })
                .collect()
        })
        .collect();
    let mut prev: UniPoly = unipoly::constant(f.one());
    for k in 0..n - 1 {
        for i in k + 1..n {
            for j in k + 1..n {
                let lhs = unipoly::mul(f, &grid[i][j], &grid[k][k]);
                let rhs = unipoly::mul(f, &grid[i][k], &grid[k][j]);
                let num = unipoly::sub(f, &lhs, &rhs);
                let (q, r) = unipoly::divrem(f, &num, &prev)?;
                if !r.is_empty() {
                    return Err(Error::InternalInconsistency {
                        at: AT,
                        why: "fraction-free elimination produced a nonzero remainder".into(),
                    });
                }
                grid[i][j] = q;
            }
        }
        prev = grid[k][k].clone();
    }
    unipoly::monic(f, &grid[n - 1][n - 1])
}

/// True when the span is a two-sided ideal whose subspace powers vanish.
fn certify_nilpotent_ideal(a: &FinDimAlgebra, basis: &[AlgElem]) -> bool {
    if basis.is_empty() {
        return true;
    }
    let f = a.field();
    let m = ExactMatrix::from_rows(f, basis.to_vec(), a.dim()).expect("uniform");
    for v in basis {
        for i in 0..a.dim() {
            let left = a.mul(&a.basis_elem(i), v);
            let right = a.mul(v, &a.basis_elem(i));
            let ok = m.row_space_contains(f, &left).expect("width")
                && m.row_space_contains(f, &right).expect("width");
            if !ok {
                return false;
            }
        }
    }
    let mut power: Vec<AlgElem> = basis.to_vec();
    for _ in 0..a.dim() {
        power = subspace_product(a, &power, basis);
        if power.is_empty() {
            return true;
        }
    }
    false
}

/// Sum of all nilpotent principal two-sided ideals, by element enumeration.
fn exhaustive_radical(a: &FinDimAlgebra) -> Result<Vec<AlgElem>> {
    let f = a.field();
    let mut acc: Vec<AlgElem> = Vec::new();
    for z in a.elements(EXHAUSTIVE_FALLBACK_CAP)? {
        if a.is_zero_elem(&z) {
            continue;
        }
        if !acc.is_empty() {
            let m = ExactMatrix::from_rows(f, acc.clone(), a.dim()).expect("uniform");
            if m.row_space_contains(f, &z).expect("width") {
                continue;
            }
        }
        // Two-sided ideal generated by z.
        let mut rows = Vec::new();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                rows.push(a.mul(&a.mul(&a.basis_elem(i), &z), &a.basis_elem(j)));
            }
        }
        let ideal = ExactMatrix::from_rows(f, rows, a.dim())
            .expect("uniform")
            .row_space_basis(f);
        if certify_nilpotent_ideal(a, &ideal) {
            let mut joined = acc.clone();
            joined.extend(ideal);
            acc = ExactMatrix::from_rows(f, joined, a.dim())
                .expect("uniform")
                .row_space_basis(f);
        }
    }
    Ok(acc)
}
