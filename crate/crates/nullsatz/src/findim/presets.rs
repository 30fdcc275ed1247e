//! Ready-made structure-constant algebras used across tests and the CLI.

use super::{AlgElem, FinDimAlgebra};
use crate::error::{Error, Result};
use crate::field::{ExtField, FieldElem, UniPoly};

/// Full matrix algebra `M_k` with the matrix-unit basis `e11, e12, ..., ekk`
/// in row-major order.
pub fn matrix_algebra(field: &ExtField, k: usize) -> Result<FinDimAlgebra> {
    let d = k * k;
    let idx = |r: usize, c: usize| r * k + c;
    let mut structure = vec![vec![vec![field.zero(); d]; d]; d];
    for a in 0..k {
        for b in 0..k {
            for c in 0..k {
                for e in 0..k {
                    // e_ab * e_ce = delta_bc * e_ae
                    if b == c {
                        structure[idx(a, b)][idx(c, e)][idx(a, e)] = field.one();
                    }
                }
            }
        }
    }
    let mut unit = vec![field.zero(); d];
    for a in 0..k {
        unit[idx(a, a)] = field.one();
    }
    let names = (0..k)
        .flat_map(|r| (0..k).map(move |c| format!("e{}{}", r + 1, c + 1)))
        .collect();
    FinDimAlgebra::new(field.clone(), structure, unit, Some(names))
}

/// Dual numbers `F[eps]/(eps^2)` with basis `{1, eps}`.
pub fn dual_numbers(field: &ExtField) -> Result<FinDimAlgebra> {
    let z = field.zero();
    let o = field.one();
    let structure = vec![
        vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
        vec![vec![z.clone(), o.clone()], vec![z.clone(), z.clone()]],
    ];
    let unit = vec![o, z];
    FinDimAlgebra::new(field.clone(), structure, unit, Some(vec!["one".into(), "eps".into()]))
}

/// Group algebra of the cyclic group of order `n`, basis `{1, g, ..., g^(n-1)}`.
pub fn cyclic_group_algebra(field: &ExtField, n: usize) -> Result<FinDimAlgebra> {
    const AT: &str = "findim::presets::cyclic_group_algebra";
    if n == 0 {
        return Err(Error::NotSupported { at: AT, why: "group order must be positive".into() });
    }
    let mut structure = vec![vec![vec![field.zero(); n]; n]; n];
    for i in 0..n {
        for j in 0..n {
            structure[i][j][(i + j) % n] = field.one();
        }
    }
    let mut unit = vec![field.zero(); n];
    unit[0] = field.one();
    let names = (0..n)
        .map(|i| match i {
            0 => "one".to_string(),
            1 => "g".to_string(),
            _ => format!("g{i}"),
        })
        .collect();
    FinDimAlgebra::new(field.clone(), structure, unit, Some(names))
}

/// Upper-triangular `k x k` matrices with the matrix-unit basis `e_ij`, i <= j.
pub fn upper_triangular(field: &ExtField, k: usize) -> Result<FinDimAlgebra> {
    let positions: Vec<(usize, usize)> =
        (0..k).flat_map(|r| (r..k).map(move |c| (r, c))).collect();
    let d = positions.len();
    let find = |r: usize, c: usize| positions.iter().position(|&p| p == (r, c));
    let mut structure = vec![vec![vec![field.zero(); d]; d]; d];
    for (i, &(a, b)) in positions.iter().enumerate() {
        for (j, &(c, e)) in positions.iter().enumerate() {
            if b == c {
                let k = find(a, e).expect("a <= b = c <= e stays upper triangular");
                structure[i][j][k] = field.one();
            }
        }
    }
    let mut unit = vec![field.zero(); d];
    for r in 0..k {
        unit[find(r, r).unwrap()] = field.one();
    }
    let names = positions.iter().map(|&(r, c)| format!("e{}{}", r + 1, c + 1)).collect();
    FinDimAlgebra::new(field.clone(), structure, unit, Some(names))
}

/// A field extension `F[u]/(m)` viewed as an `F`-algebra with basis
/// `{1, u, ..., u^(r-1)}`.
pub fn extension_as_algebra(field: &ExtField, minpoly: &UniPoly) -> Result<FinDimAlgebra> {
    let ext = field.make_extension("u", minpoly)?;
    let r = minpoly.len() - 1;
    let u = ext.generator();
    let coords = |e: &FieldElem| -> AlgElem { ext.top_coords(e) };
    let mut structure = vec![vec![vec![field.zero(); r]; r]; r];
    for i in 0..r {
        for j in 0..r {
            let prod = ext.mul(&ext.pow_u64(&u, i as u64), &ext.pow_u64(&u, j as u64));
            structure[i][j] = coords(&prod);
        }
    }
    let unit = coords(&ext.one());
    let names = (0..r)
        .map(|i| match i {
            0 => "one".to_string(),
            1 => "u".to_string(),
            _ => format!("u{i}"),
        })
        .collect();
    FinDimAlgebra::new(field.clone(), structure, unit, Some(names))
}

/// The base field itself as a one-dimensional algebra.
pub fn field_as_algebra(field: &ExtField) -> Result<FinDimAlgebra> {
    let structure = vec![vec![vec![field.one()]]];
    FinDimAlgebra::new(field.clone(), structure, vec![field.one()], Some(vec!["one".into()]))
}
