//! A definition-chasing radical: enumerate every directional point whose
//! ideal contains the input, form the ideals, and intersect them. Nothing
//! here shares machinery with the structural pipeline beyond field
//! arithmetic, basis completion, and the directional ideals themselves, so
//! agreement between the two computations is meaningful evidence.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::field::{irreducible_of_degree, ExactMatrix, ExtField, FieldElem};
use crate::findim::{FinDimAlgebra, WedderburnData};
use crate::leftideal::{directional_ideal, evaluate, generate, AlgPoly, DirectionalPoint, LeftIdeal};
use crate::polymod::{intersect_submodules, is_zero_dimensional};

/// Point scans stay below this many candidate tuples per extension.
const POINT_SCAN_CAP: u64 = 1 << 20;

/// Degrees over one factor's center that can harbor a point of the input's
/// variety: the compositum of the center with a coordinate field of degree
/// dividing `bound` has degree `lcm(t, d) / t` over the center.
fn scan_degrees(center_degree: u32, bound: u32) -> u32 {
    center_degree.lcm(&bound) / center_degree
}

/// The field to scan at one degree over a factor center, with a variable
/// name that avoids the center's own tower.
fn scan_field(e: &ExtField, deg: u32) -> Result<ExtField> {
    if deg == 1 {
        return Ok(e.clone());
    }
    let minpoly = irreducible_of_degree(e, deg as usize)?;
    let mut name = format!("y{deg}");
    while e.tower().iter().any(|step| step.var == name) {
        name.push('y');
    }
    e.make_extension(&name, &minpoly)
}

/// The radical of a finitely generated left ideal, computed directly from
/// its definition: the intersection of every directional ideal containing
/// the input. Points are scanned over extensions of each factor center up to
/// a sound degree bound derived from the input's eliminants; `dmax`
/// overrides the bound and is rejected when it is too small to be complete.
///
/// An input contained in no directional ideal intersects an empty family,
/// which by convention is the full ring.
pub fn geometric_oracle(
    alg: &FinDimAlgebra,
    w: &WedderburnData,
    ideal: &LeftIdeal,
    dmax: Option<u32>,
) -> Result<LeftIdeal> {
    const AT: &str = "radical::geometric_oracle";
    if ideal.dim() != alg.dim() {
        return Err(Error::MixedParents {
            at: AT,
            why: "the ideal does not live over the decomposed algebra".into(),
        });
    }
    let f = alg.field();
    if f.size().is_none() {
        return Err(Error::InfiniteBaseField { at: AT });
    }
    let n = ideal.nvars();
    let (finite, bound) = is_zero_dimensional(f, ideal.backing())?;
    if !finite {
        return Err(Error::NotZeroDimensional {
            at: AT,
            why: "the ideal has an infinite-dimensional quotient".into(),
        });
    }
    let bound = bound.ok_or(Error::InternalInconsistency {
        at: AT,
        why: "a finite quotient came without a degree bound".into(),
    })?;

    let mut collected: Vec<LeftIdeal> = Vec::new();
    for (j, factor) in w.factors.iter().enumerate() {
        let e = &factor.center;
        let k = factor.k;
        let needed = scan_degrees(factor.center_dim as u32, bound);
        if let Some(dm) = dmax {
            if dm < needed {
                return Err(Error::DegreeBoundTooSmall { at: AT, found: needed, cap: dm });
            }
        }
        for deg in 1..=needed {
            let big = scan_field(e, deg)?;
            let size = big.size().expect("finite base field");
            if size.pow(n as u32) > num_bigint::BigUint::from(POINT_SCAN_CAP) {
                return Err(Error::TooLargeForExhaustion {
                    at: AT,
                    count: size.pow(n as u32).to_string(),
                    cap: POINT_SCAN_CAP,
                });
            }
            let elems = big.elements(POINT_SCAN_CAP)?;
            let mut idx = vec![0usize; n];
            'points: loop {
                let xi: Vec<FieldElem> = idx.iter().map(|&i| elems[i].clone()).collect();
                let mut advance = false;
                // Leave points defined over a proper subfield to the degree
                // that defines them.
                let mut skip = false;
                if deg > 1 {
                    for d in 1..deg {
                        if deg % d != 0 {
                            continue;
                        }
                        let mut inside = true;
                        for c in &xi {
                            if !big.in_subfield_of_top_degree(c, d as usize)? {
                                inside = false;
                                break;
                            }
                        }
                        if inside {
                            skip = true;
                            break;
                        }
                    }
                }
                if !skip {
                    let mut stacked: Vec<Vec<FieldElem>> = Vec::new();
                    for g in ideal.generators() {
                        let m = evaluate(alg, w, g, j, &big, &xi)?;
                        stacked.extend(m);
                    }
                    let kern = if stacked.is_empty() {
                        ExactMatrix::identity(&big, k).kernel_basis(&big)
                    } else {
                        ExactMatrix::from_rows(&big, stacked, k)?.kernel_basis(&big)
                    };
                    for v in kern {
                        let point = DirectionalPoint {
                            factor: j,
                            field: big.clone(),
                            xi: xi.clone(),
                            v,
                        };
                        collected.push(directional_ideal(alg, w, &point, n)?);
                    }
                }
                let mut l = 0;
                loop {
                    if l == n {
                        advance = true;
                        break;
                    }
                    idx[l] += 1;
                    if idx[l] < elems.len() {
                        break;
                    }
                    idx[l] = 0;
                    l += 1;
                }
                if advance {
                    break 'points;
                }
            }
        }
    }

    if collected.is_empty() {
        return generate(alg, n, &[AlgPoly::one(alg, n)]);
    }
    let mut acc = collected[0].backing().clone();
    for other in &collected[1..] {
        acc = intersect_submodules(f, &acc, other.backing())?;
    }
    let gens: Vec<AlgPoly> = acc
        .basis()
        .expect("intersection comes completed")
        .iter()
        .map(|v| AlgPoly::from_modvector(alg, v))
        .collect();
    generate(alg, n, &gens)
}
