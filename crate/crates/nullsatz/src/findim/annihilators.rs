//! Colon ideals, annihilators, and the double-annihilator comparison.
//!
//! For a left ideal I of A the colon ideal [I : A] = {x : x A is contained
//! in I} is the largest two-sided ideal inside I. The annihilator of I is
//! {b : I b lies in [I : A]}, and the double annihilator is the set of a
//! with a I-ann inside [I : A]. The double annihilator always contains I;
//! the comparison reports a witness element when the containment is strict.
//! All three are kernels of stacked linear conditions.

use super::{AlgElem, FinDimAlgebra, LeftIdealFD};
use crate::error::{Error, Result};
use crate::field::ExactMatrix;

/// Rows of `mats` stacked into one matrix; `None` when the list is empty or
/// every matrix has no rows.
fn stack_rows(
    a: &FinDimAlgebra,
    mats: impl IntoIterator<Item = ExactMatrix>,
) -> Option<ExactMatrix> {
    let f = a.field();
    let mut rows: Vec<Vec<_>> = Vec::new();
    for m in mats {
        rows.extend(m.rows_vec());
    }
    if rows.is_empty() {
        return None;
    }
    Some(ExactMatrix::from_rows(f, rows, a.dim()).expect("uniform"))
}

/// Canonical kernel of the stacked conditions, or all of A when there are no
/// conditions at all.
fn kernel_or_full(a: &FinDimAlgebra, stacked: Option<ExactMatrix>) -> Vec<AlgElem> {
    let f = a.field();
    match stacked {
        Some(m) => m.kernel_basis(f),
        None => (0..a.dim()).map(|i| a.basis_elem(i)).collect(),
    }
}

/// The colon ideal [I : A] = {x : x A inside I}, as a canonical basis.
pub fn ideal_quotient(a: &FinDimAlgebra, ideal: &LeftIdealFD) -> Result<Vec<AlgElem>> {
    let f = a.field();
    let n = ideal.annihilator_matrix(a);
    let stacked = stack_rows(
        a,
        (0..a.dim()).map(|j| {
            let r = a.right_mult_matrix(&a.basis_elem(j));
            n.mul(f, &r).expect("shapes")
        }),
    );
    Ok(kernel_or_full(a, stacked))
}

/// The annihilator of I relative to its colon ideal: {b : I b inside [I : A]}.
pub fn perp(a: &FinDimAlgebra, ideal: &LeftIdealFD) -> Result<Vec<AlgElem>> {
    let f = a.field();
    let colon = ideal_quotient(a, ideal)?;
    let n_colon = annihilator_rows(a, &colon);
    let stacked = stack_rows(
        a,
        ideal.basis().iter().map(|v| {
            let l = a.left_mult_matrix(v);
            n_colon.mul(f, &l).expect("shapes")
        }),
    );
    Ok(kernel_or_full(a, stacked))
}

/// Functional rows vanishing exactly on the span of `space`.
fn annihilator_rows(a: &FinDimAlgebra, space: &[AlgElem]) -> ExactMatrix {
    let f = a.field();
    if space.is_empty() {
        return ExactMatrix::identity(f, a.dim());
    }
    let m = ExactMatrix::from_rows(f, space.to_vec(), a.dim()).expect("uniform");
    let kernel = m.kernel_basis(f);
    if kernel.is_empty() {
        ExactMatrix::zeros(f, 0, a.dim())
    } else {
        ExactMatrix::from_rows(f, kernel, a.dim()).expect("uniform")
    }
}

/// Outcome of the double-annihilator comparison for one left ideal.
#[derive(Debug, Clone)]
pub struct DoubleAnnihilatorReport {
    /// Canonical basis of [I : A].
    pub colon: Vec<AlgElem>,
    /// Canonical basis of the annihilator of I.
    pub annihilator: Vec<AlgElem>,
    /// Canonical basis of the double annihilator.
    pub double: Vec<AlgElem>,
    /// Whether the double annihilator equals I.
    pub equal: bool,
    /// An element of the double annihilator outside I when not equal.
    pub witness: Option<AlgElem>,
}

/// Compute [I : A], the annihilator, and the double annihilator
/// {x : x b inside [I : A] for all b in the annihilator}, and compare the
/// double annihilator with I. The double annihilator always contains I; a
/// strict containment is reported with a witness.
pub fn double_annihilator_check(
    a: &FinDimAlgebra,
    ideal: &LeftIdealFD,
) -> Result<DoubleAnnihilatorReport> {
    const AT: &str = "findim::annihilators::double_annihilator_check";
    let f = a.field();
    let colon = ideal_quotient(a, ideal)?;
    let ann = perp(a, ideal)?;
    let n_colon = annihilator_rows(a, &colon);
    let stacked = stack_rows(
        a,
        ann.iter().map(|b| {
            let r = a.right_mult_matrix(b);
            n_colon.mul(f, &r).expect("shapes")
        }),
    );
    let double = kernel_or_full(a, stacked);

    for v in ideal.basis() {
        let in_double = if double.is_empty() {
            a.is_zero_elem(v)
        } else {
            ExactMatrix::from_rows(f, double.clone(), a.dim())
                .expect("uniform")
                .row_space_contains(f, v)
                .expect("width")
        };
        if !in_double {
            return Err(Error::InternalInconsistency {
                at: AT,
                why: "the double annihilator fails to contain the ideal".into(),
            });
        }
    }
    let equal = double.len() == ideal.dim();
    let witness = if equal {
        None
    } else {
        double.iter().find(|v| !ideal.contains(a, v)).cloned()
    };
    if !equal && witness.is_none() {
        return Err(Error::InternalInconsistency {
            at: AT,
            why: "dimension gap without a witness vector".into(),
        });
    }
    Ok(DoubleAnnihilatorReport { colon, annihilator: ann, double, equal, witness })
}
