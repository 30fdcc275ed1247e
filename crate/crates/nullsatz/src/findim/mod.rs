//! Finite-dimensional associative algebras given by structure constants.
//!
//! An algebra is a field, a dimension, a multiplication table on a fixed
//! basis, and the unit's coordinates. Everything else in the crate treats
//! elements as coordinate vectors and multiplies through the table. The
//! submodules compute the radical, the Wedderburn decomposition with explicit
//! matrix splittings, dual-basis data, annihilator-style ideal operations,
//! and the prime/semiprime predicates.

mod annihilators;
mod dualbasis;
mod predicates;
pub mod presets;
mod radical;
mod wedderburn;

pub use annihilators::{
    double_annihilator_check, ideal_quotient, perp, DoubleAnnihilatorReport,
};
pub use dualbasis::{xi_preimage, DualBasisData, DualPair};
pub use predicates::{
    ann_maximal_check, is_prime_left, is_prime_submodule, is_semiprime_left,
    is_semiprime_submodule, CommutativeModule, Verdict, EXHAUSTION_CAP, SAMPLE_COUNT,
};
pub use radical::{charpoly, radical};
pub use wedderburn::{
    center_basis, wedderburn, wedderburn_seeded, CenterMatrix, SimpleFactor, WedderburnData,
};

use crate::error::{Error, Result};
use crate::field::{ExactMatrix, ExtField, FieldElem};
use rand::Rng;

/// Coordinates of an algebra element in the structure-constant basis.
pub type AlgElem = Vec<FieldElem>;

/// A finite-dimensional associative unital algebra over an [`ExtField`].
#[derive(Debug, Clone)]
pub struct FinDimAlgebra {
    field: ExtField,
    dim: usize,
    /// `structure[i][j]` holds the coordinates of `b_i * b_j`.
    structure: Vec<Vec<AlgElem>>,
    unit: AlgElem,
    /// Printable basis names, `b1..bd` unless a preset supplies better ones.
    names: Vec<String>,
}

impl FinDimAlgebra {
    /// Build an algebra, checking associativity on all basis triples and the
    /// unit law on all basis elements.
    pub fn new(
        field: ExtField,
        structure: Vec<Vec<AlgElem>>,
        unit: AlgElem,
        names: Option<Vec<String>>,
    ) -> Result<Self> {
        const AT: &str = "findim::new";
        let dim = structure.len();
        if dim == 0 {
            return Err(Error::DimensionMismatch { at: AT, why: "dimension must be positive".into() });
        }
        let shape_ok = structure.iter().all(|row| row.len() == dim && row.iter().all(|v| v.len() == dim));
        if !shape_ok || unit.len() != dim {
            return Err(Error::DimensionMismatch {
                at: AT,
                why: format!("structure constants must form a {dim}x{dim} table of length-{dim} vectors"),
            });
        }
        let names = match names {
            Some(ns) => {
                if ns.len() != dim {
                    return Err(Error::DimensionMismatch {
                        at: AT,
                        why: format!("{} basis names for dimension {dim}", ns.len()),
                    });
                }
                ns
            }
            None => (1..=dim).map(|i| format!("b{i}")).collect(),
        };
        let a = FinDimAlgebra { field, dim, structure, unit, names };
        for i in 0..dim {
            for j in 0..dim {
                let ij = a.structure[i][j].clone();
                for k in 0..dim {
                    let left = a.mul(&ij, &a.basis_elem(k));
                    let right = a.mul(&a.basis_elem(i), &a.structure[j][k].clone());
                    if left != right {
                        return Err(Error::NotSupported {
                            at: AT,
                            why: format!(
                                "structure constants are not associative at basis triple ({i},{j},{k})"
                            ),
                        });
                    }
                }
            }
        }
        for i in 0..dim {
            let b = a.basis_elem(i);
            if a.mul(&a.unit.clone(), &b) != b || a.mul(&b, &a.unit.clone()) != b {
                return Err(Error::NotSupported {
                    at: AT,
                    why: format!("stored unit fails the unit law on basis element {i}"),
                });
            }
        }
        Ok(a)
    }

    /// The scalar field.
    pub fn field(&self) -> &ExtField {
        &self.field
    }

    /// Dimension over the field.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Basis names.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Coordinates of the unit.
    pub fn unit(&self) -> AlgElem {
        self.unit.clone()
    }

    /// Structure-constant table entry `b_i * b_j`.
    pub fn table(&self, i: usize, j: usize) -> &AlgElem {
        &self.structure[i][j]
    }

    /// The i-th basis vector.
    pub fn basis_elem(&self, i: usize) -> AlgElem {
        let mut v = self.zero();
        v[i] = self.field.one();
        v
    }

    /// The zero element.
    pub fn zero(&self) -> AlgElem {
        vec![self.field.zero(); self.dim]
    }

    /// Scalar embedding `n * 1`.
    pub fn from_int(&self, n: i64) -> AlgElem {
        self.scale(&self.field.from_int(n), &self.unit.clone())
    }

    pub fn add(&self, a: &AlgElem, b: &AlgElem) -> AlgElem {
        a.iter().zip(b).map(|(x, y)| self.field.add(x, y)).collect()
    }

    pub fn sub(&self, a: &AlgElem, b: &AlgElem) -> AlgElem {
        a.iter().zip(b).map(|(x, y)| self.field.sub(x, y)).collect()
    }

    pub fn neg(&self, a: &AlgElem) -> AlgElem {
        a.iter().map(|x| self.field.neg(x)).collect()
    }

    pub fn scale(&self, c: &FieldElem, a: &AlgElem) -> AlgElem {
        a.iter().map(|x| self.field.mul(c, x)).collect()
    }

    /// Product through the structure constants.
    pub fn mul(&self, a: &AlgElem, b: &AlgElem) -> AlgElem {
        let mut out = self.zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let c = self.field.mul(ai, bj);
                for (k, s) in self.structure[i][j].iter().enumerate() {
                    if s.is_zero() {
                        continue;
                    }
                    let t = self.field.mul(&c, s);
                    out[k] = self.field.add(&out[k], &t);
                }
            }
        }
        out
    }

    pub fn is_zero_elem(&self, a: &AlgElem) -> bool {
        a.iter().all(FieldElem::is_zero)
    }

    /// Power by repeated multiplication.
    pub fn pow(&self, a: &AlgElem, e: usize) -> AlgElem {
        let mut acc = self.unit();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Matrix of left multiplication: `L_a * coords(x) = coords(a * x)`.
    pub fn left_mult_matrix(&self, a: &AlgElem) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(&self.field, self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul(a, &self.basis_elem(j));
            for (i, v) in col.into_iter().enumerate() {
                *m.at_mut(i, j) = v;
            }
        }
        m
    }

    /// Matrix of right multiplication: `R_a * coords(x) = coords(x * a)`.
    pub fn right_mult_matrix(&self, a: &AlgElem) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(&self.field, self.dim, self.dim);
        for j in 0..self.dim {
            let col = self.mul(&self.basis_elem(j), a);
            for (i, v) in col.into_iter().enumerate() {
                *m.at_mut(i, j) = v;
            }
        }
        m
    }

    /// Trace of left multiplication by `a`.
    pub fn trace_left(&self, a: &AlgElem) -> FieldElem {
        let mut t = self.field.zero();
        for j in 0..self.dim {
            let col = self.mul(a, &self.basis_elem(j));
            t = self.field.add(&t, &col[j]);
        }
        t
    }

    /// Monic minimal polynomial of `a`, little-endian coefficients.
    pub fn min_poly(&self, a: &AlgElem) -> crate::field::UniPoly {
        // Powers of a until they become linearly dependent.
        let mut powers: Vec<AlgElem> = vec![self.unit()];
        loop {
            let rows = powers.clone();
            let m = ExactMatrix::from_rows(&self.field, rows, self.dim).expect("equal lengths");
            if m.rank(&self.field) < powers.len() {
                // The last power is a combination of the earlier ones.
                let prev = ExactMatrix::from_rows(
                    &self.field,
                    powers[..powers.len() - 1].to_vec(),
                    self.dim,
                )
                .expect("equal lengths");
                let target = powers.last().unwrap().clone();
                let sol = prev
                    .transpose(&self.field)
                    .solve(&self.field, &target)
                    .expect("shape")
                    .expect("dependency implies solvability");
                let mut coeffs: Vec<FieldElem> = sol.iter().map(|c| self.field.neg(c)).collect();
                coeffs.push(self.field.one());
                return coeffs;
            }
            let next = self.mul(powers.last().unwrap(), a);
            powers.push(next);
        }
    }

    /// Every element of the algebra, in coordinate odometer order. Errors out
    /// beyond `cap` elements.
    pub fn elements(&self, cap: u64) -> Result<Vec<AlgElem>> {
        const AT: &str = "findim::elements";
        let count = self.count_elements().ok_or(Error::InfiniteBaseField { at: AT })?;
        if count > cap as u128 {
            return Err(Error::TooLargeForExhaustion {
                at: AT,
                count: count.to_string(),
                cap,
            });
        }
        let scalars = self.field.elements(cap)?;
        let mut out = Vec::with_capacity(count as usize);
        let mut odometer = vec![0usize; self.dim];
        loop {
            out.push(odometer.iter().map(|&i| scalars[i].clone()).collect());
            let mut pos = 0;
            loop {
                if pos == self.dim {
                    return Ok(out);
                }
                odometer[pos] += 1;
                if odometer[pos] < scalars.len() {
                    break;
                }
                odometer[pos] = 0;
                pos += 1;
            }
        }
    }

    /// Number of elements when the field is finite.
    pub fn count_elements(&self) -> Option<u128> {
        let q = self.field.size()?;
        let total = q.pow(self.dim as u32);
        u128::try_from(&total).ok()
    }

    /// Uniform random element (small-integer coordinates over the rationals).
    pub fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> AlgElem {
        (0..self.dim).map(|_| self.field.random_elem(rng)).collect()
    }

    /// Render an element against the basis names.
    pub fn elem_to_string(&self, a: &AlgElem) -> String {
        let mut parts = Vec::new();
        for (i, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = self.field.elem_to_string(c);
            if cs == "1" {
                parts.push(self.names[i].clone());
            } else if cs.contains(['+', '-']) && !cs.starts_with('-') {
                parts.push(format!("({cs})*{}", self.names[i]));
            } else {
                parts.push(format!("{cs}*{}", self.names[i]));
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// A left ideal of a [`FinDimAlgebra`], stored as the canonical reduced
/// echelon basis of its underlying subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftIdealFD {
    basis: Vec<AlgElem>,
}

impl LeftIdealFD {
    /// The left ideal generated by the given elements: the span of all
    /// `b_i * g`, which is automatically closed under left multiplication.
    pub fn from_generators(a: &FinDimAlgebra, gens: &[AlgElem]) -> Self {
        let mut rows = Vec::new();
        for g in gens {
            for i in 0..a.dim() {
                rows.push(a.mul(&a.basis_elem(i), g));
            }
        }
        Self::from_span(a, rows)
    }

    /// The left ideal spanned as a subspace by the given vectors; errors if
    /// the span is not closed under left multiplication.
    pub fn from_subspace(a: &FinDimAlgebra, vectors: Vec<AlgElem>) -> Result<Self> {
        const AT: &str = "findim::LeftIdealFD::from_subspace";
        let ideal = Self::from_span(a, vectors);
        for v in &ideal.basis {
            for i in 0..a.dim() {
                if !ideal.contains(a, &a.mul(&a.basis_elem(i), v)) {
                    return Err(Error::NotSupported {
                        at: AT,
                        why: "subspace is not closed under left multiplication".into(),
                    });
                }
            }
        }
        Ok(ideal)
    }

    fn from_span(a: &FinDimAlgebra, rows: Vec<AlgElem>) -> Self {
        if rows.is_empty() {
            return LeftIdealFD { basis: Vec::new() };
        }
        let m = ExactMatrix::from_rows(a.field(), rows, a.dim()).expect("uniform length");
        LeftIdealFD { basis: m.row_space_basis(a.field()) }
    }

    /// Canonical subspace basis (reduced echelon rows).
    pub fn basis(&self) -> &[AlgElem] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, a: &FinDimAlgebra, v: &AlgElem) -> bool {
        if self.basis.is_empty() {
            return a.is_zero_elem(v);
        }
        let m = ExactMatrix::from_rows(a.field(), self.basis.clone(), a.dim()).expect("uniform");
        m.row_space_contains(a.field(), v).expect("equal widths")
    }

    /// Is this the whole algebra?
    pub fn is_full(&self, a: &FinDimAlgebra) -> bool {
        self.dim() == a.dim()
    }

    /// Subspace sum.
    pub fn sum(&self, a: &FinDimAlgebra, other: &Self) -> Self {
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Self::from_span(a, rows)
    }

    /// Subspace intersection.
    pub fn intersect(&self, a: &FinDimAlgebra, other: &Self) -> Self {
        if self.basis.is_empty() || other.basis.is_empty() {
            return LeftIdealFD { basis: Vec::new() };
        }
        let m1 = ExactMatrix::from_rows(a.field(), self.basis.clone(), a.dim()).expect("uniform");
        let m2 = ExactMatrix::from_rows(a.field(), other.basis.clone(), a.dim()).expect("uniform");
        let inter = crate::field::intersect_rowspaces(a.field(), &[m1, m2]).expect("equal widths");
        LeftIdealFD { basis: inter.rows_vec() }
    }

    /// Constraint matrix: `v` lies in the subspace exactly when `N v = 0`.
    pub fn annihilator_matrix(&self, a: &FinDimAlgebra) -> ExactMatrix {
        if self.basis.is_empty() {
            return ExactMatrix::identity(a.field(), a.dim());
        }
        let m = ExactMatrix::from_rows(a.field(), self.basis.clone(), a.dim()).expect("uniform");
        let rows = m.kernel_basis(a.field());
        ExactMatrix::from_rows(a.field(), rows, a.dim()).expect("uniform")
    }
}

/// Span of products `u * v` over basis vectors of two subspaces.
pub(crate) fn subspace_product(
    a: &FinDimAlgebra,
    left: &[AlgElem],
    right: &[AlgElem],
) -> Vec<AlgElem> {
    let mut rows = Vec::new();
    for u in left {
        for v in right {
            rows.push(a.mul(u, v));
        }
    }
    if rows.is_empty() {
        return rows;
    }
    let m = ExactMatrix::from_rows(a.field(), rows, a.dim()).expect("uniform");
    m.row_space_basis(a.field())
}
