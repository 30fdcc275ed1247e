//! Dense exact matrices over an [`ExtField`](super::ExtField).
//!
//! Everything downstream leans on these: reduced row echelon form with a
//! deterministic pivot rule, kernels with a canonical basis, solving, and
//! row-space intersection. Matrices are plain data; the owning field is
//! passed to each operation.

use super::{ExtField, FieldElem};
use crate::error::{Error, Result};

/// A dense `rows x cols` matrix in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl ExactMatrix {
    /// All-zero matrix.
    pub fn zeros(f: &ExtField, rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![f.zero(); rows * cols] }
    }

    /// Identity matrix.
    pub fn identity(f: &ExtField, n: usize) -> Self {
        let mut m = Self::zeros(f, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = f.one();
        }
        m
    }

    /// Build from rows; all rows must have equal length.
    pub fn from_rows(f: &ExtField, rows: Vec<Vec<FieldElem>>, cols_hint: usize) -> Result<Self> {
        const AT: &str = "field::linalg::from_rows";
        let cols = rows.first().map(Vec::len).unwrap_or(cols_hint);
        let mut data = Vec::with_capacity(rows.len() * cols);
        let nrows = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    at: AT,
                    why: format!("ragged rows: {} vs {}", r.len(), cols),
                });
            }
            data.extend(r);
        }
        let _ = f;
        Ok(ExactMatrix { rows: nrows, cols, data })
    }

    /// Number of rows.
    pub fn nrows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Entry accessor.
    pub fn at(&self, i: usize, j: usize) -> &FieldElem {
        &self.data[i * self.cols + j]
    }

    /// Mutable entry accessor.
    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut FieldElem {
        &mut self.data[i * self.cols + j]
    }

    /// A row as a vector.
    pub fn row(&self, i: usize) -> Vec<FieldElem> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    /// All rows.
    pub fn rows_vec(&self) -> Vec<Vec<FieldElem>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    /// Transpose.
    pub fn transpose(&self, f: &ExtField) -> Self {
        let mut t = Self::zeros(f, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.at_mut(j, i) = self.at(i, j).clone();
            }
        }
        t
    }

    /// Matrix product.
    pub fn mul(&self, f: &ExtField, other: &Self) -> Result<Self> {
        const AT: &str = "field::linalg::mul";
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                at: AT,
                why: format!("{}x{} times {}x{}", self.rows, self.cols, other.rows, other.cols),
            });
        }
        let mut out = Self::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let t = f.mul(a, b);
                    let cur = out.at(i, j).clone();
                    *out.at_mut(i, j) = f.add(&cur, &t);
                }
            }
        }
        Ok(out)
    }

    /// Apply to a column vector.
    pub fn apply(&self, f: &ExtField, v: &[FieldElem]) -> Result<Vec<FieldElem>> {
        const AT: &str = "field::linalg::apply";
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                at: AT,
                why: format!("matrix has {} columns, vector has {}", self.cols, v.len()),
            });
        }
        let mut out = vec![f.zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if a.is_zero() || v[j].is_zero() {
                    continue;
                }
                let t = f.mul(a, &v[j]);
                out[i] = f.add(&out[i], &t);
            }
        }
        Ok(out)
    }

    /// Stack vertically.
    pub fn vstack(&self, f: &ExtField, other: &Self) -> Result<Self> {
        const AT: &str = "field::linalg::vstack";
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                at: AT,
                why: format!("column counts {} vs {}", self.cols, other.cols),
            });
        }
        let _ = f;
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(ExactMatrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    /// Stack horizontally.
    pub fn hstack(&self, f: &ExtField, other: &Self) -> Result<Self> {
        const AT: &str = "field::linalg::hstack";
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                at: AT,
                why: format!("row counts {} vs {}", self.rows, other.rows),
            });
        }
        let mut out = Self::zeros(f, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *out.at_mut(i, j) = self.at(i, j).clone();
            }
            for j in 0..other.cols {
                *out.at_mut(i, self.cols + j) = other.at(i, j).clone();
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form and the pivot columns. The pivot rule is
    /// deterministic: first nonzero entry scanning rows top-down per column.
    pub fn rref(&self, f: &ExtField) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = f.inv(m.at(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = f.mul(m.at(r, j), &inv);
                *m.at_mut(r, j) = v;
            }
            for i in 0..m.rows {
                if i == r || m.at(i, c).is_zero() {
                    continue;
                }
                let factor = m.at(i, c).clone();
                for j in c..m.cols {
                    let t = f.mul(&factor, m.at(r, j));
                    let cur = m.at(i, j).clone();
                    *m.at_mut(i, j) = f.sub(&cur, &t);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Rank.
    pub fn rank(&self, f: &ExtField) -> usize {
        self.rref(f).1.len()
    }

    /// Canonical basis of the right kernel, ordered by free column.
    pub fn kernel_basis(&self, f: &ExtField) -> Vec<Vec<FieldElem>> {
        let (r, pivots) = self.rref(f);
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (row_idx, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.at(row_idx, free));
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `self * x = b`, or `None` when inconsistent.
    pub fn solve(&self, f: &ExtField, b: &[FieldElem]) -> Result<Option<Vec<FieldElem>>> {
        const AT: &str = "field::linalg::solve";
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                at: AT,
                why: format!("matrix has {} rows, rhs has {}", self.rows, b.len()),
            });
        }
        let rhs = ExactMatrix { rows: self.rows, cols: 1, data: b.to_vec() };
        let aug = self.hstack(f, &rhs)?;
        let (r, pivots) = aug.rref(f);
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![f.zero(); self.cols];
        for (row_idx, &pc) in pivots.iter().enumerate() {
            x[pc] = r.at(row_idx, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Canonical basis of the row space: the nonzero rows of the reduced
    /// echelon form.
    pub fn row_space_basis(&self, f: &ExtField) -> Vec<Vec<FieldElem>> {
        let (r, pivots) = self.rref(f);
        (0..pivots.len()).map(|i| r.row(i)).collect()
    }

    /// True if `v` lies in the row space.
    pub fn row_space_contains(&self, f: &ExtField, v: &[FieldElem]) -> Result<bool> {
        let t = self.transpose(f);
        Ok(t.solve(f, v)?.is_some())
    }

    /// True if the row spaces coincide; both operands must have equal widths.
    pub fn row_space_eq(&self, f: &ExtField, other: &Self) -> Result<bool> {
        const AT: &str = "field::linalg::row_space_eq";
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                at: AT,
                why: format!("column counts {} vs {}", self.cols, other.cols),
            });
        }
        Ok(self.row_space_basis(f) == other.row_space_basis(f))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// Intersect row spaces of matrices of equal width. A vector lies in
/// `rowspace(A) ∩ rowspace(B)` exactly when it is `x^T A` for some `(x, y)`
/// in the kernel of the stacked transposes `[A^T | -B^T]`.
pub fn intersect_rowspaces(f: &ExtField, mats: &[ExactMatrix]) -> Result<ExactMatrix> {
    const AT: &str = "field::linalg::intersect_rowspaces";
    let Some(first) = mats.first() else {
        return Err(Error::DimensionMismatch { at: AT, why: "no matrices given".into() });
    };
    let cols = first.ncols();
    let mut acc = first.clone();
    for m in &mats[1..] {
        if m.ncols() != cols {
            return Err(Error::DimensionMismatch {
                at: AT,
                why: format!("column counts {} vs {}", m.ncols(), cols),
            });
        }
        let at_ = acc.transpose(f);
        let mut bt = m.transpose(f);
        for i in 0..bt.nrows() {
            for j in 0..bt.ncols() {
                let v = f.neg(bt.at(i, j));
                *bt.at_mut(i, j) = v;
            }
        }
        let stacked = at_.hstack(f, &bt)?;
        let kernel = stacked.kernel_basis(f);
        let mut rows = Vec::new();
        for k in kernel {
            let x = &k[..acc.nrows()];
            let mut v = vec![f.zero(); cols];
            for (ri, coeff) in x.iter().enumerate() {
                if coeff.is_zero() {
                    continue;
                }
                for j in 0..cols {
                    let t = f.mul(coeff, acc.at(ri, j));
                    v[j] = f.add(&v[j], &t);
                }
            }
            rows.push(v);
        }
        let cand = ExactMatrix::from_rows(f, rows, cols)?;
        let basis = cand.row_space_basis(f);
        acc = ExactMatrix::from_rows(f, basis, cols)?;
    }
    let basis = acc.row_space_basis(f);
    ExactMatrix::from_rows(f, basis, cols)
}
