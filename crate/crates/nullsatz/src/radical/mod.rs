//! Radicals of left ideals in polynomial rings over a finite-dimensional
//! algebra, computed two independent ways. The structural pipeline adjoins
//! the coefficient radical, splits the semisimple quotient into matrix
//! factors, reduces each factor to a row submodule over its center, and
//! intersects the point conditions by exact linear algebra in the finite
//! quotient. The geometric oracle instead scans evaluation points degree by
//! degree, collects every directional ideal containing the input, and
//! intersects them outright. The two answers must agree; their comparison is
//! the main consistency check of the crate.
//!
//! The module also carries the center correspondence for split matrix
//! algebras, a finite-codimension test for left ideals, and a rational
//! demonstration that a directional ideal of finite codimension need not be
//! maximal.

mod azumaya;
mod codim;
mod demo;
mod oracle;
mod pipeline;

pub use azumaya::{center_ideal_from_matrix, matrix_ideal_from_center, quotient_by_two_sided};
pub use codim::finite_codim_check;
pub use demo::{nonmaximal_directional_demo, NonmaximalDemo};
pub use oracle::geometric_oracle;
pub use pipeline::{factor_rows, rad_pipeline, rows_to_generators};

use crate::leftideal::{DirectionalPoint, LeftIdeal};
use crate::polymod::Submodule;

/// A row submodule attached to one simple factor of the coefficient algebra.
#[derive(Debug, Clone)]
pub struct FactorIdeal {
    /// Index of the simple factor in the Wedderburn decomposition.
    pub factor: usize,
    /// Submodule of rank `k` over the factor center.
    pub rows: Submodule,
}

/// The outcome of the structural radical computation.
#[derive(Debug, Clone)]
pub struct RadicalResult {
    /// The ideal the computation started from.
    pub input: LeftIdeal,
    /// The radical, with a reduced canonical basis.
    pub output: LeftIdeal,
    /// Directional points whose ideals intersect exactly to the radical.
    pub certificate: Vec<DirectionalPoint>,
    /// The row submodule of each simple factor before interception.
    pub factor_rows: Vec<FactorIdeal>,
    /// The row submodule of each simple factor after interception.
    pub factor_radicals: Vec<FactorIdeal>,
}
