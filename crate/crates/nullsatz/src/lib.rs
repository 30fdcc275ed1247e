//! Exact computation with one-sided polynomial ideals over finite-dimensional
//! algebras.
//!
//! The crate builds up in layers. [`field`] provides exact arithmetic in small
//! field towers together with dense linear algebra and univariate polynomial
//! factorization. [`findim`] models a finite-dimensional associative algebra by
//! structure constants and computes its radical and Wedderburn decomposition.
//! [`polymod`] supplies Groebner bases for submodules of free modules over a
//! commutative polynomial ring, and [`leftideal`] builds on both to represent
//! left ideals of a polynomial ring with algebra coefficients. The [`radical`]
//! module ties the layers together: it computes the intersection of all maximal
//! left ideals containing a given left ideal, with point certificates, and
//! checks the result against a brute-force geometric oracle. [`weyl`] is a
//! standalone exact model of the first Weyl algebra used to certify that the
//! finite-dimensional picture genuinely fails in infinite dimension.
//!
//! The `nullsatz` binary exposes the main entry points as subcommands; see the
//! book under `book/` for worked examples.

pub mod cli;
pub mod error;
pub mod field;
pub mod findim;
pub mod leftideal;
pub mod polymod;
pub mod radical;
pub mod weyl;

pub use error::{Error, Result};
