//! Crate-wide error type.
//!
//! Every fallible operation reports which operation raised the error and why.
//! Errors split into three behavioural classes, which the command-line front
//! end maps to exit codes: bad input (exit 2), a regime the exact algorithms
//! refuse to enter (exit 3), and internal consistency failures (exit 1).

use thiserror::Error;

/// Everything that can go wrong in this crate.
///
/// The `at` field of the variants that carry one names the operation that
/// raised the error, e.g. `"findim::radical"`.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// A polynomial offered as a modulus has a nontrivial factor.
    #[error("{at}: polynomial is not irreducible: {why}")]
    NotIrreducible { at: &'static str, why: String },

    /// A modulus must be monic.
    #[error("{at}: polynomial is not monic")]
    NotMonic { at: &'static str },

    /// Vector or matrix shapes do not line up.
    #[error("{at}: dimension mismatch: {why}")]
    DimensionMismatch { at: &'static str, why: String },

    /// Operands live over different fields or different algebras.
    #[error("{at}: operands belong to different parents: {why}")]
    MixedParents { at: &'static str, why: String },

    /// The request is outside the supported regime (tower height, degree
    /// caps, infinite enumerations, and similar).
    #[error("{at}: not supported: {why}")]
    NotSupported { at: &'static str, why: String },

    /// Radical computation needs characteristic 0, characteristic larger
    /// than the algebra dimension, or an algebra small enough to exhaust.
    #[error("{at}: characteristic {p} is too small for dimension {dim} and the algebra is too large to exhaust")]
    SmallCharacteristic { at: &'static str, p: u64, dim: usize },

    /// A simple factor is a division algebra over its center, so no matrix
    /// splitting exists over that center.
    #[error("{at}: factor is a division algebra over its center; no matrix splitting exists: {why}")]
    NotSplit { at: &'static str, why: String },

    /// The dual-basis preimage system has no solution.
    #[error("{at}: the multiplication-map preimage system is unsolvable: {why}")]
    NotAzumaya { at: &'static str, why: String },

    /// An exhaustive check was requested over a set too large to enumerate.
    #[error("{at}: enumeration of {count} candidates exceeds the cap {cap}")]
    TooLargeForExhaustion { at: &'static str, count: String, cap: u64 },

    /// The module offered as simple is not.
    #[error("{at}: the given action does not define a simple module: {why}")]
    NotSimpleModule { at: &'static str, why: String },

    /// Directional points need a nonzero direction vector.
    #[error("{at}: direction vector is zero")]
    ZeroVector { at: &'static str },

    /// A Groebner run exceeded the configured total-degree budget.
    #[error("{at}: degree budget {budget} exceeded during basis completion")]
    DegreeBudgetExceeded { at: &'static str, budget: u32 },

    /// The quotient is infinite-dimensional where a finite one is required.
    #[error("{at}: quotient is not finite-dimensional: {why}")]
    NotZeroDimensional { at: &'static str, why: String },

    /// Point enumeration over an infinite base field was requested.
    #[error("{at}: point enumeration requires a finite base field")]
    InfiniteBaseField { at: &'static str },

    /// A vector has the wrong number of components for its module.
    #[error("{at}: rank mismatch: expected {expected}, got {got}")]
    RankMismatch { at: &'static str, expected: usize, got: usize },

    /// A Wedderburn factor index is out of range.
    #[error("{at}: factor index {index} out of range for {count} factors")]
    FactorIndexOutOfRange { at: &'static str, index: usize, count: usize },

    /// A morphism offered as surjective is not.
    #[error("{at}: the map is not surjective: {why}")]
    NotSurjective { at: &'static str, why: String },

    /// A variety point of extension degree beyond the offered bound exists.
    #[error("{at}: a point of degree {found} exceeds the degree cap {cap}")]
    DegreeBoundTooSmall { at: &'static str, found: u32, cap: u32 },

    /// A proper ideal admitted no directional point; this indicates a bug,
    /// never expected input.
    #[error("{at}: internal inconsistency: {why}")]
    InternalInconsistency { at: &'static str, why: String },

    /// Text input failed to parse; `offset` is the byte offset of the
    /// offending character.
    #[error("parse error at offset {offset}: {why}")]
    Parse { offset: usize, why: String },

    /// Reading or writing a file failed.
    #[error("io error on {path}: {why}")]
    Io { path: String, why: String },
}

impl Error {
    /// Exit code for the command-line front end.
    ///
    /// 1 internal/mathematical failure, 2 bad input, 3 unsupported regime.
    pub fn exit_code(&self) -> i32 {
        use Error::*;
        match self {
            Parse { .. } | Io { .. } | NotIrreducible { .. } | NotMonic { .. }
            | DimensionMismatch { .. } | MixedParents { .. } | RankMismatch { .. }
            | FactorIndexOutOfRange { .. } | NotSurjective { .. } | ZeroVector { .. }
            | NotSimpleModule { .. } => 2,
            NotSupported { .. } | SmallCharacteristic { .. } | NotSplit { .. }
            | NotAzumaya { .. } | TooLargeForExhaustion { .. } | DegreeBudgetExceeded { .. }
            | NotZeroDimensional { .. } | InfiniteBaseField { .. }
            | DegreeBoundTooSmall { .. } => 3,
            InternalInconsistency { .. } => 1,
        }
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
