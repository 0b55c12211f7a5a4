use thiserror::Error;

use crate::hyper::Zone;
use crate::parabolic::SubgroupTag;

/// Errors raised by the planar algebra, matrix, and representation layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zone mismatch: {left:?} vs {right:?}")]
    ZoneMismatch { left: Zone, right: Zone },

    #[error("subgroup tag mismatch: {left:?} vs {right:?}")]
    TagMismatch {
        left: SubgroupTag,
        right: SubgroupTag,
    },

    /// `u² − σv² = 0`: the element has no inverse in its algebra.
    #[error("zero divisor has no inverse")]
    ZeroDivisor,

    #[error("division by zero")]
    DivisionByZero,

    /// A transcendental value was requested from the exact backend.
    #[error("operation requires the float backend: {0}")]
    BackendMismatch(&'static str),

    #[error("determinant is not 1")]
    NotUnimodular,

    #[error("both homogeneous components vanish")]
    DegenerateMap,

    /// The result lies at infinity and has no representation here.
    #[error("result is an ideal point")]
    IdealPoint,

    #[error("parabolic norm undefined (v = -1 with finite u)")]
    NormUndefined,

    #[error("scalar multiplication by zero is undefined for N'")]
    ZeroScale,

    #[error("inconsistent argument/norm pair for an ideal point")]
    InconsistentIdeal,

    #[error("fractional power of a non-positive norm")]
    NegativeNormPower,

    #[error("no principal branch for this fractional power")]
    BranchUndefined,

    #[error("argument outside the domain: {0}")]
    OutOfDomain(&'static str),

    #[error("matrix does not decompose through the subgroup")]
    NoDecomposition,

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
