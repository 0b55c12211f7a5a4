//! Elliptic, parabolic and hyperbolic planar numbers, the parabolic rotation
//! algebra built from Möbius geometry, induced representations of SL(2,ℝ),
//! and a sampler for the level curves ("wheels") of the three geometries.
//!
//! Arithmetic is exact over rationals by default; see [`Scalar`].

pub mod error;
pub mod hyper;
pub mod induced;
pub mod matrix;
pub mod orbits;
pub mod parabolic;
pub mod scalar;

pub use error::{Error, Result};
pub use hyper::{HyperNumber, Zone};
pub use matrix::{
    cayley_conjugate, cayley_matrix, generator, moebius_apply, subgroup_element, Mat2H,
    MoebiusPoint, RealMat2, Subgroup, SL2,
};
pub use parabolic::{DualVec, LinCoord, SubgroupTag, TropicalMode};
pub use scalar::{Backend, ExtScalar, Scalar, EPSILON};
