//! Exact covariograms, lattice tilings `M = L ⊕ T` with lattice-convex tiles,
//! thin-direction sets `W(T, L)`, and the planar tile classification search.
//!
//! All arithmetic is over arbitrary-precision rationals.

pub mod classify2d;
pub mod constructions;
pub mod json;
pub mod lattice;
pub mod linalg;
pub mod pointset;
pub mod polytope;
pub mod tiling;

pub use lattice::Lattice;
pub use linalg::{frac, int, Matrix, Rational, Vector};
pub use pointset::{Covariogram, PointSet};
pub use polytope::Polytope;
pub use tiling::Tiling;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("not a sublattice: {0} is not in the ambient lattice")]
    NotASublattice(Vector),
    #[error("zero vector")]
    ZeroVector,
    #[error("{0} is not in the lattice")]
    NotInLattice(Vector),
    #[error("polytope is not full-dimensional")]
    LowerDimensional,
    #[error("origin is not an interior point")]
    OriginNotInterior,
    #[error("empty point set")]
    EmptySet,
    #[error("sum is not direct: {0} has two decompositions")]
    NotDirect(Vector),
    #[error("difference vectors do not span the ambient space")]
    DegenerateDifferences,
    #[error("set is not lattice-convex: {0} lies in the hull but not in the set")]
    NotLatticeConvex(Vector),
    #[error("not a tiling: {0}")]
    NotATiling(String),
    #[error("tile is not full-dimensional")]
    LowerDimensionalTile,
    #[error("tiling has not been verified")]
    UnverifiedTiling,
    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),
    #[error("invalid S: {0}")]
    InvalidS(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("invalid base tiling: {0}")]
    InvalidBase(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}
