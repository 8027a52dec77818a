//! Picard lattices of the supported base geometries.
//!
//! The certifier works entirely inside the Néron–Severi lattice of a fixed
//! catalogue of bases: projective spaces, products of projective spaces, and
//! blow-ups of the plane in up to three general points.  A divisor class is a
//! vector of exact rational coefficients over the standard basis; the
//! intersection product, the canonical class, and the extremal curve classes
//! that cut out the nef cone are all hard-coded per geometry, so nefness and
//! ampleness are decided by exact sign checks with no numerical step.

mod curves;
mod divisor;
mod geometry;

pub use curves::{CurveClass, CurveClassSet};
pub use divisor::DivisorClass;
pub use geometry::{GeometryKind, GeometryModel};

use thiserror::Error;

/// Errors surfaced by lattice arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    /// A requested geometry lies outside the supported catalogue.
    #[error("unsupported geometry: {0}")]
    InvalidGeometry(String),
    /// Two classes (or a class and a geometry) live on different bases.
    #[error("geometry mismatch: expected {expected}, found {found}")]
    GeometryMismatch { expected: String, found: String },
    /// A coefficient vector has the wrong length for its geometry.
    #[error("rank mismatch: geometry has Picard rank {expected}, got {found} coefficients")]
    RankMismatch { expected: usize, found: usize },
    /// An intersection product received the wrong number of factors.
    #[error("intersection number needs exactly {expected} classes (the dimension), got {found}")]
    ArityMismatch { expected: usize, found: usize },
}
