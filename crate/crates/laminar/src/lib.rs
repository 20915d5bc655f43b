//! Laminations on the circle and groups of orientation-preserving circle
//! homeomorphisms, in exact arithmetic.
//!
//! The crate provides two coordinate models for the circle (rational
//! angles, and the projective line with quadratic surds), finite
//! laminations with gap enumeration and rainbow search, two
//! homeomorphism backends (piecewise linear and Moebius), orbit and
//! witness searches over finitely generated groups, finite-support
//! invariant measures, and planar order trees with their induced
//! laminations.  Every geometric predicate is decided exactly;
//! floating point appears only in SVG output.

pub mod catalog;
pub mod circle;
pub mod group;
pub mod homeo;
pub mod io;
pub mod lamination;
pub mod measure;
pub mod ordertree;
pub mod surd;
pub mod svg;

#[derive(Debug, thiserror::Error, PartialEq, Eq, Clone)]
pub enum Error {
    #[error("points from different circle models cannot be combined")]
    ModelMismatch,
    #[error("endpoints coincide: degenerate interval")]
    DegenerateInterval,
    #[error("a lamination must contain at least one leaf")]
    EmptyLamination,
    #[error("sequence has no monotone interpretation")]
    NotMonotone,
    #[error("lamination is not valid: contains linked leaves")]
    LinkedLeaves,
    #[error("homeomorphism backend does not match the point model")]
    BackendMismatch,
    #[error("matrix must have positive determinant")]
    NonPositiveDeterminant,
    #[error("piecewise linear map must be an orientation-preserving circle map")]
    InvalidPiecewiseMap,
    #[error("piecewise linear map has a non-trivial arc of fixed points")]
    FixedArc,
    #[error("the identity is not allowed here")]
    IdentityElement,
    #[error("a marked group needs at least one generator")]
    NoGenerators,
    #[error("gap does not have a finite vertex set")]
    NotIdealPolygon,
    #[error("measure weights must be positive and sum to 1")]
    BadMeasure,
    #[error("search depth must be at least 1")]
    BadDepth,
    #[error("map must be hyperbolic (two fixed points)")]
    NotHyperbolic,
    #[error("not a tree, or planar data is inconsistent")]
    BadTree,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
