//! Valid drawings of signed graphs.
//!
//! A drawing places every vertex of a signed graph in Euclidean space; it is
//! *valid* when each vertex is strictly closer to all of its positive
//! neighbours than to any of its negative neighbours. This crate verifies
//! drawings in any dimension, decides and constructs line drawings (in
//! polynomial time for complete graphs, by exhaustive search otherwise),
//! generates the classical forbidden patterns and moves rational drawings
//! onto the integer grid.
//!
//! Geometry is generic over the coordinate scalar (see [`Scalar`]); the
//! aliases below fix the three scalars used throughout: exact rationals for
//! anything authoritative, `f64` for imported coordinates and big integers
//! for grid drawings.

pub mod balance;
pub mod bench;
pub mod drawing;
pub mod error;
pub mod format;
pub mod graph;
pub mod grid;
pub mod linedraw;
pub mod oracle;
pub mod patterns;
pub mod random;
pub mod scalar;

pub use balance::{cluster_drawing, is_balanced, is_clusterizable, Clustering};
pub use drawing::{check_valid, Drawing, ValidityReport, Violation};
pub use error::{Error, Result};
pub use graph::{Sign, SignedGraph, UnsignedGraph};
pub use linedraw::{
    conditions_check, construct_drawing, decide_complete, extremal_neighbors, is_chordal_with_peo,
    Certificate, ChordalityResult, ConditionViolation, DecisionResult, ExtremalNeighbors,
    OrderContext, Side, VertexOrdering, Witness,
};
pub use oracle::{decide_line_bruteforce, OracleConfig, OracleResult};
pub use patterns::{PatternId, PatternMatch};
pub use scalar::Scalar;

/// Arbitrary-precision rational, the authoritative coordinate type.
pub type Rational = num_rational::BigRational;

/// Drawing with exact rational coordinates.
pub type RationalDrawing = Drawing<Rational>;

/// Drawing with floating-point coordinates.
pub type FloatDrawing = Drawing<f64>;

/// Drawing on the integer lattice.
pub type IntegerDrawing = Drawing<num_bigint::BigInt>;
