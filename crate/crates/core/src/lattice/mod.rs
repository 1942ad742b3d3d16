//! Exact integer lattice geometry in the plane.
//!
//! Everything here works on arbitrary-precision integers: polygons, their
//! lattice points and boundary walks, unimodular affine maps and normal forms,
//! and the per-edge invariants (`mu`, `gamma_b`, `gamma_c`) that drive the
//! classification of lines on the toric surface.
//!
//! Orderings are deterministic throughout. Points sort lexicographically,
//! polygon vertices run counterclockwise starting at the lexicographically
//! smallest vertex, and edge `i` joins vertex `i` to vertex `i + 1`.

mod arith;
mod edge;
pub mod enumerate;
mod normal_form;
pub mod oracle;
mod polygon;
mod types;
mod width;

pub use arith::{ceil_div, extended_gcd, floor_div};
pub use edge::{
    edge_gammas, edge_invariants, gamma, mu, normalize_pair, primitive_edges, standardize_edge,
};
pub use normal_form::unimodular_normal_form;
pub use polygon::{boundary_lattice_points, hull, is_smooth, lattice_points};
pub use types::{
    Gamma, LatticePoint, LatticePolygon, LatticeVector, NormalizedPair, PrimitiveEdge,
    EdgeInvariants, UnimodularAffineMap,
};
pub use width::{is_scroll_width, lattice_width};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("vectors {0} and {1} are linearly dependent")]
    ZeroDeterminant(Box<LatticeVector>, Box<LatticeVector>),
    #[error("vector {0} is not primitive")]
    NotPrimitive(Box<LatticeVector>),
    #[error("input points span fewer than two dimensions")]
    DegenerateInput,
    #[error("vertex list is not a strictly convex counterclockwise polygon: {0}")]
    NotConvex(String),
    #[error("matrix has determinant {0}, expected +1 or -1")]
    NotUnimodular(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, LatticeError>;
