//! Fano schemes of lines on projective toric surfaces.
//!
//! A lattice polygon `P` determines a projective toric surface `X_P`. This
//! crate computes the scheme structure of the Fano scheme of lines
//! `F1(X_P)` from the lattice geometry of `P` ([`classify`]) and certifies the
//! local structure at every torus-fixed line with an exact polynomial engine
//! ([`symbolic`]).

pub mod classify;
pub mod lattice;
pub mod symbolic;
