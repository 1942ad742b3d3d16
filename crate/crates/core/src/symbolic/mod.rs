//! Local equations of the Fano scheme of lines near a torus-fixed line.
//!
//! For a primitive edge `E = bc` the polygon is moved into the standard frame
//! `b = (0,0)`, `c = (1,0)`, `v = (0,1)`. Lines near `L_E` are parametrized
//! by `σ_u, τ_u` (the line through `x_b = 1, x_u = σ_u` and `x_c = 1, x_u = τ_u`),
//! and the homomorphism
//!
//! ```text
//! φ: x_b ↦ s,  x_c ↦ t,  x_u ↦ σ_u s + τ_u t
//! ```
//!
//! turns each binomial of the toric ideal into a polynomial in `s, t` whose
//! coefficients generate the local ideal `J`. The claimed presentation of
//! `J` eliminates every `σ_u, τ_u` in favour of `σ_v, τ_v` and truncates the
//! two survivors by monomials. [`verify_local_structure`] certifies it in both
//! directions up to a degree bound.

mod frame;
mod poly;
mod rewrite;
mod toric;
mod verify;

pub use frame::StandardEdgeFrame;
pub use poly::{Field, Monomial, Poly, Var};
pub use rewrite::{
    artinian_length, chart, claimed_rewrite_system, closed_form_sigma, closed_form_tau, normal_form,
    Chart, LocalCase, RewriteSystem,
};
pub use toric::{binomial_degree, local_fano_ideal, phi, scroll_minor_matrix, toric_binomials, MinorMatrix};
pub use verify::{
    expected_chart, forward_plan, minimum_degree_bound, verify_local_structure, ForwardStep,
    VerificationReport, DEFAULT_DEGREE_BOUND,
};

use num_bigint::BigInt;
use thiserror::Error;

use crate::classify::ClassifyError;
use crate::lattice::{LatticeError, LatticePoint};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolicError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Classify(Box<ClassifyError>),
    #[error("variable {0} is not a coordinate of the polygon")]
    UnknownVariable(String),
    #[error("no local case for mu = {mu}, gamma_b = {gamma_b}, gamma_c = {gamma_c} (scroll: {scroll})")]
    UnhandledCase { mu: BigInt, gamma_b: String, gamma_c: String, scroll: bool },
    #[error("degree bound {given} is too small; the witnesses need at least {required}")]
    DegreeBoundTooSmall { required: u32, given: u32 },
    #[error("witness for {relation} needs the lattice point {point}, which is not in the polygon")]
    WitnessNotFound { relation: String, point: LatticePoint },
    #[error("phi({input}) is not homogeneous of the expected degree: {detail}")]
    GradingViolation { input: String, detail: String },
    #[error("{0} is not prime")]
    NotPrime(BigInt),
    #[error("coefficient denominator vanishes in characteristic {0}")]
    NonInvertible(BigInt),
    #[error("exponent {0} does not fit the polynomial engine")]
    ExponentOverflow(BigInt),
}

impl From<ClassifyError> for SymbolicError {
    fn from(e: ClassifyError) -> Self {
        SymbolicError::Classify(Box::new(e))
    }
}

pub type Result<T> = std::result::Result<T, SymbolicError>;

pub(crate) fn exponent(n: &BigInt) -> Result<u32> {
    u32::try_from(n).map_err(|_| SymbolicError::ExponentOverflow(n.clone()))
}
