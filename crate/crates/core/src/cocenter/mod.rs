//! Cocenters by exact linear algebra: reduction of elements modulo
//! commutators, candidate bases built from distinguished conjugacy classes and
//! invariant polynomials, and rank-based verification.

mod candidates;
mod conventions;
mod invariants;
mod reduce;
mod report;
mod slice;
mod verify;

use thiserror::Error;

use crate::hecke::AlgebraError;
use crate::weyl::WeylError;

pub use candidates::{candidate_basis, graded_pairs, spin_candidate_basis, spin_square_action, Candidate};
pub use conventions::{
    compute_fixture, convention_fixture, default_convention, fixture_runs, resolve_convention, ConventionEvidence,
    ConventionFixture, ConventionRecord,
};
pub use invariants::{invariant_basis, invariant_basis_with, is_invariant, InvariantPoly};
pub use reduce::{
    class_reduce, clifford_reduce, clifford_reduce_element, composition_element, conjugation_orbit, even_subsets,
    spin_class_reduce, ClassReduction, ConjugationOrbit, SpinReduction,
};
pub use report::{
    default_u0, default_v0, emit_report, verify_filtered_basis, verify_graded_basis, verify_spin_graded_basis,
    CocenterReport, Format, Mode, Parameters,
};
pub use slice::{CocenterAlgebra, MonoIndex};
pub use verify::{
    graded_cocenter_dims, graded_commutator_space, verify_filtered, verify_graded, DegreeRecord, GradedSlice, Verdict,
    Witness, DEFAULT_SLICE_BOUND,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CocenterError {
    #[error("{what} has {size} coordinates, above the bound {bound}")]
    BoundExceeded { what: String, size: usize, bound: usize },
    #[error("a commutator left the degree {0} slice; the algebra is not graded")]
    NotGraded(usize),
    #[error("element is not supported on the even slice of degree {0}")]
    NotInSlice(usize),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
