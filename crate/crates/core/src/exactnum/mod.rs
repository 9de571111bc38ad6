//! Exact scalars: rationals, the eighth cyclotomic field, and polynomials in
//! the two deformation parameters `u` and `v`.

mod cyc8;
mod parampoly;
mod scalar;

pub use cyc8::Cyc8;
pub use parampoly::ParamPoly;
pub use scalar::{parse_rational, Field, FromRational, Ring};

use thiserror::Error;

/// Errors raised while parsing or inverting exact scalars.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("cannot parse scalar from {0:?}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
}
