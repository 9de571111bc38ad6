pub mod cocenter;
pub mod exactnum;
pub mod expr;
pub mod hecke;
pub mod linalg;
pub mod lincomb;
pub mod mono;
pub mod morita;
pub mod spin;
pub mod weyl;

pub use exactnum::{Cyc8, Field, FromRational, ParamPoly, Ring};

/// Arbitrary precision rationals.
pub type Rational = num_rational::BigRational;
/// `Q(zeta_8)` over the rationals.
pub type Cyclotomic = Cyc8<Rational>;
/// Polynomials in `u`, `v` with cyclotomic coefficients.
pub type Params = ParamPoly<Cyclotomic>;
