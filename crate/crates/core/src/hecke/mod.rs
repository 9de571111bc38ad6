//! The degenerate affine Hecke-Clifford algebra as a PBW rewriting engine.
//!
//! Elements are combinations of monomials `x^alpha c^eps w`. A product is
//! normalised by pushing the reduced word of `w` through `x^beta c^delta`
//! one simple reflection at a time, using the swap rules below (`K` is the
//! type B constant `-sqrt(2) v`):
//!
//! ```text
//! s_i x_i     =  x_{i+1} s_i - u - u c_i c_{i+1}        (i < n)
//! s_i x_{i+1} =  x_i s_i     + u - u c_i c_{i+1}        (i < n)
//! s_n x_n     = -x_n s_n + K                            (type B)
//! s_n x_n     = -x_{n-1} s_n - u - u c_{n-1} c_n        (type D)
//! s_n x_{n-1} = -x_n s_n     - u + u c_{n-1} c_n        (type D)
//! w c_i       =  sign(w(i)) c_|w(i)| w
//! ```
//!
//! Every other `s_k x_j` commutes. Each push either moves a reflection past
//! one letter or produces a correction term of strictly lower `x`-degree, so
//! the recursion on (length of `w`, degree) terminates; a fuel counter turns
//! any bug in that argument into an error instead of a hang.

mod algebra;
mod clifford;
mod format;
mod relations;

pub use algebra::{AlgebraError, Gen, HeckeClifford, PBWElement, PBWMono, Parity, DEFAULT_FUEL};
pub use clifford::{clifford_conj, clifford_mul, clifford_parity, format_clifford, pc_mul, CliffordMono, PcMono};
pub(crate) use format::{coeff_text, window_text};
pub use format::{element_json, format_element};
pub use relations::{defining_relations, relations_in, Relation, RelationTarget};
