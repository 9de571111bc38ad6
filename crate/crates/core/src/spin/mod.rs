//! The degenerate spin affine Hecke algebra, spanned by monomials
//! `b^alpha t_w` where `t_w` is the product of the `t_i` along the canonical
//! reduced word of `w`.
//!
//! Products of `t`'s pick up a sign cocycle, read off from the embedding
//! `t_i -> i beta_i s_i` into the Clifford-Weyl part of the Hecke-Clifford
//! algebra. Moving `t_i` past `b_j` uses
//!
//! ```text
//! t_i b_i     = -b_{i+1} t_i + 1       t_i b_{i+1} = -b_i t_i + 1     (i < n)
//! t_n b_n     = -b_n t_n + u                                         (type B)
//! t_n b_n     = -b_{n-1} t_n + 1       t_n b_{n-1} = -b_n t_n + 1     (type D)
//! t_i b_j     = -b_j t_i                                             otherwise
//! ```
//!
//! and the `b_i` anticommute pairwise.

mod algebra;
mod cocycle;
mod format;
mod relations;

pub use algebra::{skew_mul, SpinElement, SpinGen, SpinHecke, SpinMono};
pub use cocycle::{embedding_images, CocycleTable};
pub use format::{format_spin_element, spin_element_json};
pub use relations::spin_defining_relations;
