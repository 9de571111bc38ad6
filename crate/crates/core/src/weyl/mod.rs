//! Weyl groups of types A, B and D realised as signed permutations, together
//! with the combinatorics of conjugacy classes, parabolic subgroups and the
//! trace maps between them.

mod classes;
mod group;
mod parabolic;
mod partition;
mod perm;
mod squarepoly;
pub mod trace;

pub use classes::{class_representative, cycle_type, distinguished_classes, is_split_label, ConventionFlag};
pub use group::{ElemId, WeylGroup};
pub use parabolic::{ParabolicSubset, SplitClassError};
pub use partition::{bipartitions, partitions, ClassLabel, Partition};
pub use perm::SignedPerm;
pub use squarepoly::SquarePoly;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest number of letters supported by the fixed-size exponent vectors.
pub const MAX_N: usize = 8;

/// Default cap on the number of group elements enumerated.
pub const DEFAULT_ENUM_BOUND: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = WeylError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "D" | "d" => Ok(Family::D),
            other => Err(WeylError::InvalidType(other.to_string())),
        }
    }
}

/// A Weyl group type acting on `n` letters.
///
/// Type A with `n` letters is the symmetric group `S_n` of rank `n - 1`;
/// types B and D have rank `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeylType {
    pub family: Family,
    pub n: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeylError {
    #[error("invalid Weyl type: {0}")]
    InvalidType(String),
    #[error("invalid window {0:?} for type {1}")]
    InvalidWindow(Vec<i32>, WeylType),
    #[error("type mismatch: {0} vs {1}")]
    TypeMismatch(WeylType, WeylType),
    #[error("generator index {0} out of range for {1}")]
    BadGenerator(usize, WeylType),
    #[error("enumeration of {what} would visit {size} elements, above the bound {bound}")]
    BoundExceeded { what: String, size: u128, bound: usize },
    #[error("class label {0} does not exist in type {1}")]
    BadLabel(String, WeylType),
    #[error("class {label} meets the non-equivalent minimal parabolic subsets {first} and {second}")]
    AmbiguousMinimalSubset { label: String, first: String, second: String },
    #[error(transparent)]
    Split(#[from] SplitClassError),
}

impl WeylType {
    pub fn new(family: Family, n: usize) -> Result<Self, WeylError> {
        let ok = match family {
            Family::A | Family::B => (1..=MAX_N).contains(&n),
            Family::D => (4..=MAX_N).contains(&n),
        };
        if ok {
            Ok(WeylType { family, n })
        } else {
            Err(WeylError::InvalidType(format!("{family} with n = {n}")))
        }
    }

    pub fn a(n: usize) -> Self {
        Self::new(Family::A, n).expect("valid type A")
    }

    pub fn b(n: usize) -> Self {
        Self::new(Family::B, n).expect("valid type B")
    }

    pub fn d(n: usize) -> Self {
        Self::new(Family::D, n).expect("valid type D")
    }

    pub fn rank(&self) -> usize {
        match self.family {
            Family::A => self.n - 1,
            Family::B | Family::D => self.n,
        }
    }

    /// Group order, computed without enumerating.
    pub fn order(&self) -> u128 {
        let fact: u128 = (1..=self.n as u128).product();
        match self.family {
            Family::A => fact,
            Family::B => fact << self.n,
            Family::D => fact << (self.n - 1),
        }
    }

    /// Coxeter exponent `m_ij` for 1-based generator indices.
    pub fn coxeter_m(&self, i: usize, j: usize) -> u32 {
        if i == j {
            return 1;
        }
        let (i, j) = (i.min(j), i.max(j));
        let n = self.n;
        match self.family {
            Family::A => {
                if j == i + 1 {
                    3
                } else {
                    2
                }
            }
            Family::B => {
                if j == n {
                    if i == n - 1 {
                        4
                    } else {
                        2
                    }
                } else if j == i + 1 {
                    3
                } else {
                    2
                }
            }
            Family::D => {
                if j == n {
                    if i == n - 2 {
                        3
                    } else {
                        2
                    }
                } else if j == i + 1 {
                    3
                } else {
                    2
                }
            }
        }
    }

    /// Simple root `alpha_i` (1-based) in the coordinates `e_1..e_n`.
    pub fn simple_root(&self, i: usize) -> Vec<i32> {
        let mut r = vec![0; self.n];
        if i < self.n {
            r[i - 1] = 1;
            r[i] = -1;
        } else {
            match self.family {
                Family::B => r[self.n - 1] = 1,
                Family::D => {
                    r[self.n - 2] = 1;
                    r[self.n - 1] = 1;
                }
                Family::A => unreachable!("type A has no node n"),
            }
        }
        r
    }

    /// Name by family and rank, as in `A1` for `S_2`.
    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.rank())
    }
}

impl fmt::Display for WeylType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}
