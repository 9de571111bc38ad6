use std::fmt;

use serde::{Deserialize, Serialize};

/// Integer partition with parts in non-increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn all_odd(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    pub fn all_even(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 0)
    }

    /// Parts pairwise distinct.
    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] != w[1])
    }

    /// Strict with odd parts.
    pub fn is_strict_odd(&self) -> bool {
        self.is_strict() && self.all_odd()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Partitions of `n` in decreasing lexicographic order, `(n)` first.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

/// Conjugacy class label of a signed permutation: positive cycle lengths
/// `lambda` and negative cycle lengths `mu`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ClassLabel {
    pub lambda: Partition,
    pub mu: Partition,
}

impl ClassLabel {
    pub fn new(lambda: Vec<u32>, mu: Vec<u32>) -> Self {
        ClassLabel { lambda: Partition::new(lambda), mu: Partition::new(mu) }
    }

    pub fn size(&self) -> usize {
        self.lambda.size() + self.mu.size()
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lambda, self.mu)
    }
}

/// Bipartitions `(lambda, mu)` of `n`, ordered by decreasing `|lambda|`, then
/// decreasing lexicographic order in each component.
pub fn bipartitions(n: usize) -> Vec<ClassLabel> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for l in partitions(k) {
            for m in partitions(n - k) {
                out.push(ClassLabel { lambda: l.clone(), mu: m });
            }
        }
    }
    out
}
