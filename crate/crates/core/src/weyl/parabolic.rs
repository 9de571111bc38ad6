use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::group::{ElemId, WeylGroup};
use super::partition::ClassLabel;
use super::{WeylError, WeylType};

/// A type-D label whose elements form two conjugacy classes, so the label
/// alone does not determine a class.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("label {0} names two conjugacy classes")]
pub struct SplitClassError(pub ClassLabel);

/// A subset `J` of the simple reflections, stored as a bitmask with bit
/// `i - 1` standing for `s_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ParabolicSubset {
    pub ty: WeylType,
    pub mask: u32,
}

impl ParabolicSubset {
    pub fn new(ty: WeylType, indices: &[usize]) -> Result<Self, WeylError> {
        let mut mask = 0;
        for &i in indices {
            if i == 0 || i > ty.rank() {
                return Err(WeylError::BadGenerator(i, ty));
            }
            mask |= 1 << (i - 1);
        }
        Ok(ParabolicSubset { ty, mask })
    }

    pub fn empty(ty: WeylType) -> Self {
        ParabolicSubset { ty, mask: 0 }
    }

    pub fn full(ty: WeylType) -> Self {
        ParabolicSubset { ty, mask: (1u32 << ty.rank()) - 1 }
    }

    pub fn indices(&self) -> Vec<usize> {
        (1..=self.ty.rank()).filter(|&i| self.contains(i)).collect()
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && self.mask & (1 << (i - 1)) != 0
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_subset_of(&self, other: &ParabolicSubset) -> bool {
        self.mask & !other.mask == 0
    }

    /// All subsets of the simple reflections, by size and then by index list.
    pub fn all(ty: WeylType) -> Vec<ParabolicSubset> {
        let mut v: Vec<ParabolicSubset> = (0..1u32 << ty.rank()).map(|mask| ParabolicSubset { ty, mask }).collect();
        v.sort_by_key(|j| (j.len(), j.indices()));
        v
    }
}

impl fmt::Display for ParabolicSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices().iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Rank of a small integer matrix given as rows.
pub(crate) fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let (a, b) = (m[rank][c], m[r][c]);
                for k in 0..cols {
                    m[r][k] = m[r][k] * a - m[rank][k] * b;
                }
                let g = m[r].iter().fold(0i128, |g, &x| gcd(g, x.abs()));
                if g > 1 {
                    for x in m[r].iter_mut() {
                        *x /= g;
                    }
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl WeylGroup {
    fn check_subset(&self, j: &ParabolicSubset) -> Result<(), WeylError> {
        if j.ty != self.ty() {
            return Err(WeylError::TypeMismatch(j.ty, self.ty()));
        }
        Ok(())
    }

    pub fn in_parabolic(&self, g: ElemId, j: &ParabolicSubset) -> bool {
        self.support(g) & !j.mask == 0
    }

    /// Elements of `W_J` in id order.
    pub fn parabolic_elements(&self, j: &ParabolicSubset) -> Result<Vec<ElemId>, WeylError> {
        self.check_subset(j)?;
        Ok(self.elements().filter(|&g| self.in_parabolic(g, j)).collect())
    }

    /// Minimal length representatives of `W_J \ W / W_K`.
    pub fn min_double_coset_reps(&self, j: &ParabolicSubset, k: &ParabolicSubset) -> Result<Vec<ElemId>, WeylError> {
        self.check_subset(j)?;
        self.check_subset(k)?;
        Ok(self
            .elements()
            .filter(|&x| {
                j.indices().iter().all(|&i| !self.is_left_descent(i, x))
                    && k.indices().iter().all(|&i| !self.is_right_descent(x, i))
            })
            .collect())
    }

    /// `N_W(W_J)`.
    pub fn normalizer(&self, j: &ParabolicSubset) -> Result<Vec<ElemId>, WeylError> {
        self.check_subset(j)?;
        let gens: Vec<ElemId> = j.indices().iter().map(|&i| self.simple(i)).collect();
        Ok(self.elements().filter(|&g| gens.iter().all(|&s| self.in_parabolic(self.conj(g, s), j))).collect())
    }

    /// Centralizer of `w`.
    pub fn centralizer(&self, w: ElemId) -> Vec<ElemId> {
        self.elements().filter(|&g| self.mul(g, w) == self.mul(w, g)).collect()
    }

    /// Whether `g` (an element of `W_J`) fixes no nonzero vector in the span
    /// of the simple roots of `J`.
    pub fn is_elliptic_in(&self, g: ElemId, j: &ParabolicSubset) -> bool {
        if !self.in_parabolic(g, j) {
            return false;
        }
        let cols: Vec<Vec<i64>> = j
            .indices()
            .iter()
            .map(|&i| {
                let r = self.ty().simple_root(i);
                let img = self.act_on_vector(g, &r);
                img.iter().zip(&r).map(|(a, b)| (a - b) as i64).collect()
            })
            .collect();
        integer_rank(&cols) == j.len()
    }

    /// `w` maps the simple roots of `J` bijectively onto those of `K`.
    pub fn maps_simple_roots(&self, w: ElemId, j: &ParabolicSubset, k: &ParabolicSubset) -> bool {
        if j.len() != k.len() {
            return false;
        }
        let targets: HashSet<Vec<i32>> = k.indices().iter().map(|&i| self.ty().simple_root(i)).collect();
        j.indices().iter().all(|&i| targets.contains(&self.act_on_vector(w, &self.ty().simple_root(i))))
    }

    /// `J ~ K` when some `w` maps the simple roots of `J` onto those of `K`.
    pub fn subsets_equivalent(&self, j: &ParabolicSubset, k: &ParabolicSubset) -> bool {
        j.len() == k.len() && self.elements().any(|w| self.maps_simple_roots(w, j, k))
    }

    /// `Z_J`: minimal double coset representatives preserving the simple
    /// roots of `J`.
    pub fn z_set(&self, j: &ParabolicSubset) -> Result<Vec<ElemId>, WeylError> {
        Ok(self.min_double_coset_reps(j, j)?.into_iter().filter(|&z| self.maps_simple_roots(z, j, j)).collect())
    }

    /// Whether the class with this label meets `W_J` in an element elliptic
    /// in `W_J`.
    pub fn label_is_elliptic_in(&self, label: &ClassLabel, j: &ParabolicSubset) -> Result<bool, WeylError> {
        let class = self.class_of_label(label)?;
        Ok(class.iter().any(|&g| self.is_elliptic_in(g, j)))
    }

    /// A minimal `J` whose parabolic subgroup meets the class, and the
    /// lexicographically least window in the intersection. Every other
    /// subset of the same size meeting the class must be W-equivalent to `J`.
    pub fn j_of_class(&self, label: &ClassLabel) -> Result<(ParabolicSubset, ElemId), WeylError> {
        let class = self.class_of_label(label)?;
        let mut found: Option<(ParabolicSubset, ElemId)> = None;
        for j in ParabolicSubset::all(self.ty()) {
            if let Some((first, _)) = &found {
                if j.len() > first.len() {
                    break;
                }
            }
            let mut hits: Vec<ElemId> = class.iter().copied().filter(|&g| self.in_parabolic(g, &j)).collect();
            if hits.is_empty() {
                continue;
            }
            match &found {
                None => {
                    hits.sort_by_key(|&g| self.window(g));
                    found = Some((j, hits[0]));
                }
                Some((first, _)) if !self.subsets_equivalent(first, &j) => {
                    return Err(WeylError::AmbiguousMinimalSubset {
                        label: label.to_string(),
                        first: first.to_string(),
                        second: j.to_string(),
                    });
                }
                Some(_) => {}
            }
        }
        found.ok_or_else(|| WeylError::BadLabel(label.to_string(), self.ty()))
    }
}
