use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::group::{ElemId, WeylGroup};
use super::partition::{bipartitions, ClassLabel};
use super::perm::SignedPerm;
use super::{Family, WeylError, WeylType};

/// Which type-B conjugacy classes count as distinguished.
///
/// `NoLengthFilter` keeps every `(OP, EP)` bipartition; `LengthFilter` additionally
/// requires an even number of negative cycles. The two agree in types A and D.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ConventionFlag {
    #[serde(rename = "no-length-filter")]
    NoLengthFilter,
    #[serde(rename = "length-filter")]
    LengthFilter,
}

impl ConventionFlag {
    pub const ALL: [ConventionFlag; 2] = [ConventionFlag::NoLengthFilter, ConventionFlag::LengthFilter];

    pub fn as_str(&self) -> &'static str {
        match self {
            ConventionFlag::NoLengthFilter => "no-length-filter",
            ConventionFlag::LengthFilter => "length-filter",
        }
    }
}

impl fmt::Display for ConventionFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConventionFlag {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "no-length-filter" => Ok(ConventionFlag::NoLengthFilter),
            "length-filter" => Ok(ConventionFlag::LengthFilter),
            other => Err(format!("unknown convention {other:?}")),
        }
    }
}

/// Cycle type of a signed permutation. A cycle is negative when it contains an
/// odd number of sign changes.
pub fn cycle_type(w: &SignedPerm) -> ClassLabel {
    let win = w.window();
    let n = win.len();
    let mut seen = vec![false; n];
    let mut lambda = Vec::new();
    let mut mu = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut flips = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            len += 1;
            if win[i] < 0 {
                flips += 1;
            }
            i = win[i].unsigned_abs() as usize - 1;
        }
        if flips % 2 == 0 {
            lambda.push(len);
        } else {
            mu.push(len);
        }
    }
    ClassLabel::new(lambda, mu)
}

fn label_exists(ty: WeylType, label: &ClassLabel) -> bool {
    if label.size() != ty.n {
        return false;
    }
    match ty.family {
        Family::A => label.mu.is_empty(),
        Family::B => true,
        Family::D => label.mu.len().is_multiple_of(2),
    }
}

/// Block representative: `lambda` cycles on consecutive letters first, then
/// `mu` cycles, each cycle `a -> a+1 -> ... -> b` closing with `b -> a`
/// (positive) or `b -> -a` (negative).
pub fn class_representative(label: &ClassLabel, ty: WeylType) -> Result<SignedPerm, WeylError> {
    if !label_exists(ty, label) {
        return Err(WeylError::BadLabel(label.to_string(), ty));
    }
    let mut window = Vec::with_capacity(ty.n);
    let mut start = 1i32;
    let blocks = label.lambda.parts().iter().map(|&p| (p, false)).chain(label.mu.parts().iter().map(|&p| (p, true)));
    for (len, negative) in blocks {
        let end = start + len as i32 - 1;
        for a in start..end {
            window.push(a + 1);
        }
        window.push(if negative { -start } else { start });
        start = end + 1;
    }
    SignedPerm::new(ty, window)
}

/// Distinguished class labels in a fixed order.
///
/// Type A: odd-part partitions. Type B: `(odd parts, even parts)`, with the
/// `LengthFilter` convention dropping labels with an odd number of negative
/// cycles. Type D: `(odd parts, even parts)` with an even number of negative
/// cycles, plus `(empty, strict odd parts)` when `n` is even.
pub fn distinguished_classes(ty: WeylType, conv: ConventionFlag) -> Vec<ClassLabel> {
    let mut out: Vec<ClassLabel> = bipartitions(ty.n)
        .into_iter()
        .filter(|l| label_exists(ty, l))
        .filter(|l| l.lambda.all_odd() && l.mu.all_even())
        .filter(|l| !(ty.family == Family::B && conv == ConventionFlag::LengthFilter && l.mu.len() % 2 == 1))
        .collect();
    if ty.family == Family::D && ty.n.is_multiple_of(2) {
        for l in bipartitions(ty.n) {
            if l.lambda.is_empty() && l.mu.is_strict_odd() && !out.contains(&l) {
                out.push(l);
            }
        }
    }
    out
}

/// Labels of type D that name two conjugacy classes: no negative cycles and
/// all cycle lengths even.
pub fn is_split_label(ty: WeylType, label: &ClassLabel) -> bool {
    ty.family == Family::D && label.mu.is_empty() && label.lambda.all_even()
}

impl WeylGroup {
    pub fn label_of(&self, g: ElemId) -> ClassLabel {
        cycle_type(&self.perm(g))
    }

    /// Conjugacy classes as sorted element lists, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<ElemId>> {
        let size = self.order();
        let mut class_of = vec![usize::MAX; size];
        let mut classes: Vec<Vec<ElemId>> = Vec::new();
        for g in self.elements() {
            if class_of[g as usize] != usize::MAX {
                continue;
            }
            let k = classes.len();
            let mut members = vec![g];
            class_of[g as usize] = k;
            let mut head = 0;
            while head < members.len() {
                let w = members[head];
                head += 1;
                for i in 1..=self.rank() {
                    let s = self.simple(i);
                    let c = self.mul(self.mul(s, w), s);
                    if class_of[c as usize] == usize::MAX {
                        class_of[c as usize] = k;
                        members.push(c);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        classes
    }

    /// Members of the class with the given label. Fails for split labels.
    pub fn class_of_label(&self, label: &ClassLabel) -> Result<Vec<ElemId>, WeylError> {
        if !label_exists(self.ty(), label) {
            return Err(WeylError::BadLabel(label.to_string(), self.ty()));
        }
        if is_split_label(self.ty(), label) {
            return Err(super::SplitClassError(label.clone()).into());
        }
        Ok(self.elements().filter(|&g| &self.label_of(g) == label).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(v: &[(&[u32], &[u32])]) -> Vec<ClassLabel> {
        v.iter().map(|(l, m)| ClassLabel::new(l.to_vec(), m.to_vec())).collect()
    }

    #[test]
    fn distinguished_examples() {
        let a4 = distinguished_classes(WeylType::a(4), ConventionFlag::NoLengthFilter);
        assert_eq!(a4, labels(&[(&[3, 1], &[]), (&[1, 1, 1, 1], &[])]));
        let a3 = distinguished_classes(WeylType::a(3), ConventionFlag::NoLengthFilter);
        assert_eq!(a3, labels(&[(&[3], &[]), (&[1, 1, 1], &[])]));
        let b2 = distinguished_classes(WeylType::b(2), ConventionFlag::NoLengthFilter);
        assert_eq!(b2, labels(&[(&[1, 1], &[]), (&[], &[2])]));
        let b2f = distinguished_classes(WeylType::b(2), ConventionFlag::LengthFilter);
        assert_eq!(b2f, labels(&[(&[1, 1], &[])]));
        let d4 = distinguished_classes(WeylType::d(4), ConventionFlag::NoLengthFilter);
        assert_eq!(d4, labels(&[(&[3, 1], &[]), (&[1, 1, 1, 1], &[]), (&[], &[2, 2]), (&[], &[3, 1])]));
        assert_eq!(d4, distinguished_classes(WeylType::d(4), ConventionFlag::LengthFilter));
    }

    #[test]
    fn representatives_have_their_cycle_type() {
        for ty in [WeylType::a(4), WeylType::b(3), WeylType::d(4)] {
            for l in bipartitions(ty.n) {
                match class_representative(&l, ty) {
                    Ok(w) => assert_eq!(cycle_type(&w), l),
                    Err(_) => assert!(!label_exists(ty, &l)),
                }
            }
        }
        let w = class_representative(&ClassLabel::new(vec![], vec![2]), WeylType::b(2)).unwrap();
        assert_eq!(w.window(), &[2, -1]);
        assert!(class_representative(&ClassLabel::new(vec![3], vec![1]), WeylType::d(4)).is_err());
    }

    #[test]
    fn class_counts_match_labels() {
        // B_n classes are bipartitions; D_n adds one class per split label and
        // drops labels with an odd number of negative cycles.
        let b3 = WeylGroup::new(WeylType::b(3)).unwrap();
        assert_eq!(b3.conjugacy_classes().len(), bipartitions(3).len());
        let d4 = WeylGroup::new(WeylType::d(4)).unwrap();
        assert_eq!(d4.conjugacy_classes().len(), 13);
        let a4 = WeylGroup::new(WeylType::a(4)).unwrap();
        assert_eq!(a4.conjugacy_classes().len(), 5);
    }
}
