use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Family, WeylError, WeylType};

/// A signed permutation in window notation: `window[i - 1] = w(i)`.
///
/// Composition is `(a * b)(i) = a(b(i))` with `a(-k) = -a(k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedPerm {
    pub ty: WeylType,
    window: Vec<i32>,
}

impl SignedPerm {
    pub fn new(ty: WeylType, window: Vec<i32>) -> Result<Self, WeylError> {
        let n = ty.n;
        let bad = || WeylError::InvalidWindow(window.clone(), ty);
        if window.len() != n {
            return Err(bad());
        }
        let mut seen = vec![false; n + 1];
        for &x in &window {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(bad());
            }
            seen[a] = true;
        }
        let negs = window.iter().filter(|&&x| x < 0).count();
        let ok = match ty.family {
            Family::A => negs == 0,
            Family::B => true,
            Family::D => negs % 2 == 0,
        };
        if !ok {
            return Err(bad());
        }
        Ok(SignedPerm { ty, window })
    }

    pub(crate) fn from_window_unchecked(ty: WeylType, window: Vec<i32>) -> Self {
        SignedPerm { ty, window }
    }

    pub fn identity(ty: WeylType) -> Self {
        SignedPerm { ty, window: (1..=ty.n as i32).collect() }
    }

    /// Simple reflection `s_i`, 1-based.
    pub fn simple(ty: WeylType, i: usize) -> Result<Self, WeylError> {
        if i == 0 || i > ty.rank() {
            return Err(WeylError::BadGenerator(i, ty));
        }
        let n = ty.n;
        let mut w: Vec<i32> = (1..=n as i32).collect();
        if i < n {
            w.swap(i - 1, i);
        } else {
            match ty.family {
                Family::B => w[n - 1] = -(n as i32),
                Family::D => {
                    w[n - 2] = -(n as i32);
                    w[n - 1] = -(n as i32 - 1);
                }
                Family::A => unreachable!(),
            }
        }
        Ok(SignedPerm { ty, window: w })
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// `w(i)` for a signed letter `i`.
    pub fn apply(&self, i: i32) -> i32 {
        let v = self.window[i.unsigned_abs() as usize - 1];
        if i < 0 {
            -v
        } else {
            v
        }
    }

    pub fn compose(&self, other: &SignedPerm) -> Result<SignedPerm, WeylError> {
        if self.ty != other.ty {
            return Err(WeylError::TypeMismatch(self.ty, other.ty));
        }
        let window = other.window.iter().map(|&x| self.apply(x)).collect();
        Ok(SignedPerm { ty: self.ty, window })
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut inv = vec![0; self.window.len()];
        for (i, &x) in self.window.iter().enumerate() {
            let a = x.unsigned_abs() as usize - 1;
            inv[a] = if x < 0 { -(i as i32 + 1) } else { i as i32 + 1 };
        }
        SignedPerm { ty: self.ty, window: inv }
    }

    /// Image of a vector in the coordinates `e_1..e_n`.
    pub fn act_on_vector(&self, v: &[i32]) -> Vec<i32> {
        let mut out = vec![0; v.len()];
        for (i, &c) in v.iter().enumerate() {
            let t = self.window[i];
            let a = t.unsigned_abs() as usize - 1;
            out[a] += if t < 0 { -c } else { c };
        }
        out
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let n = w.len();
        let mut len = 0;
        for i in 0..n {
            let (si, ai) = (w[i] > 0, w[i].unsigned_abs());
            if self.ty.family == Family::B && !si {
                len += 1;
            }
            for j in i + 1..n {
                let (sj, aj) = (w[j] > 0, w[j].unsigned_abs());
                // e_i - e_j
                let pos = if ai < aj { si } else { !sj };
                if !pos {
                    len += 1;
                }
                if self.ty.family != Family::A {
                    // e_i + e_j
                    let pos = if ai < aj { si } else { sj };
                    if !pos {
                        len += 1;
                    }
                }
            }
        }
        len
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &x)| x == i as i32 + 1)
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.window.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_reflections_have_length_one() {
        for ty in [WeylType::a(4), WeylType::b(3), WeylType::d(4)] {
            for i in 1..=ty.rank() {
                let s = SignedPerm::simple(ty, i).unwrap();
                assert_eq!(s.length(), 1, "{ty} s{i}");
                assert!(s.compose(&s).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn longest_elements() {
        let b3 = SignedPerm::new(WeylType::b(3), vec![-1, -2, -3]).unwrap();
        assert_eq!(b3.length(), 9);
        let d4 = SignedPerm::new(WeylType::d(4), vec![-1, -2, -3, -4]).unwrap();
        assert_eq!(d4.length(), 12);
        let a3 = SignedPerm::new(WeylType::a(4), vec![4, 3, 2, 1]).unwrap();
        assert_eq!(a3.length(), 6);
    }

    #[test]
    fn rejects_bad_windows() {
        assert!(SignedPerm::new(WeylType::a(2), vec![-1, 2]).is_err());
        assert!(SignedPerm::new(WeylType::d(4), vec![-1, 2, 3, 4]).is_err());
        assert!(SignedPerm::new(WeylType::b(2), vec![1, 1]).is_err());
    }

    #[test]
    fn inverse_composes_to_identity() {
        let w = SignedPerm::new(WeylType::b(3), vec![-3, 1, -2]).unwrap();
        assert!(w.compose(&w.inverse()).unwrap().is_identity());
        assert_eq!(w.apply(-1), 3);
    }
}
