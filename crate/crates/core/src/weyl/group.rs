use std::collections::{HashMap, VecDeque};

use super::perm::SignedPerm;
use super::{Family, WeylError, WeylType, DEFAULT_ENUM_BOUND};

/// Index of an element in [`WeylGroup`]'s enumeration.
pub type ElemId = u32;

/// A fully enumerated Weyl group.
///
/// Elements are numbered by increasing length, ties broken by window, so the
/// identity is `0` and id order is a linear extension of the Bruhat order.
/// Each element stores its lexicographically least reduced word.
#[derive(Debug)]
pub struct WeylGroup {
    ty: WeylType,
    windows: Vec<Box<[i8]>>,
    index: HashMap<Box<[i8]>, ElemId>,
    lengths: Vec<u16>,
    words: Vec<Vec<u8>>,
    left: Vec<Vec<ElemId>>,
    right: Vec<Vec<ElemId>>,
    inverse: Vec<ElemId>,
    simple: Vec<ElemId>,
}

fn apply_window(w: &[i8], x: i8) -> i8 {
    let v = w[x.unsigned_abs() as usize - 1];
    if x < 0 {
        -v
    } else {
        v
    }
}

impl WeylGroup {
    pub fn new(ty: WeylType) -> Result<Self, WeylError> {
        Self::with_bound(ty, DEFAULT_ENUM_BOUND)
    }

    pub fn with_bound(ty: WeylType, bound: usize) -> Result<Self, WeylError> {
        let order = ty.order();
        if order > bound as u128 {
            return Err(WeylError::BoundExceeded { what: format!("W({ty})"), size: order, bound });
        }
        let rank = ty.rank();
        let gens: Vec<Box<[i8]>> = (1..=rank)
            .map(|i| {
                let s = SignedPerm::simple(ty, i).expect("generator in range");
                s.window().iter().map(|&x| x as i8).collect()
            })
            .collect();
        let id: Box<[i8]> = (1..=ty.n as i8).collect();
        let mut seen: HashMap<Box<[i8]>, ()> = HashMap::new();
        seen.insert(id.clone(), ());
        let mut queue = VecDeque::from([id]);
        let mut all = Vec::new();
        while let Some(w) = queue.pop_front() {
            for s in &gens {
                let next: Box<[i8]> = w.iter().map(|&x| apply_window(s, x)).collect();
                if !seen.contains_key(&next) {
                    seen.insert(next.clone(), ());
                    queue.push_back(next);
                }
            }
            all.push(w);
        }
        let len_of =
            |w: &[i8]| SignedPerm::from_window_unchecked(ty, w.iter().map(|&x| x as i32).collect()).length() as u16;
        let mut keyed: Vec<(u16, Box<[i8]>)> = all.into_iter().map(|w| (len_of(&w), w)).collect();
        keyed.sort();
        let lengths: Vec<u16> = keyed.iter().map(|(l, _)| *l).collect();
        let windows: Vec<Box<[i8]>> = keyed.into_iter().map(|(_, w)| w).collect();
        let index: HashMap<Box<[i8]>, ElemId> =
            windows.iter().enumerate().map(|(k, w)| (w.clone(), k as ElemId)).collect();
        let size = windows.len();

        let mut left = vec![vec![0; size]; rank];
        let mut right = vec![vec![0; size]; rank];
        for (g, w) in windows.iter().enumerate() {
            for (i, s) in gens.iter().enumerate() {
                let l: Box<[i8]> = w.iter().map(|&x| apply_window(s, x)).collect();
                let r: Box<[i8]> = s.iter().map(|&x| apply_window(w, x)).collect();
                left[i][g] = index[&l];
                right[i][g] = index[&r];
            }
        }
        let mut words: Vec<Vec<u8>> = vec![Vec::new(); size];
        for g in 1..size {
            let i = (0..rank)
                .find(|&i| lengths[left[i][g] as usize] < lengths[g])
                .expect("non-identity element has a left descent");
            let mut word = vec![(i + 1) as u8];
            word.extend_from_slice(&words[left[i][g] as usize]);
            words[g] = word;
        }
        let mut inverse = vec![0; size];
        for (g, w) in windows.iter().enumerate() {
            let mut inv = vec![0i8; w.len()];
            for (i, &x) in w.iter().enumerate() {
                let a = x.unsigned_abs() as usize - 1;
                inv[a] = if x < 0 { -(i as i8 + 1) } else { i as i8 + 1 };
            }
            inverse[g] = index[&inv.into_boxed_slice()];
        }
        let simple = (0..rank).map(|i| left[i][0]).collect();
        Ok(WeylGroup { ty, windows, index, lengths, words, left, right, inverse, simple })
    }

    pub fn ty(&self) -> WeylType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    pub fn n(&self) -> usize {
        self.ty.n
    }

    pub fn order(&self) -> usize {
        self.windows.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = ElemId> {
        0..self.windows.len() as ElemId
    }

    pub fn identity(&self) -> ElemId {
        0
    }

    /// Id of the simple reflection `s_i`, 1-based.
    pub fn simple(&self, i: usize) -> ElemId {
        self.simple[i - 1]
    }

    pub fn length(&self, g: ElemId) -> usize {
        self.lengths[g as usize] as usize
    }

    /// The lexicographically least reduced word, as 1-based generator indices.
    pub fn word(&self, g: ElemId) -> &[u8] {
        &self.words[g as usize]
    }

    pub fn window(&self, g: ElemId) -> Vec<i32> {
        self.windows[g as usize].iter().map(|&x| x as i32).collect()
    }

    pub fn window_i8(&self, g: ElemId) -> &[i8] {
        &self.windows[g as usize]
    }

    pub fn perm(&self, g: ElemId) -> SignedPerm {
        SignedPerm::from_window_unchecked(self.ty, self.window(g))
    }

    pub fn id_of(&self, w: &SignedPerm) -> Result<ElemId, WeylError> {
        if w.ty != self.ty {
            return Err(WeylError::TypeMismatch(w.ty, self.ty));
        }
        self.id_of_window(w.window()).ok_or_else(|| WeylError::InvalidWindow(w.window().to_vec(), self.ty))
    }

    pub fn id_of_window(&self, w: &[i32]) -> Option<ElemId> {
        if w.len() != self.ty.n || w.iter().any(|&x| x.unsigned_abs() as usize > self.ty.n) {
            return None;
        }
        let key: Box<[i8]> = w.iter().map(|&x| x as i8).collect();
        self.index.get(&key).copied()
    }

    /// `w(i)` for a signed letter.
    pub fn apply(&self, g: ElemId, i: i32) -> i32 {
        apply_window(&self.windows[g as usize], i as i8) as i32
    }

    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        let wa = &self.windows[a as usize];
        let key: Box<[i8]> = self.windows[b as usize].iter().map(|&x| apply_window(wa, x)).collect();
        self.index[&key]
    }

    pub fn inv(&self, g: ElemId) -> ElemId {
        self.inverse[g as usize]
    }

    /// `s_i * g`.
    pub fn left_mul(&self, i: usize, g: ElemId) -> ElemId {
        self.left[i - 1][g as usize]
    }

    /// `g * s_i`.
    pub fn right_mul(&self, g: ElemId, i: usize) -> ElemId {
        self.right[i - 1][g as usize]
    }

    /// `g w g^-1`.
    pub fn conj(&self, g: ElemId, w: ElemId) -> ElemId {
        self.mul(self.mul(g, w), self.inv(g))
    }

    pub fn is_left_descent(&self, i: usize, g: ElemId) -> bool {
        self.length(self.left_mul(i, g)) < self.length(g)
    }

    pub fn is_right_descent(&self, g: ElemId, i: usize) -> bool {
        self.length(self.right_mul(g, i)) < self.length(g)
    }

    /// Support of the reduced words of `g` as a bitmask (bit `i - 1` for `s_i`).
    pub fn support(&self, g: ElemId) -> u32 {
        self.words[g as usize].iter().fold(0, |m, &i| m | 1 << (i - 1))
    }

    /// Image of a vector in the coordinates `e_1..e_n`.
    pub fn act_on_vector(&self, g: ElemId, v: &[i32]) -> Vec<i32> {
        let w = &self.windows[g as usize];
        let mut out = vec![0; v.len()];
        for (i, &c) in v.iter().enumerate() {
            let t = w[i];
            let a = t.unsigned_abs() as usize - 1;
            out[a] += if t < 0 { -c } else { c };
        }
        out
    }

    /// Number of negative entries in the window, the parity of the number of
    /// sign changes.
    pub fn negatives(&self, g: ElemId) -> usize {
        self.windows[g as usize].iter().filter(|&&x| x < 0).count()
    }

    pub fn family(&self) -> Family {
        self.ty.family
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(WeylGroup::new(WeylType::a(4)).unwrap().order(), 24);
        assert_eq!(WeylGroup::new(WeylType::b(3)).unwrap().order(), 48);
        assert_eq!(WeylGroup::new(WeylType::d(4)).unwrap().order(), 192);
    }

    #[test]
    fn words_are_reduced_and_evaluate_correctly() {
        for ty in [WeylType::a(4), WeylType::b(3), WeylType::d(4)] {
            let w = WeylGroup::new(ty).unwrap();
            for g in w.elements() {
                assert_eq!(w.word(g).len(), w.length(g));
                let mut acc = w.identity();
                for &i in w.word(g).iter().rev() {
                    acc = w.left_mul(i as usize, acc);
                }
                assert_eq!(acc, g);
                assert_eq!(w.mul(g, w.inv(g)), w.identity());
            }
        }
    }

    #[test]
    fn bound_is_enforced() {
        let err = WeylGroup::with_bound(WeylType::b(4), 100).unwrap_err();
        assert!(matches!(err, WeylError::BoundExceeded { .. }));
    }

    #[test]
    fn coxeter_relations_hold() {
        for ty in [WeylType::a(4), WeylType::b(3), WeylType::d(4)] {
            let w = WeylGroup::new(ty).unwrap();
            for i in 1..=ty.rank() {
                for j in 1..=ty.rank() {
                    let m = ty.coxeter_m(i, j);
                    let st = w.mul(w.simple(i), w.simple(j));
                    let mut acc = w.identity();
                    for k in 1..=m {
                        acc = w.mul(acc, st);
                        if k < m {
                            assert_ne!(acc, w.identity(), "{ty} order of s{i}s{j} below {m}");
                        }
                    }
                    assert_eq!(acc, w.identity(), "{ty} (s{i}s{j})^{m}");
                }
            }
        }
    }
}
