use std::sync::Arc;

use num_traits::Zero;

use crate::hecke::{Gen, HeckeClifford, PBWElement};
use crate::weyl::{ElemId, Family, WeylGroup};
use crate::Cyclotomic;

/// `beta_i` in the Clifford algebra, as an element of the Hecke-Clifford algebra.
fn beta(h: &HeckeClifford<Cyclotomic>, i: usize) -> PBWElement<Cyclotomic> {
    let n = h.n();
    let c = |k| h.generator(Gen::C(k)).expect("index in range");
    let half_root2 = Cyclotomic::sqrt2().scale(&crate::Rational::new(1.into(), 2.into()));
    if i < n {
        c(i).sub(&c(i + 1)).scale(&half_root2)
    } else {
        match h.ty().family {
            Family::B => c(n),
            Family::D => c(n - 1).add(&c(n)).scale(&half_root2),
            Family::A => unreachable!("type A has no node n"),
        }
    }
}

/// Images `e_g` of every `t_g` under `t_i -> i beta_i s_i`, indexed by element id.
pub fn embedding_images(h: &HeckeClifford<Cyclotomic>) -> Vec<PBWElement<Cyclotomic>> {
    let group = h.group();
    let gens: Vec<PBWElement<Cyclotomic>> = (1..=group.rank())
        .map(|i| {
            let s = h.generator(Gen::S(i)).expect("index in range");
            h.mul(&beta(h, i), &s).scale(&Cyclotomic::i())
        })
        .collect();
    let mut images: Vec<Option<PBWElement<Cyclotomic>>> = vec![None; group.order()];
    images[group.identity() as usize] = Some(h.one());
    // Elements are sorted by length, so e_{s_i g} is known when g is reached.
    for g in group.elements().skip(1) {
        let i = group.word(g)[0] as usize;
        let rest = group.left_mul(i, g);
        let prev = images[rest as usize].as_ref().expect("shorter element done");
        images[g as usize] = Some(h.mul(&gens[i - 1], prev));
    }
    images.into_iter().map(|e| e.expect("all elements reached")).collect()
}

/// `t_i t_g = (-1)^neg t_{s_i g}` for every simple `i` and element `g`.
#[derive(Clone, Debug)]
pub struct CocycleTable {
    group: Arc<WeylGroup>,
    neg: Vec<Vec<bool>>,
}

impl CocycleTable {
    pub fn compute(group: Arc<WeylGroup>) -> Self {
        let h = HeckeClifford::<Cyclotomic>::new(group.clone(), Cyclotomic::zero(), Cyclotomic::zero());
        let images = embedding_images(&h);
        let mut neg = vec![vec![false; group.order()]; group.rank()];
        for i in 1..=group.rank() {
            let ei = &images[group.simple(i) as usize];
            for g in group.elements() {
                let lhs = h.mul(ei, &images[g as usize]);
                let rhs = &images[group.left_mul(i, g) as usize];
                neg[i - 1][g as usize] = if &lhs == rhs {
                    false
                } else if lhs == rhs.neg() {
                    true
                } else {
                    panic!("embedding image of t_{i} t_g is not +-t_(s_i g)");
                };
            }
        }
        CocycleTable { group, neg }
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn gen_sign(&self, i: usize, g: ElemId) -> bool {
        self.neg[i - 1][g as usize]
    }

    /// `t_g t_h = (-1)^neg t_{gh}`.
    pub fn sign(&self, g: ElemId, h: ElemId) -> bool {
        let mut neg = false;
        let mut acc = h;
        for &i in self.group.word(g).iter().rev() {
            neg ^= self.gen_sign(i as usize, acc);
            acc = self.group.left_mul(i as usize, acc);
        }
        neg
    }
}
