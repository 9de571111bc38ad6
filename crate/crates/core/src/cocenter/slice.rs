use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use num_traits::Zero;

use crate::exactnum::{Field, Ring};
use crate::hecke::{format_clifford, HeckeClifford, PBWMono};
use crate::lincomb::LinComb;
use crate::mono::{exps_of_degree, format_exps, total_degree, unit, ZERO_EXPS};
use crate::spin::{SpinHecke, SpinMono};

/// What the rank pipeline needs from a filtered superalgebra with a PBW basis.
pub trait CocenterAlgebra: Sync {
    type Mono: Copy + Ord + Hash + Send + Sync + Debug;
    type Coeff: Field;

    fn label(&self) -> String;
    fn degree(&self, m: &Self::Mono) -> usize;
    fn is_odd(&self, m: &Self::Mono) -> bool;
    /// PBW monomials of exactly this degree, in a fixed order.
    fn monomials(&self, degree: usize) -> Vec<Self::Mono>;
    /// The algebra generators, each a single PBW monomial.
    fn generator_monos(&self) -> Vec<Self::Mono>;
    fn mul_monos(&self, a: &Self::Mono, b: &Self::Mono) -> Vec<(Self::Mono, Self::Coeff)>;
    fn format_mono(&self, m: &Self::Mono) -> String;

    fn even_monomials(&self, degree: usize) -> Vec<Self::Mono> {
        self.monomials(degree).into_iter().filter(|m| !self.is_odd(m)).collect()
    }

    /// `[a, b] = ab - ba` for monomials.
    fn commutator_monos(&self, a: &Self::Mono, b: &Self::Mono) -> LinComb<Self::Mono, Self::Coeff> {
        let mut acc: HashMap<Self::Mono, Self::Coeff> = HashMap::new();
        for (m, c) in self.mul_monos(a, b) {
            let e = acc.entry(m).or_insert_with(Self::Coeff::zero);
            *e = e.add_ref(&c);
        }
        for (m, c) in self.mul_monos(b, a) {
            let e = acc.entry(m).or_insert_with(Self::Coeff::zero);
            *e = e.sub_ref(&c);
        }
        LinComb::from_terms(acc)
    }
}

impl<R: Field> CocenterAlgebra for HeckeClifford<R> {
    type Mono = PBWMono;
    type Coeff = R;

    fn label(&self) -> String {
        self.ty().name()
    }

    fn degree(&self, m: &PBWMono) -> usize {
        m.x_degree()
    }

    fn is_odd(&self, m: &PBWMono) -> bool {
        m.is_odd()
    }

    fn monomials(&self, degree: usize) -> Vec<PBWMono> {
        let n = self.n();
        let mut out = Vec::new();
        for alpha in exps_of_degree(n, degree) {
            for eps in 0..(1u16 << n) {
                for w in self.group().elements() {
                    out.push(PBWMono { alpha, eps, w });
                }
            }
        }
        out
    }

    fn generator_monos(&self) -> Vec<PBWMono> {
        let n = self.n();
        let e = self.group().identity();
        let mut out: Vec<PBWMono> = (1..=n).map(|i| PBWMono { alpha: unit(i), eps: 0, w: e }).collect();
        out.extend((1..=n).map(|i| PBWMono { alpha: ZERO_EXPS, eps: 1 << (i - 1), w: e }));
        out.extend((1..=self.group().rank()).map(|i| PBWMono { alpha: ZERO_EXPS, eps: 0, w: self.group().simple(i) }));
        out
    }

    fn mul_monos(&self, a: &PBWMono, b: &PBWMono) -> Vec<(PBWMono, R)> {
        self.mul_mono(a, b).expect("rewriting fuel exhausted")
    }

    fn format_mono(&self, m: &PBWMono) -> String {
        let mut parts = Vec::new();
        if m.x_degree() > 0 {
            parts.push(format_exps(&m.alpha, "x"));
        }
        if m.eps != 0 {
            parts.push(format_clifford(m.eps));
        }
        parts.push(crate::hecke::window_text(&self.group().window(m.w)));
        parts.join(" * ")
    }
}

impl<R: Field> CocenterAlgebra for SpinHecke<R> {
    type Mono = SpinMono;
    type Coeff = R;

    fn label(&self) -> String {
        self.ty().name()
    }

    fn degree(&self, m: &SpinMono) -> usize {
        total_degree(&m.alpha)
    }

    fn is_odd(&self, m: &SpinMono) -> bool {
        self.mono_is_odd(m)
    }

    fn monomials(&self, degree: usize) -> Vec<SpinMono> {
        let mut out = Vec::new();
        for alpha in exps_of_degree(self.n(), degree) {
            for w in self.group().elements() {
                out.push(SpinMono { alpha, w });
            }
        }
        out
    }

    fn generator_monos(&self) -> Vec<SpinMono> {
        let e = self.group().identity();
        let mut out: Vec<SpinMono> = (1..=self.n()).map(|i| SpinMono { alpha: unit(i), w: e }).collect();
        out.extend((1..=self.group().rank()).map(|i| SpinMono { alpha: ZERO_EXPS, w: self.group().simple(i) }));
        out
    }

    fn mul_monos(&self, a: &SpinMono, b: &SpinMono) -> Vec<(SpinMono, R)> {
        self.mul_mono(a, b).expect("rewriting fuel exhausted")
    }

    fn format_mono(&self, m: &SpinMono) -> String {
        let mut parts = Vec::new();
        if total_degree(&m.alpha) > 0 {
            parts.push(format_exps(&m.alpha, "b"));
        }
        parts.push(format!("t{}", crate::hecke::window_text(&self.group().window(m.w))));
        parts.join(" * ")
    }
}

/// Coordinates for a set of monomials.
#[derive(Clone, Debug)]
pub struct MonoIndex<M: Ord + Hash + Copy> {
    monos: Vec<M>,
    index: HashMap<M, usize>,
}

impl<M: Ord + Hash + Copy> MonoIndex<M> {
    pub fn new(monos: Vec<M>) -> Self {
        let index = monos.iter().enumerate().map(|(k, m)| (*m, k)).collect();
        MonoIndex { monos, index }
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn get(&self, m: &M) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn mono(&self, k: usize) -> &M {
        &self.monos[k]
    }

    pub fn monos(&self) -> &[M] {
        &self.monos
    }

    /// Sparse row of an element; `None` if it leaves the indexed span.
    pub fn row<R: Ring>(&self, a: &LinComb<M, R>) -> Option<Vec<(usize, R)>> {
        let mut row = Vec::with_capacity(a.len());
        for (m, c) in a.terms() {
            row.push((self.get(m)?, c.clone()));
        }
        row.sort_by_key(|(k, _)| *k);
        Some(row)
    }
}
