use std::fmt::Display;

use crate::exactnum::Ring;
use crate::hecke::{clifford_mul, clifford_parity, format_clifford, CliffordMono};
use crate::lincomb::LinComb;
use crate::spin::{format_spin_element, SpinElement, SpinHecke, SpinMono};

/// `c^eps (x) b^alpha t_w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorMono {
    pub c: CliffordMono,
    pub s: SpinMono,
}

pub type TensorElement<R> = LinComb<TensorMono, R>;
pub type CliffordElement<R> = LinComb<CliffordMono, R>;

/// `C_n (x) saH` with `(a (x) b)(a' (x) b') = (-1)^{|b||a'|} aa' (x) bb'`.
pub struct TensorAlgebra<R> {
    pub spin: SpinHecke<R>,
}

impl<R: Ring> TensorAlgebra<R> {
    pub fn new(spin: SpinHecke<R>) -> Self {
        TensorAlgebra { spin }
    }

    pub fn n(&self) -> usize {
        self.spin.n()
    }

    pub fn one(&self) -> TensorElement<R> {
        self.pure(&CliffordElement::monomial(0, R::one()), &self.spin.one())
    }

    pub fn scalar(&self, c: R) -> TensorElement<R> {
        self.one().scale(&c)
    }

    /// `a (x) b`.
    pub fn pure(&self, a: &CliffordElement<R>, b: &SpinElement<R>) -> TensorElement<R> {
        let mut out = TensorElement::zero();
        for (c, x) in a.terms() {
            for (s, y) in b.terms() {
                out.add_term(TensorMono { c: *c, s: *s }, x.mul_ref(y));
            }
        }
        out
    }

    pub fn clifford(&self, i: usize) -> CliffordElement<R> {
        CliffordElement::monomial(1 << (i - 1), R::one())
    }

    pub fn clifford_product(&self, a: &CliffordElement<R>, b: &CliffordElement<R>) -> CliffordElement<R> {
        let mut out = CliffordElement::zero();
        for (x, p) in a.terms() {
            for (y, q) in b.terms() {
                let (neg, z) = clifford_mul(*x, *y);
                let c = p.mul_ref(q);
                out.add_term(z, if neg { c.neg_ref() } else { c });
            }
        }
        out
    }

    pub fn mul_mono(&self, a: &TensorMono, b: &TensorMono) -> TensorElement<R> {
        let (neg_c, c) = clifford_mul(a.c, b.c);
        let super_sign = self.spin.mono_is_odd(&a.s) && clifford_parity(b.c);
        let prod = self.spin.mul_mono(&a.s, &b.s).expect("spin product within fuel");
        let mut out = TensorElement::zero();
        for (s, x) in prod {
            out.add_term(TensorMono { c, s }, if neg_c ^ super_sign { x.neg_ref() } else { x });
        }
        out
    }

    pub fn mul(&self, a: &TensorElement<R>, b: &TensorElement<R>) -> TensorElement<R> {
        let mut out = TensorElement::zero();
        for (m, x) in a.terms() {
            for (k, y) in b.terms() {
                out.add_scaled(&self.mul_mono(m, k), &x.mul_ref(y));
            }
        }
        out
    }

    pub fn product(&self, factors: &[TensorElement<R>]) -> TensorElement<R> {
        factors.iter().fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    pub fn mono_is_odd(&self, m: &TensorMono) -> bool {
        clifford_parity(m.c) ^ self.spin.mono_is_odd(&m.s)
    }

    /// `Some(odd)` when every term has the same parity.
    pub fn parity(&self, a: &TensorElement<R>) -> Option<bool> {
        let mut it = a.monomials().map(|m| self.mono_is_odd(m));
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    /// Highest b-degree part.
    pub fn top_part(&self, a: &TensorElement<R>) -> TensorElement<R> {
        let deg = |m: &TensorMono| m.s.alpha.iter().map(|&x| x as usize).sum::<usize>();
        let top = a.monomials().map(deg).max().unwrap_or(0);
        LinComb::from_terms(a.terms().filter(|(m, _)| deg(m) == top).map(|(m, x)| (*m, x.clone())))
    }

    pub fn format(&self, a: &TensorElement<R>) -> String
    where
        R: Display,
    {
        if a.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = a
            .terms()
            .map(|(m, x)| {
                let spin = format_spin_element(&self.spin, &SpinElement::monomial(m.s, R::one()));
                let c = if m.c == 0 { "1".to_string() } else { format_clifford(m.c) };
                format!("({x}) {c} (x) {spin}")
            })
            .collect();
        parts.join(" + ")
    }
}

/// Whether left multiplication by `a` is invertible on `C_n`.
pub fn clifford_is_unit<R: crate::exactnum::Field>(n: usize, a: &CliffordElement<R>) -> bool {
    use crate::linalg::Echelon;
    let mut ech = Echelon::new();
    for e in 0u16..1 << n {
        let mut row: Vec<(usize, R)> = Vec::new();
        for (x, c) in a.terms() {
            let (neg, z) = clifford_mul(*x, e);
            row.push((z as usize, if neg { c.neg_ref() } else { c.clone() }));
        }
        row.sort_by_key(|(k, _)| *k);
        ech.insert(row);
    }
    ech.rank() == 1 << n
}
