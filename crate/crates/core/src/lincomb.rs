//! Finite linear combinations of monomials.

use std::collections::BTreeMap;

use crate::exactnum::Ring;

/// Sparse linear combination with no zero coefficients, iterated in monomial
/// order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinComb<M: Ord, R> {
    terms: BTreeMap<M, R>,
}

impl<M: Ord + Clone, R: Ring> Default for LinComb<M, R> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<M: Ord + Clone, R: Ring> LinComb<M, R> {
    pub fn zero() -> Self {
        LinComb { terms: BTreeMap::new() }
    }

    pub fn monomial(m: M, c: R) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (M, R)>) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn add_term(&mut self, m: M, c: R) {
        if c.is_zero() {
            return;
        }
        if let Some(e) = self.terms.get_mut(&m) {
            *e = e.add_ref(&c);
            if e.is_zero() {
                self.terms.remove(&m);
            }
        } else {
            self.terms.insert(m, c);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &R) {
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x.mul_ref(c));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&M, &R)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (M, R)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &M) -> R {
        self.terms.get(m).cloned().unwrap_or_else(R::zero)
    }

    pub fn monomials(&self) -> impl Iterator<Item = &M> {
        self.terms.keys()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.neg_ref());
        }
        out
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = Self::zero();
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x.mul_ref(c));
        }
        out
    }

    pub fn neg(&self) -> Self {
        LinComb { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg_ref())).collect() }
    }

    /// Applies `f` to every coefficient, dropping zeros.
    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> LinComb<M, S> {
        LinComb::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }
}
