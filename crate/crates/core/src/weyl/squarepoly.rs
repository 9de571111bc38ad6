use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::group::{ElemId, WeylGroup};
use crate::exactnum::Ring;
use crate::mono::{add_exps, format_exps, total_degree, unit, Exps, ZERO_EXPS};
use crate::Rational;

/// Polynomial in `y_i = x_i^2` with rational coefficients, i.e. an element of
/// the symmetric algebra on which `W` acts by permuting the `y_i` (signs
/// disappear after squaring).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SquarePoly {
    terms: BTreeMap<Exps, Rational>,
}

impl SquarePoly {
    pub fn zero() -> Self {
        SquarePoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(ZERO_EXPS, Rational::one())
    }

    pub fn y(i: usize) -> Self {
        Self::monomial(unit(i), Rational::one())
    }

    pub fn monomial(e: Exps, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    pub fn add_term(&mut self, e: Exps, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &SquarePoly) -> SquarePoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &SquarePoly) -> SquarePoly {
        self.add(&o.scale(&-Rational::one()))
    }

    pub fn scale(&self, a: &Rational) -> SquarePoly {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, c.mul_ref(a));
        }
        out
    }

    pub fn mul(&self, o: &SquarePoly) -> SquarePoly {
        let mut out = Self::zero();
        for (a, c) in &self.terms {
            for (b, d) in &o.terms {
                out.add_term(add_exps(a, b), c.mul_ref(d));
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> SquarePoly {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Degree in the `y` variables, `None` for zero.
    pub fn y_degree(&self) -> Option<usize> {
        self.terms.keys().map(total_degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(total_degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// `w . f`, sending `y_i` to `y_|w(i)|`.
    pub fn act(&self, group: &WeylGroup, w: ElemId) -> SquarePoly {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut f = ZERO_EXPS;
            for i in 0..group.n() {
                let j = group.apply(w, i as i32 + 1).unsigned_abs() as usize - 1;
                f[j] = e[i];
            }
            out.add_term(f, c.clone());
        }
        out
    }

    /// Elementary symmetric polynomial `e_k(y_1..y_n)`.
    pub fn elementary(k: usize, n: usize) -> SquarePoly {
        let mut out = Self::zero();
        for mask in 0u32..1 << n {
            if mask.count_ones() as usize != k {
                continue;
            }
            let mut e = ZERO_EXPS;
            for i in 0..n {
                if mask & (1 << i) != 0 {
                    e[i] = 1;
                }
            }
            out.add_term(e, Rational::one());
        }
        out
    }

    /// Leading exponent in decreasing lexicographic order.
    pub fn leading(&self) -> Option<(&Exps, &Rational)> {
        self.terms.iter().next_back()
    }
}

impl fmt::Display for SquarePoly {
    /// Written in the `x` variables, so `y_1` prints as `x1^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let doubled = e.map(|a| 2 * a);
            let m = format_exps(&doubled, "x");
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (m.is_empty(), c.is_one()) {
                (true, _) => write!(f, "{c}")?,
                (false, true) => write!(f, "{m}")?,
                (false, false) => write!(f, "{c}*{m}")?,
            }
        }
        Ok(())
    }
}

impl serde::Serialize for SquarePoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
