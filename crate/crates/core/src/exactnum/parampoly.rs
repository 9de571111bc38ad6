use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::cyc8::{split_summands, Cyc8};
use super::scalar::{FromRational, Ring};
use super::NumError;

/// Polynomial in the parameters `u` and `v`, keyed by `(deg_u, deg_v)`.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ParamPoly<F> {
    terms: BTreeMap<(u32, u32), F>,
}

impl<F: Ring> ParamPoly<F> {
    pub fn constant(c: F) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(du: u32, dv: u32, c: F) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((du, dv), c);
        }
        ParamPoly { terms }
    }

    pub fn u() -> Self {
        Self::monomial(1, 0, F::one())
    }

    pub fn v() -> Self {
        Self::monomial(0, 1, F::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, du: u32, dv: u32) -> F {
        self.terms.get(&(du, dv)).cloned().unwrap_or_else(F::zero)
    }

    fn add_term(&mut self, key: (u32, u32), c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(e) => {
                *e = e.add_ref(&c);
                if e.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    /// Substitutes numbers for `u` and `v`.
    pub fn eval(&self, u0: &F, v0: &F) -> F {
        let mut acc = F::zero();
        for (&(du, dv), c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..du {
                t = t.mul_ref(u0);
            }
            for _ in 0..dv {
                t = t.mul_ref(v0);
            }
            acc = acc.add_ref(&t);
        }
        acc
    }

    /// The constant term, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<F> {
        match self.terms.len() {
            0 => Some(F::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }
}

impl<F: FromRational> FromRational for ParamPoly<F> {
    fn from_rational(q: &BigRational) -> Self {
        Self::constant(F::from_rational(q))
    }
}

impl<F: Ring> Zero for ParamPoly<F> {
    fn zero() -> Self {
        ParamPoly { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<F: Ring> One for ParamPoly<F> {
    fn one() -> Self {
        Self::constant(F::one())
    }
}

impl<F: Ring> Add for ParamPoly<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.add_ref(&o)
    }
}

impl<F: Ring> Sub for ParamPoly<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.sub_ref(&o)
    }
}

impl<F: Ring> Mul for ParamPoly<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.mul_ref(&o)
    }
}

impl<F: Ring> Neg for ParamPoly<F> {
    type Output = Self;
    fn neg(self) -> Self {
        self.neg_ref()
    }
}

impl<F: Ring> Ring for ParamPoly<F> {
    fn from_i64(v: i64) -> Self {
        Self::constant(F::from_i64(v))
    }

    fn add_ref(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    fn sub_ref(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(*k, c.neg_ref());
        }
        out
    }

    fn mul_ref(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            for (&(x, y), d) in &o.terms {
                out.add_term((a + x, b + y), c.mul_ref(d));
            }
        }
        out
    }

    fn neg_ref(&self) -> Self {
        ParamPoly { terms: self.terms.iter().map(|(k, c)| (*k, c.neg_ref())).collect() }
    }
}

impl fmt::Display for ParamPoly<Cyc8<BigRational>> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(du, dv), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = c.to_string();
            if c.is_base() {
                write!(f, "{cs}")?;
            } else {
                write!(f, "({cs})")?;
            }
            match du {
                0 => {}
                1 => write!(f, "*u")?,
                _ => write!(f, "*u^{du}")?,
            }
            match dv {
                0 => {}
                1 => write!(f, "*v")?,
                _ => write!(f, "*v^{dv}")?,
            }
        }
        Ok(())
    }
}

fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + ch.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

impl FromStr for ParamPoly<Cyc8<BigRational>> {
    type Err = NumError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || NumError::Parse(s.to_string());
        if s.trim().is_empty() {
            return Err(err());
        }
        let mut total = Self::zero();
        for (neg, body) in split_summands(s) {
            if body.is_empty() {
                return Err(err());
            }
            let mut term = Self::one();
            for factor in split_top_level(&body, '*') {
                let f = if let Some(inner) = factor.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
                    inner.parse::<Self>()?
                } else if factor == "u" {
                    Self::u()
                } else if factor == "v" {
                    Self::v()
                } else if let Some(k) = factor.strip_prefix("u^") {
                    Self::monomial(k.parse().map_err(|_| err())?, 0, Cyc8::one())
                } else if let Some(k) = factor.strip_prefix("v^") {
                    Self::monomial(0, k.parse().map_err(|_| err())?, Cyc8::one())
                } else {
                    Self::constant(factor.parse::<Cyc8<BigRational>>().map_err(|_| err())?)
                };
                term = term * f;
            }
            total = if neg { total - term } else { total + term };
        }
        Ok(total)
    }
}

impl Serialize for ParamPoly<Cyc8<BigRational>> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ParamPoly<Cyc8<BigRational>> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
