use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::scalar::{parse_rational, Field, FromRational, Ring};
use super::NumError;

/// Element `a0 + a1 z + a2 z^2 + a3 z^3` of `Q(z)` with `z` a primitive
/// eighth root of unity, so `z^4 = -1`.
///
/// The base field is generic; the crate uses `BigRational`. `sqrt(2)` is
/// `z - z^3` and `i` is `z^2`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cyc8<T> {
    pub coeffs: [T; 4],
}

impl<T: Field> Cyc8<T> {
    pub fn new(coeffs: [T; 4]) -> Self {
        Cyc8 { coeffs }
    }

    pub fn from_base(a: T) -> Self {
        Cyc8 { coeffs: [a, T::zero(), T::zero(), T::zero()] }
    }

    pub fn zeta() -> Self {
        Cyc8 { coeffs: [T::zero(), T::one(), T::zero(), T::zero()] }
    }

    pub fn i() -> Self {
        Cyc8 { coeffs: [T::zero(), T::zero(), T::one(), T::zero()] }
    }

    pub fn sqrt2() -> Self {
        Cyc8 { coeffs: [T::zero(), T::one(), T::zero(), -T::one()] }
    }

    /// `z^k` for any integer `k`.
    pub fn zeta_pow(k: i64) -> Self {
        let k = k.rem_euclid(8) as usize;
        let mut c = [T::zero(), T::zero(), T::zero(), T::zero()];
        if k < 4 {
            c[k] = T::one();
        } else {
            c[k - 4] = -T::one();
        }
        Cyc8 { coeffs: c }
    }

    /// The Galois automorphism `z -> z^k` for odd `k`.
    pub fn galois(&self, k: i64) -> Self {
        debug_assert!(k % 2 != 0);
        let mut out = Self::zero();
        for (j, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            out = out + Self::zeta_pow(j as i64 * k).scale(a);
        }
        out
    }

    pub fn scale(&self, a: &T) -> Self {
        Cyc8 { coeffs: self.coeffs.clone().map(|c| c.mul_ref(a)) }
    }

    /// Complex conjugation, `z -> z^7`.
    pub fn conj(&self) -> Self {
        self.galois(7)
    }

    /// Field norm down to the base field.
    pub fn norm(&self) -> T {
        let p = self.clone() * self.galois(3) * self.galois(5) * self.galois(7);
        p.coeffs[0].clone()
    }

    pub fn is_base(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The element as a base-field scalar, if it is one.
    pub fn as_base(&self) -> Option<&T> {
        if self.is_base() {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }
}

impl Cyc8<BigRational> {
    pub fn from_i64(v: i64) -> Self {
        Self::from_base(BigRational::from_i64(v))
    }

    /// Real and imaginary parts as floating point numbers.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let a: Vec<f64> = self.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect();
        (a[0] + h * a[1] - h * a[3], h * a[1] + a[2] + h * a[3])
    }
}

impl<T: Field + FromRational> FromRational for Cyc8<T> {
    fn from_rational(q: &BigRational) -> Self {
        Self::from_base(T::from_rational(q))
    }
}

impl<T: Field> Zero for Cyc8<T> {
    fn zero() -> Self {
        Cyc8 { coeffs: [T::zero(), T::zero(), T::zero(), T::zero()] }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl<T: Field> One for Cyc8<T> {
    fn one() -> Self {
        Self::from_base(T::one())
    }
}

impl<T: Field> Add for Cyc8<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.add_ref(&o)
    }
}

impl<T: Field> Sub for Cyc8<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.sub_ref(&o)
    }
}

impl<T: Field> Mul for Cyc8<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.mul_ref(&o)
    }
}

impl<T: Field> Neg for Cyc8<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Cyc8 { coeffs: self.coeffs.map(|c| -c) }
    }
}

impl<T: Field> Ring for Cyc8<T> {
    fn from_i64(v: i64) -> Self {
        Self::from_base(T::from_i64(v))
    }

    fn add_ref(&self, o: &Self) -> Self {
        let a = &self.coeffs;
        let b = &o.coeffs;
        Cyc8 { coeffs: [a[0].add_ref(&b[0]), a[1].add_ref(&b[1]), a[2].add_ref(&b[2]), a[3].add_ref(&b[3])] }
    }

    fn sub_ref(&self, o: &Self) -> Self {
        let a = &self.coeffs;
        let b = &o.coeffs;
        Cyc8 { coeffs: [a[0].sub_ref(&b[0]), a[1].sub_ref(&b[1]), a[2].sub_ref(&b[2]), a[3].sub_ref(&b[3])] }
    }

    fn mul_ref(&self, o: &Self) -> Self {
        if let Some(b) = o.as_base() {
            return self.scale(b);
        }
        if let Some(a) = self.as_base() {
            return o.scale(a);
        }
        let mut c: [T; 4] = [T::zero(), T::zero(), T::zero(), T::zero()];
        for i in 0..4 {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if o.coeffs[j].is_zero() {
                    continue;
                }
                let p = self.coeffs[i].mul_ref(&o.coeffs[j]);
                let k = i + j;
                if k < 4 {
                    c[k] = c[k].add_ref(&p);
                } else {
                    c[k - 4] = c[k - 4].sub_ref(&p);
                }
            }
        }
        Cyc8 { coeffs: c }
    }

    fn neg_ref(&self) -> Self {
        Cyc8 { coeffs: self.coeffs.clone().map(|c| -c) }
    }
}

impl<T: Field> Field for Cyc8<T> {
    fn inv(&self) -> Option<Self> {
        if let Some(a) = self.as_base() {
            return a.inv().map(Self::from_base);
        }
        let rest = self.galois(3) * self.galois(5) * self.galois(7);
        let n = (self.clone() * rest.clone()).coeffs[0].clone();
        let ni = n.inv()?;
        Some(rest.scale(&ni))
    }
}

impl<T: Field + fmt::Display + Signed> fmt::Display for Cyc8<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*z")?,
                _ => write!(f, "{mag}*z^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Splits `s` into signed summands at top-level `+`/`-` signs.
///
/// A sign directly after `^`, `*`, `/` or `(` belongs to the following factor.
pub(crate) fn split_summands(s: &str) -> Vec<(bool, String)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut neg = false;
    let mut prev: Option<char> = None;
    for ch in s.chars().filter(|c| !c.is_whitespace()) {
        match ch {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            _ => {}
        }
        let unary_ctx =
            matches!(prev, None | Some('^') | Some('*') | Some('/') | Some('(') | Some('[') | Some('{') | Some(','));
        let after_sign = cur.is_empty() && matches!(prev, Some('+') | Some('-'));
        if depth == 0 && (ch == '+' || ch == '-') && after_sign {
            if ch == '-' {
                neg = !neg;
            }
        } else if depth == 0 && (ch == '+' || ch == '-') && !unary_ctx {
            out.push((neg, std::mem::take(&mut cur)));
            neg = ch == '-';
        } else if depth == 0 && (ch == '+' || ch == '-') && prev.is_none() {
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
        prev = Some(ch);
    }
    out.push((neg, cur));
    out
}

impl FromStr for Cyc8<BigRational> {
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
            for factor in body.split('*') {
                let f = match factor {
                    "z" => Self::zeta(),
                    "i" => Self::i(),
                    "sqrt2" => Self::sqrt2(),
                    _ if factor.starts_with("z^") => {
                        let k: i64 = factor[2..].parse().map_err(|_| err())?;
                        Self::zeta_pow(k)
                    }
                    _ => Self::from_base(parse_rational(factor).map_err(|_| err())?),
                };
                term = term * f;
            }
            total = if neg { total - term } else { total + term };
        }
        Ok(total)
    }
}

impl Serialize for Cyc8<BigRational> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Cyc8<BigRational> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = Cyc8<BigRational>;

    fn c(s: &str) -> C {
        s.parse().unwrap()
    }

    #[test]
    fn special_elements() {
        assert_eq!(C::zeta_pow(4), -C::one());
        assert_eq!(C::sqrt2() * C::sqrt2(), C::from_i64(2));
        assert_eq!(C::i() * C::i(), -C::one());
        assert_eq!(C::zeta() * C::zeta_pow(7), C::one());
    }

    #[test]
    fn inverse_of_general_element() {
        let a = c("1/2 + 3*z - 2*z^2 + 5/7*z^3");
        let b = a.inv().unwrap();
        assert_eq!(a * b, C::one());
        assert!(C::zero().inv().is_none());
    }

    #[test]
    fn display_parse_roundtrip() {
        for s in ["0", "7/3", "-1*z + 1*z^3", "1/2 - 3*z^2", "-5*z^3"] {
            let a = c(s);
            assert_eq!(c(&a.to_string()), a, "{s}");
        }
        assert_eq!(c("sqrt2"), C::sqrt2());
        assert_eq!(c("z - z^3").to_string(), "1*z - 1*z^3");
    }

    #[test]
    fn norm_is_multiplicative() {
        let a = c("1 + z");
        let b = c("2 - z^2 + z^3");
        assert_eq!((a.clone() * b.clone()).norm(), a.norm() * b.norm());
    }

    #[test]
    fn float_embedding() {
        let (re, im) = C::sqrt2().to_f64_pair();
        assert!((re - std::f64::consts::SQRT_2).abs() < 1e-12 && im.abs() < 1e-12);
    }

    #[test]
    fn generic_over_float_base() {
        let s = Cyc8::<f64>::sqrt2();
        let sq = s.clone() * s;
        assert!((sq.coeffs[0] - 2.0).abs() < 1e-12);
    }
}
