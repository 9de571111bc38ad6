use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::NumError;

/// Commutative coefficient ring used by every algebra in the crate.
///
/// The `*_ref` methods exist so hot loops can avoid cloning big integers;
/// the defaults simply clone.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn from_i64(v: i64) -> Self;

    fn add_ref(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.clone() - other.clone()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    fn neg_ref(&self) -> Self {
        -self.clone()
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;

    fn div_ref(&self, other: &Self) -> Result<Self, NumError> {
        let inv = other.inv().ok_or(NumError::DivisionByZero)?;
        Ok(self.mul_ref(&inv))
    }
}

impl Ring for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Rings containing the rationals.
pub trait FromRational: Ring {
    fn from_rational(q: &BigRational) -> Self;
}

impl FromRational for BigRational {
    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }
}

impl FromRational for f64 {
    fn from_rational(q: &BigRational) -> Self {
        use num_traits::ToPrimitive;
        q.to_f64().unwrap_or(f64::NAN)
    }
}

// Floating point instances are only meant for numerical evaluation; zero tests
// are exact comparisons, so nothing rank-related should run over them.
macro_rules! float_ring {
    ($t:ty) => {
        impl Ring for $t {
            fn from_i64(v: i64) -> Self {
                v as $t
            }
        }
        impl Field for $t {
            fn inv(&self) -> Option<Self> {
                if *self == 0.0 {
                    None
                } else {
                    Some(1.0 / *self)
                }
            }
        }
    };
}

float_ring!(f32);
float_ring!(f64);

/// Parses `"p"`, `"-p"` or `"p/q"` into a rational.
pub fn parse_rational(s: &str) -> Result<BigRational, NumError> {
    let t = s.trim();
    let err = || NumError::Parse(s.to_string());
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| err())?;
            let q: BigInt = q.trim().parse().map_err(|_| err())?;
            if q.is_zero() {
                return Err(NumError::DivisionByZero);
            }
            Ok(BigRational::new(p, q))
        }
        None => {
            let p: BigInt = t.parse().map_err(|_| err())?;
            Ok(BigRational::from_integer(p))
        }
    }
}
