//! Scalar abstraction shared by every algebraic routine in the crate.
//!
//! All constructions are written against [`Scalar`], a field of
//! characteristic zero. The exact instance is [`BigRational`]; the float
//! instances exist so the same code can be driven with `f64`/`f32` for quick
//! numerical sanity checks, but equality-based verification only makes sense
//! for the exact type.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Signed};

/// A field element usable as a polynomial or sequence coefficient.
pub trait Scalar: Num + Neg<Output = Self> + Clone + Debug + Send + Sync + 'static {
    fn from_i64(v: i64) -> Self;

    fn from_usize(v: usize) -> Self {
        Self::from_i64(i64::try_from(v).expect("index fits in i64"))
    }

    /// `num / den`; panics on `den == 0`.
    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i64(num) / Self::from_i64(den)
    }

    /// `(-1)^k`.
    fn sign_pow(k: usize) -> Self {
        if k % 2 == 0 {
            Self::one()
        } else {
            -Self::one()
        }
    }

    fn pow_usize(&self, k: usize) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_usize(v: usize) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
}

impl Scalar for f32 {
    fn from_i64(v: i64) -> Self {
        v as f32
    }
}

/// True when `q` has denominator one.
pub fn is_integer(q: &BigRational) -> bool {
    q.denom().is_one()
}

/// True when `q` is a strictly positive integer.
pub fn is_positive_integer(q: &BigRational) -> bool {
    is_integer(q) && q.is_positive()
}

/// True when `q` is zero.
pub fn is_zero<T: Scalar>(q: &T) -> bool {
    q.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_is_reduced_and_zero_is_canonical() {
        let q = BigRational::from_ratio(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        let z = BigRational::from_ratio(0, -7);
        assert_eq!(z.numer(), &BigInt::from(0));
        assert_eq!(z.denom(), &BigInt::from(1));
    }

    #[test]
    fn pow_and_sign() {
        assert_eq!(BigRational::from_i64(3).pow_usize(4), BigRational::from_i64(81));
        assert_eq!(BigRational::from_i64(5).pow_usize(0), BigRational::one());
        assert_eq!(<f64 as Scalar>::sign_pow(3), -1.0);
        assert_eq!(<BigRational as Scalar>::sign_pow(4), BigRational::one());
    }

    #[test]
    fn integrality() {
        assert!(is_integer(&BigRational::from_ratio(8, 4)));
        assert!(!is_integer(&BigRational::from_ratio(1, 4)));
        assert!(!is_positive_integer(&BigRational::from_i64(0)));
    }
}
