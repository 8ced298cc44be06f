//! Univariate polynomials over a [`Scalar`] field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::combinatorics::factorial;
use crate::error::{Error, Result};
use crate::Scalar;

/// Polynomial `sum_k coeffs[k] x^k`.
///
/// The coefficient vector is trimmed so its last entry is nonzero; the zero
/// polynomial is the empty vector and has degree `None`.
#[derive(Clone, Debug, PartialEq)]
pub struct DensePoly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> DensePoly<T> {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// `c x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// Builds from ascending coefficients, trimming high zeros.
    pub fn from_coeffs(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Nonzero terms as `(exponent, coefficient)` in descending exponent order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (usize, &T)> {
        self.coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Drops every term of degree above `max_degree`.
    pub fn truncate(&self, max_degree: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(max_degree + 1).cloned().collect())
    }

    pub fn derivative(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * T::from_usize(k))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Divides by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => {
                let inv = T::one() / lc.clone();
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division: `self = divisor * quotient + remainder` with
    /// `deg(remainder) < deg(divisor)`.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZeroPolynomial)?;
        let lc = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![T::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = rem[i + dd].clone() / lc.clone();
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[i + j] = rem[i + j].clone() - c.clone() * d.clone();
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Exact quotient; errors if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.divrem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }
}

/// `sum_{k=0}^{order} x^k / k!`.
pub fn exp_truncated<T: Scalar>(order: usize) -> DensePoly<T> {
    DensePoly::from_coeffs((0..=order).map(|k| T::one() / factorial::<T>(k)).collect())
}

impl<T: Scalar> Add for &DensePoly<T> {
    type Output = DensePoly<T>;

    fn add(self, rhs: Self) -> DensePoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DensePoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Sub for &DensePoly<T> {
    type Output = DensePoly<T>;

    fn sub(self, rhs: Self) -> DensePoly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DensePoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Scalar> Mul for &DensePoly<T> {
    type Output = DensePoly<T>;

    fn mul(self, rhs: Self) -> DensePoly<T> {
        if self.is_zero() || rhs.is_zero() {
            return DensePoly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        DensePoly::from_coeffs(out)
    }
}

impl<T: Scalar> Neg for &DensePoly<T> {
    type Output = DensePoly<T>;

    fn neg(self) -> DensePoly<T> {
        DensePoly::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for DensePoly<T> {
            type Output = DensePoly<T>;
            fn $m(self, rhs: Self) -> DensePoly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<T: Scalar> Neg for DensePoly<T> {
    type Output = DensePoly<T>;

    fn neg(self) -> DensePoly<T> {
        -&self
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for DensePoly<T> {
    /// Descending powers with explicit signs, e.g. `x^2 - 5x + 2`; unit
    /// coefficients are omitted on non-constant terms.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms_desc() {
            let negative = format!("{c}").starts_with('-');
            let mag = if negative { -c.clone() } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let unit = mag == T::one();
            let text = format!("{mag}");
            let text = if k > 0 && text.contains('/') { format!("({text})") } else { text };
            match k {
                0 => write!(f, "{text}")?,
                1 if unit => write!(f, "x")?,
                1 => write!(f, "{text}x")?,
                _ if unit => write!(f, "x^{k}")?,
                _ => write!(f, "{text}x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use proptest::prelude::*;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn poly(c: &[i64]) -> DensePoly<Rational> {
        DensePoly::from_coeffs(c.iter().map(|&v| q(v)).collect())
    }

    #[test]
    fn eval_and_derivative() {
        let p = poly(&[2, -5, 1]);
        assert_eq!(p.eval(&q(0)), q(2));
        assert_eq!(p.eval(&q(5)), q(2));
        assert!(poly(&[7]).derivative().is_zero());
        assert_eq!(p.derivative(), poly(&[-5, 2]));
        assert_eq!(DensePoly::<Rational>::zero().degree(), None);
    }

    #[test]
    fn divrem_identity_and_errors() {
        let p = poly(&[2, -5, 1]);
        let (quo, rem) = p.divrem(&p).unwrap();
        assert_eq!(quo, DensePoly::one());
        assert!(rem.is_zero());
        assert_eq!(
            p.divrem(&DensePoly::zero()).unwrap_err(),
            Error::DivisionByZeroPolynomial
        );
        let (quo, rem) = poly(&[1, 0, 1]).divrem(&poly(&[-1, 1])).unwrap();
        assert_eq!(quo, poly(&[1, 1]));
        assert_eq!(rem, poly(&[2]));
    }

    #[test]
    fn exp_series() {
        assert_eq!(exp_truncated::<Rational>(0), DensePoly::one());
        assert_eq!(
            exp_truncated::<Rational>(2),
            DensePoly::from_coeffs(vec![q(1), q(1), Rational::from_ratio(1, 2)])
        );
        assert_eq!(exp_truncated::<Rational>(4).coeff(4), Rational::from_ratio(1, 24));
    }

    #[test]
    fn display_matches_table_style() {
        assert_eq!(poly(&[2, -5, 1]).to_string(), "x^2 - 5x + 2");
        assert_eq!(poly(&[-11, 8, -1]).to_string(), "-x^2 + 8x - 11");
        assert_eq!(poly(&[-1]).to_string(), "-1");
        assert_eq!(poly(&[1, -1]).to_string(), "-x + 1");
        assert_eq!(DensePoly::<Rational>::zero().to_string(), "0");
        let half = DensePoly::from_coeffs(vec![Rational::from_ratio(1, 2), q(0), Rational::from_ratio(-1, 3)]);
        assert_eq!(half.to_string(), "-(1/3)x^2 + 1/2");
    }

    #[test]
    fn float_polys_work() {
        let p = DensePoly::<f64>::from_coeffs(vec![1.0, -1.0, 1.0 / 6.0]);
        assert!((p.eval(&6.0) - 1.0).abs() < 1e-12);
    }

    fn arb_poly() -> impl Strategy<Value = DensePoly<Rational>> {
        prop::collection::vec((-20i64..20, 1i64..6), 0..8).prop_map(|v| {
            DensePoly::from_coeffs(v.into_iter().map(|(n, d)| Rational::from_ratio(n, d)).collect())
        })
    }

    proptest! {
        #[test]
        fn divrem_round_trips(p in arb_poly(), d in arb_poly()) {
            prop_assume!(!d.is_zero());
            let (quo, rem) = p.divrem(&d).unwrap();
            prop_assert_eq!(&(&d * &quo) + &rem, p);
            if let Some(rd) = rem.degree() {
                prop_assert!(rd < d.degree().unwrap());
            }
        }

        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            let x = Rational::from_ratio(3, 7);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        }
    }
}
