//! Truncated Laurent expansions with an Euler-constant component and a
//! separate `x^k ln x` channel.
//!
//! The argument is taken real and positive, so every logarithm that shows up
//! (`ln(-z)`, `ln|z|`, `ln z`) lands in the single `ln x` channel.

use std::fmt;

use crate::Scalar;

/// `rational + gamma * γ_E`.
#[derive(Clone, Debug, PartialEq)]
pub struct EulerLinear<T> {
    pub rational: T,
    pub gamma: T,
}

impl<T: Scalar> EulerLinear<T> {
    pub fn zero() -> Self {
        Self { rational: T::zero(), gamma: T::zero() }
    }

    pub fn rational(r: T) -> Self {
        Self { rational: r, gamma: T::zero() }
    }

    /// `γ_E` itself.
    pub fn euler_gamma() -> Self {
        Self { rational: T::zero(), gamma: T::one() }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            rational: self.rational.clone() + other.rational.clone(),
            gamma: self.gamma.clone() + other.gamma.clone(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self { rational: self.rational.clone() * c.clone(), gamma: self.gamma.clone() * c.clone() }
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for EulerLinear<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rational.is_zero(), self.gamma.is_zero()) {
            (_, true) => write!(f, "{}", self.rational),
            (true, false) => write!(f, "{}*g", self.gamma),
            (false, false) => write!(f, "{} + {}*g", self.rational, self.gamma),
        }
    }
}

/// Which part of a [`LaurentLogExpansion`] a coefficient lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Channel {
    /// Coefficient of `x^{-k}`, `k >= 1`.
    Pole,
    /// Coefficient of `x^k ln x`.
    Log,
    /// γ_E-component of the coefficient of `x^k`.
    Gamma,
    /// Rational component of the coefficient of `x^k`.
    Rational,
}

impl Channel {
    pub const ALL: [Channel; 4] = [Channel::Pole, Channel::Log, Channel::Gamma, Channel::Rational];

    pub fn name(self) -> &'static str {
        match self {
            Channel::Pole => "pole",
            Channel::Log => "log",
            Channel::Gamma => "gamma",
            Channel::Rational => "rational",
        }
    }
}

/// A coefficient on which two expansions disagree. `exponent` is the power of
/// `x` (negative in the pole channel).
#[derive(Clone, Debug, PartialEq)]
pub struct Mismatch<T> {
    pub channel: Channel,
    pub exponent: i64,
    pub lhs: T,
    pub rhs: T,
}

/// `sum_{k>=1} pole[k-1] x^{-k} + sum_{k=0}^{M} (r_k + g_k γ_E) x^k
///  + sum_{k=0}^{M} l_k x^k ln x`.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentLogExpansion<T> {
    pole: Vec<T>,
    regular: Vec<EulerLinear<T>>,
    log: Vec<T>,
    order: usize,
}

impl<T: Scalar> LaurentLogExpansion<T> {
    /// The zero expansion truncated at `x^order`.
    pub fn new(order: usize) -> Self {
        Self {
            pole: Vec::new(),
            regular: vec![EulerLinear::zero(); order + 1],
            log: vec![T::zero(); order + 1],
            order,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Highest `k` with a stored (possibly zero) `x^{-k}` slot.
    pub fn pole_len(&self) -> usize {
        self.pole.len()
    }

    /// Adds `v x^{-k}`, `k >= 1`.
    pub fn add_pole(&mut self, k: usize, v: T) {
        assert!(k >= 1, "pole exponents start at 1");
        if self.pole.len() < k {
            self.pole.resize(k, T::zero());
        }
        self.pole[k - 1] = self.pole[k - 1].clone() + v;
    }

    /// Adds `v x^k`; silently dropped above the truncation order.
    pub fn add_regular(&mut self, k: usize, v: EulerLinear<T>) {
        if let Some(slot) = self.regular.get_mut(k) {
            *slot = slot.add(&v);
        }
    }

    pub fn add_rational(&mut self, k: usize, v: T) {
        self.add_regular(k, EulerLinear::rational(v));
    }

    /// Adds `v x^k ln x`; dropped above the truncation order.
    pub fn add_log(&mut self, k: usize, v: T) {
        if let Some(slot) = self.log.get_mut(k) {
            *slot = slot.clone() + v;
        }
    }

    /// Adds `other` term by term (its terms above `self.order` are dropped).
    pub fn add_expansion(&mut self, other: &Self) {
        for k in 1..=other.pole.len() {
            self.add_pole(k, other.pole(k));
        }
        for k in 0..=other.order {
            self.add_regular(k, other.regular(k));
            self.add_log(k, other.log(k));
        }
    }

    /// Every coefficient multiplied by `c`.
    pub fn scaled(&self, c: &T) -> Self {
        Self {
            pole: self.pole.iter().map(|v| v.clone() * c.clone()).collect(),
            regular: self.regular.iter().map(|v| v.scale(c)).collect(),
            log: self.log.iter().map(|v| v.clone() * c.clone()).collect(),
            order: self.order,
        }
    }

    /// Coefficient of `x^{-k}`.
    pub fn pole(&self, k: usize) -> T {
        k.checked_sub(1)
            .and_then(|i| self.pole.get(i).cloned())
            .unwrap_or_else(T::zero)
    }

    pub fn regular(&self, k: usize) -> EulerLinear<T> {
        self.regular.get(k).cloned().unwrap_or_else(EulerLinear::zero)
    }

    pub fn log(&self, k: usize) -> T {
        self.log.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// The coefficient of one channel at `exponent`.
    pub fn get(&self, channel: Channel, exponent: i64) -> T {
        match channel {
            Channel::Pole => {
                if exponent < 0 {
                    self.pole((-exponent) as usize)
                } else {
                    T::zero()
                }
            }
            _ if exponent < 0 => T::zero(),
            Channel::Log => self.log(exponent as usize),
            Channel::Gamma => self.regular(exponent as usize).gamma,
            Channel::Rational => self.regular(exponent as usize).rational,
        }
    }

    /// Same expansion cut down to `order` (no-op if already lower).
    pub fn truncated(&self, order: usize) -> Self {
        let order = order.min(self.order);
        Self {
            pole: self.pole.clone(),
            regular: self.regular[..=order].to_vec(),
            log: self.log[..=order].to_vec(),
            order,
        }
    }

    /// First disagreeing coefficient up to the smaller truncation order,
    /// scanning channels in [`Channel::ALL`] order and exponents ascending
    /// (pole exponents from `x^{-1}` outwards).
    pub fn first_mismatch(&self, other: &Self) -> Option<Mismatch<T>> {
        let order = self.order.min(other.order) as i64;
        let poles = self.pole.len().max(other.pole.len()) as i64;
        for channel in Channel::ALL {
            let exponents: Vec<i64> = match channel {
                Channel::Pole => (1..=poles).map(|k| -k).collect(),
                _ => (0..=order).collect(),
            };
            for e in exponents {
                let (lhs, rhs) = (self.get(channel, e), other.get(channel, e));
                if lhs != rhs {
                    return Some(Mismatch { channel, exponent: e, lhs, rhs });
                }
            }
        }
        None
    }

    /// Componentwise equality up to the smaller truncation order.
    pub fn agrees_with(&self, other: &Self) -> bool {
        self.first_mismatch(other).is_none()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn storage_respects_truncation() {
        let mut e = LaurentLogExpansion::<Rational>::new(2);
        e.add_rational(3, q(1, 1));
        e.add_log(5, q(1, 1));
        assert_eq!(e.regular(3), EulerLinear::zero());
        assert_eq!(e.log(5), q(0, 1));
        e.add_pole(2, q(3, 2));
        e.add_pole(2, q(1, 2));
        assert_eq!(e.pole(2), q(2, 1));
        assert_eq!(e.pole(1), q(0, 1));
        assert_eq!(e.get(Channel::Pole, -2), q(2, 1));
    }

    #[test]
    fn mismatch_order_and_truncation() {
        let mut a = LaurentLogExpansion::<Rational>::new(4);
        let mut b = LaurentLogExpansion::<Rational>::new(2);
        a.add_rational(4, q(7, 1));
        assert!(a.agrees_with(&b));
        a.add_regular(1, EulerLinear::euler_gamma());
        a.add_log(2, q(1, 1));
        let m = a.first_mismatch(&b).unwrap();
        assert_eq!((m.channel, m.exponent), (Channel::Log, 2));
        b.add_log(2, q(1, 1));
        let m = a.first_mismatch(&b).unwrap();
        assert_eq!((m.channel, m.exponent, m.lhs), (Channel::Gamma, 1, q(1, 1)));
        assert_eq!(a.truncated(1).order(), 1);
    }
}
