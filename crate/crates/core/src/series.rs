//! Two expansions of the logarithmic second solution about `x = 0`, and their
//! coefficientwise comparison.
//!
//! `Ψ_DL` is the contour-integral series:
//!
//! ```text
//! sum_{k=1}^{n} N! n! (k-1)! / ((n-k)! (N+k)!) x^{-k}
//! - sum_{k=0}^{N} φ_k [ln x + H_{N-k} - H_k - H_{n+k} + γ_E] x^k
//! + sum_{k>=N+1} (-1)^{N+1} N! (k-N-1)! / ((n+1)_k k!) x^k
//! ```
//!
//! where `φ_k` are the coefficients of `Φ(N, n, x)`. The displayed form of the
//! tail carries a leftover limit `k = 1-a`; with `a = -N` it is read as the
//! lower limit `k = N+1`, matching the derivation that precedes it.
//!
//! `Ψ_PM = Ψ̄ e^x x^{-n} + Φ (-ln x - γ_E - sum_{k>=1} x^k/(k k!))`.
//!
//! Both sides are emitted at unit scale: in this normalization the `ln x`
//! coefficients of `Ψ_DL` are exactly `-φ_k`, which is what `Ψ_PM` gives
//! without any rescaling. [`ExpansionReport::scale`] records that factor.

use crate::chg::{phi, psibar, ChgParams};
use crate::combinatorics::{factorial, harmonic, pochhammer_int};
use crate::laurent::{Channel, EulerLinear, LaurentLogExpansion, Mismatch};
use crate::poly::{exp_truncated, DensePoly};
use crate::Scalar;

/// `Ψ_DL(N, n, x)` through `x^order`.
pub fn psi_dl<T: Scalar>(p: ChgParams, order: usize) -> LaurentLogExpansion<T> {
    let (big_n, n) = (p.big_n, p.n);
    let nf = factorial::<T>(big_n) * factorial::<T>(n);
    let mut e = LaurentLogExpansion::new(order);
    for k in 1..=n {
        let v = nf.clone() * factorial::<T>(k - 1) / (factorial::<T>(n - k) * factorial::<T>(big_n + k));
        e.add_pole(k, v);
    }
    let phi = phi::<T>(p);
    for k in 0..=big_n.min(order) {
        let fk = phi.coeff(k);
        let h = harmonic::<T>(big_n - k) - harmonic::<T>(k) - harmonic::<T>(n + k);
        e.add_regular(k, EulerLinear { rational: -fk.clone() * h, gamma: -fk.clone() });
        e.add_log(k, -fk);
    }
    for k in (big_n + 1)..=order {
        let v = T::sign_pow(big_n + 1) * factorial::<T>(big_n) * factorial::<T>(k - big_n - 1)
            / (pochhammer_int::<T>(n as i64 + 1, k) * factorial::<T>(k));
        e.add_rational(k, v);
    }
    e
}

/// `Ψ̄ e^x x^{-n}` through `x^order`.
pub fn exponential_term<T: Scalar>(p: ChgParams, order: usize) -> LaurentLogExpansion<T> {
    let n = p.n;
    let product = (&psibar::<T>(p) * &exp_truncated::<T>(order + n)).truncate(order + n);
    let mut e = LaurentLogExpansion::new(order);
    for (j, c) in product.coeffs().iter().enumerate() {
        if j < n {
            e.add_pole(n - j, c.clone());
        } else {
            e.add_rational(j - n, c.clone());
        }
    }
    e
}

/// `Φ (-ln x - γ_E - sum_{k>=1} x^k/(k k!))` through `x^order`.
pub fn ei_term<T: Scalar>(p: ChgParams, order: usize) -> LaurentLogExpansion<T> {
    let phi = phi::<T>(p);
    let series = DensePoly::from_coeffs(
        std::iter::once(T::zero())
            .chain((1..=order).map(|k| -(T::one() / (T::from_usize(k) * factorial::<T>(k)))))
            .collect(),
    );
    let regular = (&phi * &series).truncate(order);
    let mut e = LaurentLogExpansion::new(order);
    for (k, c) in phi.coeffs().iter().enumerate() {
        e.add_regular(k, EulerLinear { rational: T::zero(), gamma: -c.clone() });
        e.add_log(k, -c.clone());
    }
    for (k, c) in regular.coeffs().iter().enumerate() {
        e.add_rational(k, c.clone());
    }
    e
}

/// `Ψ_PM(N, n, x)` through `x^order`.
pub fn psi_pm<T: Scalar>(p: ChgParams, order: usize) -> LaurentLogExpansion<T> {
    let mut e = exponential_term(p, order);
    e.add_expansion(&ei_term(p, order));
    e
}

/// Result of [`compare`].
#[derive(Clone, Debug, PartialEq)]
pub struct ExpansionReport<T> {
    pub params: ChgParams,
    pub order: usize,
    pub equal: bool,
    pub first_mismatch: Option<Mismatch<T>>,
    /// Common factor applied to both sides before comparison.
    pub scale: T,
}

pub fn compare_expansions<T: Scalar>(
    params: ChgParams,
    order: usize,
    lhs: &LaurentLogExpansion<T>,
    rhs: &LaurentLogExpansion<T>,
) -> ExpansionReport<T> {
    let first_mismatch = lhs.first_mismatch(rhs);
    ExpansionReport { params, order, equal: first_mismatch.is_none(), first_mismatch, scale: T::one() }
}

/// `Ψ_PM` against `Ψ_DL` over pole, log, `γ_E` and rational channels.
pub fn compare<T: Scalar>(p: ChgParams, order: usize) -> ExpansionReport<T> {
    compare_expansions(p, order, &psi_pm(p, order), &psi_dl(p, order))
}

/// Rows for a text table of one channel: `(exponent, value)`.
pub fn channel_rows<T: Scalar>(e: &LaurentLogExpansion<T>, channel: Channel) -> Vec<(i64, T)> {
    match channel {
        Channel::Pole => (1..=e.pole_len() as i64).rev().map(|k| (-k, e.get(channel, -k))).collect(),
        _ => (0..=e.order() as i64).map(|k| (k, e.get(channel, k))).collect(),
    }
}
