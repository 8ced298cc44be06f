//! The degenerate confluent hypergeometric case `1F1(-N; n+1; x)`.
//!
//! First solution: `Φ(N, n, x) = sum_{k=0}^{N} (-N)_k / ((n+1)_k k!) x^k`.
//! Second solution of the three-term recurrence in `N`:
//! `Ψ̄(N, n, x) = n!/(N+n)! P(N, n, x)`, where `P` is an integer polynomial of
//! degree `N+n-1` with leading coefficient `(-1)^N`.
//!
//! `P` is built two ways:
//! - [`PolyMethod::Direct`]: the double sum
//!   `(N+n)!/n! sum_{k=0}^{N} sum_{m=0}^{n+k-1} (-N)_k (n+k-1-m)! / ((n+1)_k k!) x^m`;
//! - [`PolyMethod::Resummed`]: low part `sum_{m<n} (N+m)!(n-m-1)!/m! x^m` plus
//!   `sum_{m<N} c(N, n, m) x^{n+m}`, with `c` from either [`CMethod`].

use crate::combinatorics::{factorial, harmonic_range, pochhammer, pochhammer_int};
use crate::error::{Error, Result};
use crate::poly::DensePoly;
use crate::Scalar;

/// `a = -N`, `b = n + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChgParams {
    pub big_n: usize,
    pub n: usize,
}

impl ChgParams {
    pub fn new(big_n: usize, n: usize) -> Self {
        Self { big_n, n }
    }

    fn with_big_n(self, big_n: usize) -> Self {
        Self { big_n, ..self }
    }

    fn with_n(self, n: usize) -> Self {
        Self { n, ..self }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PolyMethod {
    /// Harmonic-sum coefficients.
    #[default]
    Resummed,
    /// The unsimplified double sum.
    Direct,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CMethod {
    /// Alternating double sum.
    DoubleSum,
    /// `(-1)^{m+1} (n+N)!/((n+m)! m!) sum_{k=n+m+1}^{N+n} (N+n+1-k)_m / k`.
    #[default]
    Harmonic,
}

/// Selects `Φ` or `Ψ̄` in the recurrence checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    First,
    Second,
}

/// `Φ(N, n, x)`.
pub fn phi<T: Scalar>(p: ChgParams) -> DensePoly<T> {
    let a = -T::from_usize(p.big_n);
    let b = T::from_usize(p.n + 1);
    DensePoly::from_coeffs(
        (0..=p.big_n)
            .map(|k| pochhammer(&a, k) / (pochhammer(&b, k) * factorial::<T>(k)))
            .collect(),
    )
}

/// `P(N, n, x)` by the chosen method (harmonic coefficients when resummed).
pub fn p_poly<T: Scalar>(p: ChgParams, method: PolyMethod) -> DensePoly<T> {
    match method {
        PolyMethod::Direct => p_poly_direct(p),
        PolyMethod::Resummed => p_poly_resummed(p, CMethod::Harmonic),
    }
}

fn p_poly_direct<T: Scalar>(p: ChgParams) -> DensePoly<T> {
    let (big_n, n) = (p.big_n, p.n);
    let degree_bound = (n + big_n).max(1);
    let mut coeffs = vec![T::zero(); degree_bound];
    for k in 0..=big_n {
        let weight = pochhammer_int::<T>(-(big_n as i64), k) / (pochhammer_int::<T>(n as i64 + 1, k) * factorial::<T>(k));
        if weight.is_zero() {
            continue;
        }
        for m in 0..(n + k) {
            coeffs[m] = coeffs[m].clone() + weight.clone() * factorial::<T>(n + k - 1 - m);
        }
    }
    let scale = factorial::<T>(big_n + n) / factorial::<T>(n);
    DensePoly::from_coeffs(coeffs).scale(&scale)
}

/// `P(N, n, x)` from the low-part factorials and the chosen `c` formula.
pub fn p_poly_resummed<T: Scalar>(p: ChgParams, method: CMethod) -> DensePoly<T> {
    let mut coeffs: Vec<T> = (0..p.n).map(|m| low_coefficient(p, m)).collect();
    for m in 0..p.big_n {
        coeffs.push(c_coeff(p, m, method).expect("m < N"));
    }
    DensePoly::from_coeffs(coeffs)
}

/// Coefficient of `x^m` in `P` for `m < n`: `(N+m)!(n-m-1)!/m!`.
pub fn low_coefficient<T: Scalar>(p: ChgParams, m: usize) -> T {
    assert!(m < p.n, "low coefficients exist only for m < n");
    factorial::<T>(p.big_n + m) * factorial::<T>(p.n - m - 1) / factorial::<T>(m)
}

/// The terminating sum `2F1(-N, n-m; n+1; 1) = sum_k (-N)_k (n-m)_k / ((n+1)_k k!)`
/// that feeds the low part of `P`; its closed value is `n!(N+m)!/((N+n)! m!)`.
pub fn gauss_terminating_sum<T: Scalar>(p: ChgParams, m: usize) -> T {
    (0..=p.big_n).fold(T::zero(), |acc, k| {
        acc + pochhammer_int::<T>(-(p.big_n as i64), k) * pochhammer_int::<T>(p.n as i64 - m as i64, k)
            / (pochhammer_int::<T>(p.n as i64 + 1, k) * factorial::<T>(k))
    })
}

/// `c(N, n, m)`, the coefficient of `x^{n+m}` in `P`, `0 <= m < N`.
pub fn c_coeff<T: Scalar>(p: ChgParams, m: usize, method: CMethod) -> Result<T> {
    let (big_n, n) = (p.big_n, p.n);
    if m >= big_n {
        return Err(Error::InvalidParams(format!("c(N={big_n}, n={n}, m={m}) needs m <= N-1")));
    }
    let sign = T::sign_pow(m + 1);
    let value = match method {
        CMethod::DoubleSum => (0..big_n - m).fold(T::zero(), |acc, k| {
            acc + T::sign_pow(k) * factorial::<T>(big_n) / factorial::<T>(big_n - k - m - 1)
                * factorial::<T>(big_n + n)
                / factorial::<T>(n + k + m + 1)
                * factorial::<T>(k)
                / factorial::<T>(k + m + 1)
        }),
        CMethod::Harmonic => {
            let inner = ((n + m + 1)..=(big_n + n)).fold(T::zero(), |acc, k| {
                acc + pochhammer_int::<T>((big_n + n + 1 - k) as i64, m) / T::from_usize(k)
            });
            factorial::<T>(n + big_n) / (factorial::<T>(n + m) * factorial::<T>(m)) * inner
        }
    };
    Ok(sign * value)
}

/// `c(N, n, 0) = -((n+N)!/n!) sum_{k=n+1}^{N+n} 1/k`.
pub fn c_coeff_m0<T: Scalar>(p: ChgParams) -> T {
    -(factorial::<T>(p.n + p.big_n) / factorial::<T>(p.n)) * harmonic_range::<T>(p.n + 1, (p.big_n + p.n) as i64)
}

/// `Ψ̄(N, n, x) = n!/(N+n)! P(N, n, x)`.
pub fn psibar<T: Scalar>(p: ChgParams) -> DensePoly<T> {
    let scale = factorial::<T>(p.n) / factorial::<T>(p.big_n + p.n);
    p_poly::<T>(p, PolyMethod::Resummed).scale(&scale)
}

fn kind_poly<T: Scalar>(p: ChgParams, which: Kind) -> DensePoly<T> {
    match which {
        Kind::First => phi(p),
        Kind::Second => psibar(p),
    }
}

/// `(N+n+1) F_{N+1} - (2N+n+1-x) F_N + N F_{N-1}` for arbitrary `F`s.
pub fn n_recurrence_residual<T: Scalar>(
    p: ChgParams,
    prev: &DensePoly<T>,
    cur: &DensePoly<T>,
    next: &DensePoly<T>,
) -> DensePoly<T> {
    let (big_n, n) = (p.big_n, p.n);
    let middle = DensePoly::from_coeffs(vec![T::from_usize(2 * big_n + n + 1), -T::one()]);
    &(&next.scale(&T::from_usize(big_n + n + 1)) - &(&middle * cur)) + &prev.scale(&T::from_usize(big_n))
}

/// Checks the recurrence in `N` at `p` as a polynomial identity. `N >= 1`.
pub fn verify_n_recurrence<T: Scalar>(p: ChgParams, which: Kind) -> bool {
    if p.big_n == 0 {
        return false;
    }
    let prev = kind_poly::<T>(p.with_big_n(p.big_n - 1), which);
    let cur = kind_poly::<T>(p, which);
    let next = kind_poly::<T>(p.with_big_n(p.big_n + 1), which);
    n_recurrence_residual(p, &prev, &cur, &next).is_zero()
}

/// `n(n+1) F^{(n-1)} - (n+1)(n+x) F^{(n)} + x(n+1+N) F^{(n+1)}` with every
/// `F^{(j)}` given as a polynomial numerator times `x^{-shift_j}`; the result
/// is multiplied by `x^{n+1}`. For the first kind all shifts are zero; for the
/// second kind `F^{(j)} = Ψ̄(N, j, x) x^{-j}`.
pub fn b_recurrence_residual<T: Scalar>(
    p: ChgParams,
    lower: &DensePoly<T>,
    cur: &DensePoly<T>,
    upper: &DensePoly<T>,
    shifted: bool,
) -> DensePoly<T> {
    let (big_n, n) = (p.big_n, p.n);
    // x-powers left after multiplying F^{(j)} x^{-s_j} by x^{n+1}
    let (sl, sc, su) = if shifted { (2, 1, 0) } else { (n + 1, n + 1, n + 1) };
    let t1 = lower.shift(sl).scale(&T::from_usize(n * (n + 1)));
    let n_plus_x = DensePoly::from_coeffs(vec![T::from_usize(n), T::one()]);
    let t2 = (&n_plus_x * &cur.shift(sc)).scale(&T::from_usize(n + 1));
    let t3 = upper.shift(su + 1).scale(&T::from_usize(n + 1 + big_n));
    &(&t1 - &t2) + &t3
}

/// Checks the contiguous relation in `b = n + 1`. `n >= 1`.
pub fn verify_b_recurrence<T: Scalar>(p: ChgParams, which: Kind) -> bool {
    if p.n == 0 {
        return false;
    }
    let lower = kind_poly::<T>(p.with_n(p.n - 1), which);
    let cur = kind_poly::<T>(p, which);
    let upper = kind_poly::<T>(p.with_n(p.n + 1), which);
    b_recurrence_residual(p, &lower, &cur, &upper, which == Kind::Second).is_zero()
}

/// `N! (n!)^2 / (N+n+1)!`, the value of `C(N+1)`.
pub fn casoratian_closed<T: Scalar>(p: ChgParams) -> T {
    let nf = factorial::<T>(p.n);
    factorial::<T>(p.big_n) * nf.clone() * nf / factorial::<T>(p.big_n + p.n + 1)
}

/// `C(N+1) = Φ(N+1) Ψ̄(N) - Ψ̄(N+1) Φ(N)` as a polynomial in `x`.
pub fn casoratian_poly<T: Scalar>(p: ChgParams) -> DensePoly<T> {
    let next = p.with_big_n(p.big_n + 1);
    &(&phi::<T>(next) * &psibar::<T>(p)) - &(&psibar::<T>(next) * &phi::<T>(p))
}

/// True iff `C(N+1)` is the constant [`casoratian_closed`].
pub fn casoratian_check<T: Scalar>(p: ChgParams) -> bool {
    casoratian_poly::<T>(p) == DensePoly::constant(casoratian_closed::<T>(p))
}

/// `L̄_N^{(n)} = Φ(N, n, x)`.
pub fn laguerre_first<T: Scalar>(p: ChgParams) -> DensePoly<T> {
    phi(p)
}

/// `L̄̄_N^{(n)}(x) = numerator(x) / x^{pole_order}`.
#[derive(Clone, Debug, PartialEq)]
pub struct LaguerreSecond<T> {
    pub pole_order: usize,
    pub numerator: DensePoly<T>,
}

pub fn laguerre_second<T: Scalar>(p: ChgParams) -> LaguerreSecond<T> {
    LaguerreSecond { pole_order: p.n, numerator: psibar(p) }
}

/// `P(N, n, 0) = N! (n-1)!`, `n >= 1`.
pub fn p_at_zero<T: Scalar>(p: ChgParams) -> Result<T> {
    if p.n == 0 {
        return Err(Error::InvalidParams("P(N, 0, 0) has no factorial closed form".into()));
    }
    Ok(factorial::<T>(p.big_n) * factorial::<T>(p.n - 1))
}
