//! Extended Euclid over `T[x]`, the Bézout pair for `(Φ, Φ')`, the closed-form
//! pair built from terminating `3F2(1)` sums, and the cancellation identity
//! `x t' - (n+1-x) t + x s = c Φ`.

use crate::chg::{phi, ChgParams};
use crate::combinatorics::{factorial, pochhammer_int};
use crate::error::{Error, Result};
use crate::poly::DensePoly;
use crate::Scalar;

/// `s A + t B = g` with `g` monic.
#[derive(Clone, Debug, PartialEq)]
pub struct Euclid<T> {
    pub s: DensePoly<T>,
    pub t: DensePoly<T>,
    pub g: DensePoly<T>,
}

/// Extended Euclid with the minimal representative: `s` is reduced modulo
/// `B/g` and `t` recomputed as `(g - sA)/B`.
pub fn ext_euclid<T: Scalar>(a: &DensePoly<T>, b: &DensePoly<T>) -> Result<Euclid<T>> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (DensePoly::one(), DensePoly::zero());
    let (mut t0, mut t1) = (DensePoly::zero(), DensePoly::one());
    while !r1.is_zero() {
        let (q, r) = r0.divrem(&r1)?;
        let s2 = &s0 - &(&q * &s1);
        let t2 = &t0 - &(&q * &t1);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let lead = r0.leading().expect("gcd of non-zero input").clone();
    let inv = T::one() / lead;
    let (mut s, mut t, g) = (s0.scale(&inv), t0.scale(&inv), r0.scale(&inv));
    if !b.is_zero() {
        let cofactor = b.div_exact(&g)?;
        s = s.divrem(&cofactor)?.1;
        t = (&g - &(&s * a)).div_exact(b)?;
    }
    Ok(Euclid { s, t, g })
}

/// `s Φ + t Φ' = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct BezoutPair<T> {
    pub params: ChgParams,
    pub s: DensePoly<T>,
    pub t: DensePoly<T>,
}

impl<T: Scalar> BezoutPair<T> {
    /// `s Φ + t Φ' == 1`.
    pub fn satisfies_identity(&self) -> bool {
        let f = phi::<T>(self.params);
        (&(&self.s * &f) + &(&self.t * &f.derivative())) == DensePoly::one()
    }

    /// `deg s <= N-2` and `deg t <= N-1` (zero polynomial counts as degree -1).
    pub fn within_degree_bounds(&self) -> bool {
        let big_n = self.params.big_n as i64;
        deg(&self.s) <= big_n - 2 && deg(&self.t) <= big_n - 1
    }
}

/// Degree with `-1` for the zero polynomial.
pub fn deg<T: Scalar>(p: &DensePoly<T>) -> i64 {
    p.degree().map_or(-1, |d| d as i64)
}

/// The minimal Bézout pair for `(Φ, Φ')`, `N >= 1`.
pub fn bezout_phi<T: Scalar>(p: ChgParams) -> Result<BezoutPair<T>> {
    if p.big_n == 0 {
        return Err(Error::InvalidParams("Φ' vanishes for N = 0".into()));
    }
    let f = phi::<T>(p);
    let e = ext_euclid(&f, &f.derivative())?;
    debug_assert!(e.g == DensePoly::one());
    Ok(BezoutPair { params: p, s: e.s, t: e.t })
}

/// `3F2([-N+p+1, p, 1]; [n+2+p, -N+1]; 1)`, summed until the first numerator
/// parameter terminates it. Fails if a lower Pochhammer hits zero first.
pub fn footnote_3f2<T: Scalar>(params: ChgParams, p: usize) -> Result<T> {
    let big_n = params.big_n as i64;
    let n = params.n as i64;
    let (a1, a2) = (-big_n + p as i64 + 1, p as i64);
    let (b1, b2) = (n + 2 + p as i64, -big_n + 1);
    let mut sum = T::zero();
    let mut j = 0usize;
    loop {
        let num = pochhammer_int::<T>(a1, j) * pochhammer_int::<T>(a2, j);
        if num.is_zero() {
            return Ok(sum);
        }
        let den = pochhammer_int::<T>(b1, j) * pochhammer_int::<T>(b2, j);
        if den.is_zero() {
            return Err(Error::InvalidParams(format!(
                "3F2 lower parameter {b2} vanishes at j={j} for N={big_n}, n={n}, p={p}"
            )));
        }
        // (1)_j / j! = 1
        sum = sum + num / den;
        j += 1;
    }
}

/// The closed-form pair, `N >= 2`.
pub fn footnote_pair<T: Scalar>(params: ChgParams) -> Result<BezoutPair<T>> {
    let (big_n, n) = (params.big_n, params.n);
    if big_n < 2 {
        return Err(Error::InvalidParams("closed-form pair needs N >= 2".into()));
    }
    let nn_fact = factorial::<T>(big_n + n);
    let mut s_coeffs = vec![T::one() - nn_fact.clone() / (factorial::<T>(big_n - 1) * factorial::<T>(n + 1))];
    let s_scale = nn_fact.clone() / (factorial::<T>(big_n - 1) * factorial::<T>(n));
    for p in 1..=big_n - 2 {
        let ratio = pochhammer_int::<T>(1 - big_n as i64, p) / pochhammer_int::<T>(n as i64 + 2, p);
        let f = footnote_3f2::<T>(params, p)?;
        s_coeffs.push(s_scale.clone() * ratio * (T::one() - f) / (T::from_usize(p) * factorial::<T>(p)));
    }
    let t_scale = -(nn_fact / (factorial::<T>(big_n) * factorial::<T>(n)));
    let mut t_coeffs = Vec::with_capacity(big_n);
    for p in 0..big_n {
        let ratio = pochhammer_int::<T>(1 - big_n as i64, p) / pochhammer_int::<T>(n as i64 + 2, p);
        let f = footnote_3f2::<T>(params, p)?;
        t_coeffs.push(t_scale.clone() * ratio * f / factorial::<T>(p));
    }
    Ok(BezoutPair { params, s: DensePoly::from_coeffs(s_coeffs), t: DensePoly::from_coeffs(t_coeffs) })
}

/// Outcome of comparing the closed-form pair with the Euclid pair.
#[derive(Clone, Debug, PartialEq)]
pub enum FootnoteComparison<T> {
    Equal,
    Differs { euclid: BezoutPair<T>, closed_form: BezoutPair<T> },
    Undefined(String),
}

pub fn compare_footnote<T: Scalar>(p: ChgParams) -> Result<FootnoteComparison<T>> {
    let euclid = bezout_phi::<T>(p)?;
    Ok(match footnote_pair::<T>(p) {
        Ok(closed) if closed == euclid => FootnoteComparison::Equal,
        Ok(closed_form) => FootnoteComparison::Differs { euclid, closed_form },
        Err(e) => FootnoteComparison::Undefined(e.to_string()),
    })
}

/// `c = (n+1)(n+N)!/(n! N!)`.
pub fn cancellation_constant<T: Scalar>(p: ChgParams) -> T {
    T::from_usize(p.n + 1) * factorial::<T>(p.n + p.big_n) / (factorial::<T>(p.n) * factorial::<T>(p.big_n))
}

/// `x t' - (n+1-x) t + x s - c Φ` for a given pair.
pub fn cancellation_residual<T: Scalar>(pair: &BezoutPair<T>) -> DensePoly<T> {
    let p = pair.params;
    let x = DensePoly::x();
    let weight = DensePoly::from_coeffs(vec![T::from_usize(p.n + 1), -T::one()]);
    let lhs = &(&(&x * &pair.t.derivative()) - &(&weight * &pair.t)) + &(&x * &pair.s);
    &lhs - &phi::<T>(p).scale(&cancellation_constant::<T>(p))
}

/// The cancellation identity for the minimal pair, `N >= 1`.
pub fn cancellation_identity<T: Scalar>(p: ChgParams) -> Result<bool> {
    Ok(cancellation_residual(&bezout_phi::<T>(p)?).is_zero())
}

/// Everything the CLI reports for one parameter pair.
#[derive(Clone, Debug, PartialEq)]
pub struct BezoutReport<T> {
    pub pair: BezoutPair<T>,
    pub identity_holds: bool,
    pub c: T,
}

impl<T: Scalar> BezoutReport<T> {
    pub fn degree_s(&self) -> i64 {
        deg(&self.pair.s)
    }

    pub fn degree_t(&self) -> i64 {
        deg(&self.pair.t)
    }
}

pub fn bezout_report<T: Scalar>(p: ChgParams) -> Result<BezoutReport<T>> {
    let pair = bezout_phi::<T>(p)?;
    let identity_holds = cancellation_residual(&pair).is_zero();
    Ok(BezoutReport { pair, identity_holds, c: cancellation_constant(p) })
}
