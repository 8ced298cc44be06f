//! Second-order linear recurrences `a_n y_{n+2} + b_n y_{n+1} + c_n y_n = 0`.
//!
//! Covers forward iteration, the reduction-of-order second solution, the
//! rescaling to the two-term form `Y_{n+2} = β_n Y_{n+1} + γ_n Y_n`, Casorati
//! determinants and the constant-coefficient closed forms.

use std::fmt;
use std::sync::Arc;

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::poly::DensePoly;
use crate::Scalar;

type Coefficient<T> = Arc<dyn Fn(usize) -> T + Send + Sync>;

/// Coefficient triple `(a_n, b_n, c_n)` given as total functions of `n`.
#[derive(Clone)]
pub struct RecurrenceSpec<T> {
    a: Coefficient<T>,
    b: Coefficient<T>,
    c: Coefficient<T>,
}

impl<T> fmt::Debug for RecurrenceSpec<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("RecurrenceSpec { .. }")
    }
}

impl<T: Scalar> RecurrenceSpec<T> {
    pub fn from_fns<A, B, C>(a: A, b: B, c: C) -> Self
    where
        A: Fn(usize) -> T + Send + Sync + 'static,
        B: Fn(usize) -> T + Send + Sync + 'static,
        C: Fn(usize) -> T + Send + Sync + 'static,
    {
        Self { a: Arc::new(a), b: Arc::new(b), c: Arc::new(c) }
    }

    /// Coefficients that are polynomials in the index `n`.
    pub fn from_polys(a: DensePoly<T>, b: DensePoly<T>, c: DensePoly<T>) -> Self {
        Self::from_fns(
            move |n| a.eval(&T::from_usize(n)),
            move |n| b.eval(&T::from_usize(n)),
            move |n| c.eval(&T::from_usize(n)),
        )
    }

    pub fn constant(a: T, b: T, c: T) -> Self {
        Self::from_fns(move |_| a.clone(), move |_| b.clone(), move |_| c.clone())
    }

    pub fn a(&self, n: usize) -> T {
        (self.a)(n)
    }

    pub fn b(&self, n: usize) -> T {
        (self.b)(n)
    }

    pub fn c(&self, n: usize) -> T {
        (self.c)(n)
    }

    /// Checks `a_n c_n != 0`.
    pub fn check_index(&self, n: usize) -> Result<()> {
        if self.a(n).is_zero() {
            return Err(Error::ZeroLeadingCoefficient { index: n });
        }
        if self.c(n).is_zero() {
            return Err(Error::ZeroTrailingCoefficient { index: n });
        }
        Ok(())
    }

    /// `a_n y_{n+2} + b_n y_{n+1} + c_n y_n`.
    pub fn residual(&self, y: &Orbit<T>, n: usize) -> Result<T> {
        let (y0, y1, y2) = (y.at(n)?, y.at(n + 1)?, y.at(n + 2)?);
        Ok(self.a(n) * y2 + self.b(n) * y1 + self.c(n) * y0)
    }

    /// Errors at the first interior index where `y` fails the recurrence.
    pub fn check_solution(&self, y: &Orbit<T>) -> Result<()> {
        self.check_solution_from(y, 0)
    }

    /// As [`check_solution`](Self::check_solution), skipping the equations at
    /// indices below `start`.
    pub fn check_solution_from(&self, y: &Orbit<T>, start: usize) -> Result<()> {
        for n in start..y.len().saturating_sub(2) {
            if !self.residual(y, n)?.is_zero() {
                return Err(Error::NotASolution { index: n });
            }
        }
        Ok(())
    }

    pub fn is_solution(&self, y: &Orbit<T>) -> bool {
        self.check_solution(y).is_ok()
    }

    pub fn is_solution_from(&self, y: &Orbit<T>, start: usize) -> bool {
        self.check_solution_from(y, start).is_ok()
    }
}

/// A finite solution sequence `y_0, ..., y_N`.
#[derive(Clone, Debug, PartialEq)]
pub struct Orbit<T>(pub Vec<T>);

impl<T: Scalar> Orbit<T> {
    pub fn new(values: Vec<T>) -> Self {
        Self(values)
    }

    pub fn values(&self) -> &[T] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn at(&self, n: usize) -> Result<T> {
        self.0
            .get(n)
            .cloned()
            .ok_or(Error::IndexOutOfRange { index: n, len: self.0.len() })
    }

    pub fn last(&self) -> Option<&T> {
        self.0.last()
    }

    pub fn map(&self, f: impl Fn(usize, &T) -> T) -> Self {
        Self(self.0.iter().enumerate().map(|(i, v)| f(i, v)).collect())
    }
}

/// Solves the recurrence forward from `y_0, y_1` up to `y_last`.
pub fn iterate<T: Scalar>(spec: &RecurrenceSpec<T>, y0: T, y1: T, last: usize) -> Result<Orbit<T>> {
    let mut ys = vec![y0, y1];
    ys.truncate(last + 1);
    for n in 0..last.saturating_sub(1) {
        spec.check_index(n)?;
        let next = -(spec.b(n) * ys[n + 1].clone() + spec.c(n) * ys[n].clone()) / spec.a(n);
        ys.push(next);
    }
    Ok(Orbit(ys))
}

/// Second solution by reduction of order:
///
/// `y_n = f_1 f_n sum_{k=1}^{n-1} (f_k f_{k+1})^{-1} prod_{l=0}^{k-1} c_l / a_l`
///
/// for `n = 0..=last`. Entries 0 and 1 are empty sums and therefore zero.
/// The sum defines a solution from `n = 1` on: the equation at `n = 0` would
/// need `y_0 = -1`, so callers checking the output should start at index 1
/// (see [`RecurrenceSpec::is_solution_from`]).
pub fn dalembert_second<T: Scalar>(spec: &RecurrenceSpec<T>, f: &Orbit<T>, last: usize) -> Result<Orbit<T>> {
    if f.len() <= last {
        return Err(Error::IndexOutOfRange { index: last, len: f.len() });
    }
    let f = Orbit(f.0[..=last].to_vec());
    spec.check_solution(&f)?;
    if let Some(index) = f.0.iter().position(|v| v.is_zero()) {
        return Err(Error::ZeroFirstSolution { index });
    }
    let mut out = Vec::with_capacity(last + 1);
    let mut sum = T::zero();
    let mut ratio_product = T::one();
    for n in 0..=last {
        if n >= 2 {
            let k = n - 1;
            spec.check_index(k - 1)?;
            ratio_product = ratio_product * spec.c(k - 1) / spec.a(k - 1);
            sum = sum + ratio_product.clone() / (f.0[k].clone() * f.0[k + 1].clone());
        }
        let value = if n < 2 { T::zero() } else { f.0[1].clone() * f.0[n].clone() * sum.clone() };
        out.push(value);
    }
    Ok(Orbit(out))
}

/// Output of [`transform_to_y`]: `y_n = prefactor_n Y_n` with
/// `Y_{n+2} = beta_n Y_{n+1} + gamma_n Y_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct YTransform<T> {
    /// `prod_{l=0}^{n-2} 1/a_l`.
    pub prefactor: Orbit<T>,
    /// `β_n = -b_n`.
    pub beta: Vec<T>,
    /// `γ_n = -a_{n-1} c_n` with `a_{-1} = 1`; `gamma[n]` is also written
    /// `γ_{n-1,n}`.
    pub gamma: Vec<T>,
}

pub fn transform_to_y<T: Scalar>(spec: &RecurrenceSpec<T>, last: usize) -> Result<YTransform<T>> {
    let mut prefactor = Vec::with_capacity(last + 1);
    let mut product = T::one();
    for n in 0..=last {
        if n >= 2 {
            let a = spec.a(n - 2);
            if a.is_zero() {
                return Err(Error::ZeroLeadingCoefficient { index: n - 2 });
            }
            product = product / a;
        }
        prefactor.push(product.clone());
    }
    let beta = (0..=last).map(|n| -spec.b(n)).collect();
    let gamma = (0..=last)
        .map(|n| {
            let a_prev = if n == 0 { T::one() } else { spec.a(n - 1) };
            -(a_prev * spec.c(n))
        })
        .collect();
    Ok(YTransform { prefactor: Orbit(prefactor), beta, gamma })
}

/// Checks that `Y_n = y_n prod_{l=0}^{n-2} a_l` satisfies
/// `Y_{n+2} + b_n Y_{n+1} + a_{n-1} c_n Y_n = 0` at every interior index
/// `n >= 1`. Index 0 is skipped because the reduction-of-order output carries
/// the placeholder `y_0 = 0`.
pub fn verify_y_form<T: Scalar>(spec: &RecurrenceSpec<T>, y: &Orbit<T>) -> bool {
    let mut scaled = Vec::with_capacity(y.len());
    let mut product = T::one();
    for (n, v) in y.0.iter().enumerate() {
        if n >= 2 {
            product = product * spec.a(n - 2);
        }
        scaled.push(v.clone() * product.clone());
    }
    (1..scaled.len().saturating_sub(2)).all(|n| {
        let a_prev = if n == 0 { T::one() } else { spec.a(n - 1) };
        let r = scaled[n + 2].clone()
            + spec.b(n) * scaled[n + 1].clone()
            + a_prev * spec.c(n) * scaled[n].clone();
        r.is_zero()
    })
}

/// Direct iteration of `Y_{n+2} = β_n Y_{n+1} + γ_n Y_n` up to `Y_last`.
/// No nonvanishing requirement on the coefficients.
pub fn iterate_y<T: Scalar>(beta: &[T], gamma: &[T], y0: T, y1: T, last: usize) -> Result<Orbit<T>> {
    let mut ys = vec![y0, y1];
    ys.truncate(last + 1);
    for n in 0..last.saturating_sub(1) {
        let b = beta.get(n).ok_or(Error::MissingIndex { symbol: 'b', index: n })?;
        let g = gamma.get(n).ok_or(Error::MissingIndex { symbol: 'g', index: n })?;
        ys.push(b.clone() * ys[n + 1].clone() + g.clone() * ys[n].clone());
    }
    Ok(Orbit(ys))
}

/// The Y-orbits seeded by `(Y_0, Y_1) = (1, 0)` and `(0, 1)`.
pub fn fundamental_pair<T: Scalar>(beta: &[T], gamma: &[T], last: usize) -> Result<(Orbit<T>, Orbit<T>)> {
    Ok((
        iterate_y(beta, gamma, T::one(), T::zero(), last)?,
        iterate_y(beta, gamma, T::zero(), T::one(), last)?,
    ))
}

/// `f_n g_{n+1} - g_n f_{n+1}`.
///
/// With `(f, g)` the [`fundamental_pair`], `casorati(f, g, n + 1)` equals
/// [`casorati_gamma_product`]`(gamma, n)`.
pub fn casorati<T: Scalar>(f: &Orbit<T>, g: &Orbit<T>, n: usize) -> Result<T> {
    Ok(f.at(n)? * g.at(n + 1)? - g.at(n)? * f.at(n + 1)?)
}

/// `(-1)^{n+1} prod_{l=0}^{n} γ_l`.
pub fn casorati_gamma_product<T: Scalar>(gamma: &[T], n: usize) -> Result<T> {
    if gamma.len() <= n {
        return Err(Error::IndexOutOfRange { index: n, len: gamma.len() });
    }
    let product = gamma[..=n].iter().fold(T::one(), |acc, g| acc * g.clone());
    Ok(T::sign_pow(n + 1) * product)
}

/// `Y_n` for constant `β, γ` via the binomial double sum
///
/// `Y_n = Y_1 sum_{k} C(n-1-k, k) β^{n-1-2k} γ^k
///      + Y_0 sum_{k} C(n-2-k, k) β^{n-2-2k} γ^{k+1}`,
///
/// the second sum running to `floor((n-2)/2)`.
pub fn const_coeff_y<T: Scalar>(beta: &T, gamma: &T, y0: &T, y1: &T, n: usize) -> T {
    if n == 0 {
        return y0.clone();
    }
    let y1_part = (0..=(n - 1) / 2).fold(T::zero(), |acc, k| {
        acc + binomial::<T>(n - 1 - k, k) * beta.pow_usize(n - 1 - 2 * k) * gamma.pow_usize(k)
    });
    let y0_part = if n < 2 {
        T::zero()
    } else {
        (0..=(n - 2) / 2).fold(T::zero(), |acc, k| {
            acc + binomial::<T>(n - 2 - k, k) * beta.pow_usize(n - 2 - 2 * k) * gamma.pow_usize(k + 1)
        })
    };
    y1.clone() * y1_part + y0.clone() * y0_part
}

/// `(r_1^n - r_2^n)/(r_1 - r_2)` for the roots of `r^2 = β r + γ`, evaluated
/// without radicals as `2^{1-n} sum_l C(n, 2l+1) β^{n-2l-1} (β^2 + 4γ)^l`.
/// Returns zero for `n = 0`.
pub fn root_power_ratio<T: Scalar>(beta: &T, gamma: &T, n: usize) -> T {
    if n == 0 {
        return T::zero();
    }
    let disc = beta.clone() * beta.clone() + T::from_i64(4) * gamma.clone();
    let sum = (0..)
        .take_while(|l| 2 * l + 1 <= n)
        .fold(T::zero(), |acc, l| {
            acc + binomial::<T>(n, 2 * l + 1) * beta.pow_usize(n - 2 * l - 1) * disc.pow_usize(l)
        });
    sum / T::from_i64(2).pow_usize(n - 1)
}

/// The four reduction-of-order worked examples, each with its known first
/// solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuiltinExample {
    /// `y_{n+2} - 2r y_{n+1} + r^2 y_n = 0`, first solution `r^n`.
    DoubleRoot,
    /// `y_{n+2} - (n+1) y_{n+1} - (n+1) y_n = 0`, first solution `n!`.
    Factorial,
    /// `(n+2) y_{n+2} - (2n+3) y_{n+1} + (n+1) y_n = 0`, first solution `1`.
    Harmonic,
    /// `(n+1) y_{n+2} - (n^2+7n+8) y_{n+1} + 2(n+2)(n+3) y_n = 0`, first
    /// solution `2^n`.
    Ex4,
}

impl BuiltinExample {
    pub const ALL: [BuiltinExample; 4] =
        [BuiltinExample::DoubleRoot, BuiltinExample::Factorial, BuiltinExample::Harmonic, BuiltinExample::Ex4];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinExample::DoubleRoot => "double-root",
            BuiltinExample::Factorial => "factorial",
            BuiltinExample::Harmonic => "harmonic",
            BuiltinExample::Ex4 => "ex4",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|e| e.name() == name)
    }

    /// The recurrence; `r` only matters for [`BuiltinExample::DoubleRoot`].
    pub fn spec<T: Scalar>(self, r: &T) -> RecurrenceSpec<T> {
        match self {
            BuiltinExample::DoubleRoot => {
                let r = r.clone();
                RecurrenceSpec::constant(T::one(), -(T::from_i64(2) * r.clone()), r.clone() * r)
            }
            BuiltinExample::Factorial => RecurrenceSpec::from_fns(
                |_| T::one(),
                |n| -T::from_usize(n + 1),
                |n| -T::from_usize(n + 1),
            ),
            BuiltinExample::Harmonic => RecurrenceSpec::from_fns(
                |n| T::from_usize(n + 2),
                |n| -T::from_usize(2 * n + 3),
                |n| T::from_usize(n + 1),
            ),
            BuiltinExample::Ex4 => RecurrenceSpec::from_fns(
                |n| T::from_usize(n + 1),
                |n| -T::from_usize(n * n + 7 * n + 8),
                |n| T::from_usize(2 * (n + 2) * (n + 3)),
            ),
        }
    }

    /// The known first solution `f_0..=f_last`.
    pub fn first_solution<T: Scalar>(self, r: &T, last: usize) -> Orbit<T> {
        let mut out = Vec::with_capacity(last + 1);
        let mut v = T::one();
        for n in 0..=last {
            out.push(v.clone());
            v = match self {
                BuiltinExample::DoubleRoot => v * r.clone(),
                BuiltinExample::Factorial => v * T::from_usize(n + 1),
                BuiltinExample::Harmonic => v,
                BuiltinExample::Ex4 => v * T::from_i64(2),
            };
        }
        Orbit(out)
    }
}
