//! Exact construction and verification of second solutions to linear
//! homogeneous second-order difference equations.
//!
//! The algebra is generic over [`Scalar`]; the exact instantiation used by the
//! verification routines and the CLI is [`Rational`] (arbitrary-precision
//! rationals), for which the aliases below are provided.
//!
//! Modules:
//! - [`combinatorics`], [`poly`], [`laurent`]: exact building blocks.
//! - [`recurrence`]: forward iteration, reduction of order, Y-form,
//!   Casoratians, constant-coefficient closed forms.
//! - [`pqpoly`]: the β/γ word polynomials `P_n`, `Q_n`.
//! - [`chg`]: the degenerate confluent hypergeometric case `1F1(-N; n+1; x)`
//!   and its polynomial second solution `P(N, n, x)`.
//! - [`bezout`]: extended Euclid, the Bézout pair for `(Φ, Φ')` and the
//!   cancellation identity.
//! - [`series`]: Laurent-log expansions of the two forms of the second
//!   solution and their coefficientwise comparison.
//! - [`json`], [`golden`], [`selftest`]: rendering, reference tables, and the
//!   aggregated verification suite.

pub mod bezout;
pub mod chg;
pub mod combinatorics;
pub mod error;
pub mod golden;
pub mod json;
pub mod laurent;
pub mod poly;
pub mod pqpoly;
pub mod recurrence;
pub mod scalar;
pub mod selftest;
pub mod series;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Exact rational scalar.
pub type Rational = num_rational::BigRational;
/// Polynomial with exact rational coefficients.
pub type Poly = poly::DensePoly<Rational>;
/// Exact Laurent-log expansion.
pub type Expansion = laurent::LaurentLogExpansion<Rational>;
/// Exact recurrence specification.
pub type Recurrence = recurrence::RecurrenceSpec<Rational>;
/// Exact solution sequence.
pub type RationalOrbit = recurrence::Orbit<Rational>;
