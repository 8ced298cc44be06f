//! The aggregated verification suite behind `secondsol selftest`.
//!
//! Each check is exact and self-contained; random inputs come from a seeded
//! ChaCha stream so runs are reproducible.

use std::fmt;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bezout::{bezout_phi, cancellation_residual, compare_footnote, deg, ext_euclid, FootnoteComparison};
use crate::chg::{
    c_coeff, casoratian_check, casoratian_closed, casoratian_poly, low_coefficient, p_at_zero, p_poly, verify_b_recurrence,
    verify_n_recurrence, ChgParams, CMethod, Kind, PolyMethod,
};
use crate::combinatorics::{factorial, fibonacci, harmonic};
use crate::golden::{golden_mismatches, MAX_BIG_N, MAX_N};
use crate::poly::DensePoly;
use crate::pqpoly::{assemble_y, build_p, build_q};
use crate::recurrence::{casorati, casorati_gamma_product, dalembert_second, fundamental_pair, iterate_y, BuiltinExample};
use crate::scalar::{is_integer, is_positive_integer};
use crate::series::{compare, psi_dl, psi_pm};
use crate::{Poly, Rational, Scalar};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn from_failures(name: &'static str, summary: String, failures: Vec<String>) -> Self {
        if failures.is_empty() {
            Self { name, passed: true, detail: summary }
        } else {
            let shown: Vec<_> = failures.iter().take(5).cloned().collect();
            let more = failures.len().saturating_sub(shown.len());
            let mut detail = shown.join("; ");
            if more > 0 {
                detail.push_str(&format!("; ... {more} more"));
            }
            Self { name, passed: false, detail }
        }
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

fn q(n: i64) -> Rational {
    Rational::from_i64(n)
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::from_ratio(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

fn random_nonzero(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let v = random_rational(rng);
        if !v.is_zero() {
            return v;
        }
    }
}

fn random_vec(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rational> {
    (0..len).map(|_| random_rational(rng)).collect()
}

fn random_poly(rng: &mut ChaCha8Rng, max_degree: usize) -> Poly {
    let len = rng.gen_range(0..=max_degree + 1);
    DensePoly::from_coeffs(random_vec(rng, len))
}

/// Every tabulated `P(N, n, x)` by both construction routes.
pub fn check_golden_tables() -> CheckResult {
    let mut failures = Vec::new();
    for method in [PolyMethod::Resummed, PolyMethod::Direct] {
        for (big_n, n) in golden_mismatches(method) {
            failures.push(format!("{method:?} P({big_n},{n})"));
        }
    }
    let count = (MAX_BIG_N + 1) * (MAX_N + 1);
    CheckResult::from_failures("golden tables", format!("{count} polynomials, both methods"), failures)
}

/// The four worked reduction-of-order examples against their closed forms,
/// `1 <= n <= last`, plus the index-0 placeholder.
pub fn check_dalembert_examples(last: usize) -> CheckResult {
    let one = q(1);
    let mut failures = Vec::new();
    for ex in BuiltinExample::ALL {
        let r = if ex == BuiltinExample::DoubleRoot { q(3) } else { one.clone() };
        let spec = ex.spec(&r);
        let y = match dalembert_second(&spec, &ex.first_solution(&r, last), last) {
            Ok(y) => y,
            Err(e) => {
                failures.push(format!("{}: {e}", ex.name()));
                continue;
            }
        };
        if !y.values()[0].is_zero() {
            failures.push(format!("{}: y_0 is not the empty-sum zero", ex.name()));
        }
        if !spec.is_solution_from(&y, 1) {
            failures.push(format!("{}: output does not solve the recurrence", ex.name()));
        }
        for n in 1..=last {
            let expected = match ex {
                BuiltinExample::DoubleRoot => q(n as i64 - 1) * r.pow_usize(n),
                BuiltinExample::Factorial => {
                    factorial::<Rational>(n)
                        * (2..=n).fold(q(0), |acc, l| acc + Rational::sign_pow(l - 1) / factorial::<Rational>(l))
                }
                BuiltinExample::Harmonic => (1..n).fold(q(0), |acc, k| acc + Rational::from_ratio(1, k as i64 + 1)),
                BuiltinExample::Ex4 => factorial::<Rational>(n + 2) - q(3) * q(2).pow_usize(n),
            };
            if y.values()[n] != expected {
                failures.push(format!("{} at n={n}: got {}, expected {expected}", ex.name(), y.values()[n]));
            }
        }
    }
    CheckResult::from_failures("d'Alembert examples", format!("4 examples, 1 <= n <= {last}"), failures)
}

/// Word counts, assembly against direct iteration, homogeneity.
pub fn check_pq_construction(seed: u64) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for n in 0..=20 {
        let (p, qq) = (build_p(n).len() as u128, build_q(n).len() as u128);
        if p != fibonacci(n + 1) || qq != fibonacci(n + 1) {
            failures.push(format!("|P_{n}| = {p}, |Q_{n}| = {qq}, F = {}", fibonacci(n + 1)));
        }
    }
    const LAST: usize = 12;
    for trial in 0..100 {
        let beta = random_vec(&mut rng, LAST + 2);
        let gamma = random_vec(&mut rng, LAST + 2);
        let (y0, y1) = (random_rational(&mut rng), random_rational(&mut rng));
        let orbit = iterate_y(&beta, &gamma, y0.clone(), y1.clone(), LAST + 1).expect("enough coefficients");
        for n in 0..=LAST {
            match assemble_y(n, &y0, &y1, &beta, &gamma) {
                Ok(v) if v == orbit.values()[n + 1] => {}
                Ok(v) => failures.push(format!("trial {trial}: Y_{} = {v} vs {}", n + 1, orbit.values()[n + 1])),
                Err(e) => failures.push(format!("trial {trial}: {e}")),
            }
        }
        let lambda = random_nonzero(&mut rng);
        let sb: Vec<Rational> = beta.iter().map(|b| b.clone() * lambda.clone()).collect();
        let sg: Vec<Rational> = gamma.iter().map(|g| g.clone() * lambda.clone() * lambda.clone()).collect();
        for n in 0..=LAST {
            let p = build_p(n);
            if p.evaluate(&sb, &sg).ok() != p.evaluate(&beta, &gamma).ok().map(|v| v * lambda.pow_usize(n)) {
                failures.push(format!("trial {trial}: P_{n} not homogeneous of degree {n}"));
            }
        }
    }
    CheckResult::from_failures(
        "PQ construction",
        "counts n <= 20, 100 random assemblies n <= 12, homogeneity".into(),
        failures,
    )
}

/// Fundamental-pair Casoratians on random γ and the confluent Casoratian.
pub fn check_casoratians(seed: u64) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for trial in 0..100 {
        let beta = random_vec(&mut rng, 14);
        let gamma = random_vec(&mut rng, 14);
        let (ya, yb) = fundamental_pair(&beta, &gamma, 14).expect("enough coefficients");
        for n in 0..=12 {
            if casorati(&ya, &yb, n + 1).ok() != casorati_gamma_product(&gamma, n).ok() {
                failures.push(format!("trial {trial}: C({}) differs from the γ product", n + 1));
            }
        }
    }
    for big_n in 0..=8 {
        for n in 0..=8 {
            let p = ChgParams::new(big_n, n);
            if !casoratian_check::<Rational>(p) || casoratian_closed::<Rational>(p).is_zero() {
                failures.push(format!("C(N+1) at N={big_n}, n={n}: {}", casoratian_poly::<Rational>(p)));
            }
        }
        if big_n == 0 {
            for n in 0..=8 {
                let c1 = casoratian_closed::<Rational>(ChgParams::new(0, n));
                if c1 != factorial::<Rational>(n) / q(n as i64 + 1) {
                    failures.push(format!("C(1) at n={n} is {c1}"));
                }
            }
        }
    }
    CheckResult::from_failures("Casoratians", "100 random γ, n <= 12; confluent N, n <= 8".into(), failures)
}

/// Both `c` formulas, the top coefficient, the low part, both `P` routes.
pub fn check_coefficient_resummation() -> CheckResult {
    let mut failures = Vec::new();
    for big_n in 0..=12usize {
        for n in 0..=12usize {
            let p = ChgParams::new(big_n, n);
            let resummed = p_poly::<Rational>(p, PolyMethod::Resummed);
            if resummed != p_poly::<Rational>(p, PolyMethod::Direct) {
                failures.push(format!("direct and resummed P differ at N={big_n}, n={n}"));
            }
            if !resummed.coeffs().iter().all(is_integer) {
                failures.push(format!("P({big_n},{n}) has a non-integer coefficient"));
            }
            for m in 0..n {
                let low = low_coefficient::<Rational>(p, m);
                if !is_positive_integer(&low) || resummed.coeff(m) != low {
                    failures.push(format!("low coefficient m={m} at N={big_n}, n={n}"));
                }
            }
            for m in 0..big_n {
                let ds = c_coeff::<Rational>(p, m, CMethod::DoubleSum).expect("m in range");
                let hs = c_coeff::<Rational>(p, m, CMethod::Harmonic).expect("m in range");
                if ds != hs || resummed.coeff(n + m) != hs {
                    failures.push(format!("c({big_n},{n},{m}): double sum {ds}, harmonic {hs}"));
                }
            }
            if big_n >= 1 && c_coeff::<Rational>(p, big_n - 1, CMethod::Harmonic).ok() != Some(Rational::sign_pow(big_n)) {
                failures.push(format!("c({big_n},{n},N-1) is not (-1)^N"));
            }
        }
    }
    CheckResult::from_failures("coefficient resummation", "N, n <= 12, all m".into(), failures)
}

/// The recurrence in `N`, the contiguous relation in `n`, and `P(N, n, 0)`.
pub fn check_recurrences() -> CheckResult {
    let mut failures = Vec::new();
    for big_n in 1..=10 {
        for n in 0..=8 {
            let p = ChgParams::new(big_n, n);
            for kind in [Kind::First, Kind::Second] {
                if !verify_n_recurrence::<Rational>(p, kind) {
                    failures.push(format!("N-recurrence {kind:?} at N={big_n}, n={n}"));
                }
            }
        }
    }
    for big_n in 0..=8 {
        for n in 1..=8 {
            let p = ChgParams::new(big_n, n);
            for kind in [Kind::First, Kind::Second] {
                if !verify_b_recurrence::<Rational>(p, kind) {
                    failures.push(format!("n-recurrence {kind:?} at N={big_n}, n={n}"));
                }
            }
        }
    }
    for big_n in 0..=10 {
        for n in 1..=10 {
            let p = ChgParams::new(big_n, n);
            let at_zero = p_poly::<Rational>(p, PolyMethod::Resummed).coeff(0);
            if p_at_zero::<Rational>(p).ok() != Some(at_zero) {
                failures.push(format!("P({big_n},{n},0) != N!(n-1)!"));
            }
        }
    }
    CheckResult::from_failures("recurrences", "N-recurrence N <= 10, n <= 8; n-recurrence N, n <= 8; P(N,n,0)".into(), failures)
}

/// Minimal Bézout pair, exact degrees, cancellation, closed forms.
pub fn check_bezout() -> CheckResult {
    let mut failures = Vec::new();
    let mut compared = 0;
    for big_n in 2..=10usize {
        for n in 0..=10usize {
            let p = ChgParams::new(big_n, n);
            let pair = match bezout_phi::<Rational>(p) {
                Ok(pair) => pair,
                Err(e) => {
                    failures.push(format!("N={big_n}, n={n}: {e}"));
                    continue;
                }
            };
            if !pair.satisfies_identity() {
                failures.push(format!("sΦ + tΦ' != 1 at N={big_n}, n={n}"));
            }
            if deg(&pair.s) != big_n as i64 - 2 || deg(&pair.t) != big_n as i64 - 1 {
                failures.push(format!("degrees ({}, {}) at N={big_n}, n={n}", deg(&pair.s), deg(&pair.t)));
            }
            if !cancellation_residual(&pair).is_zero() {
                failures.push(format!("cancellation fails at N={big_n}, n={n}"));
            }
            match compare_footnote::<Rational>(p) {
                Ok(FootnoteComparison::Equal) => compared += 1,
                Ok(FootnoteComparison::Differs { closed_form, .. }) => failures.push(format!(
                    "closed form differs at N={big_n}, n={n}: s = {}, t = {} vs s = {}, t = {}",
                    closed_form.s, closed_form.t, pair.s, pair.t
                )),
                Ok(FootnoteComparison::Undefined(why)) => failures.push(format!("closed form undefined: {why}")),
                Err(e) => failures.push(e.to_string()),
            }
        }
    }
    CheckResult::from_failures(
        "Bézout",
        format!("2 <= N <= 10, n <= 10; closed forms equal at {compared} points"),
        failures,
    )
}

/// `Ψ_PM` against `Ψ_DL` through `x^order`.
pub fn check_series(order: usize) -> CheckResult {
    let mut failures = Vec::new();
    for big_n in 0..=5 {
        for n in 0..=5 {
            let r = compare::<Rational>(ChgParams::new(big_n, n), order);
            if let Some(m) = r.first_mismatch {
                failures.push(format!(
                    "N={big_n}, n={n}: {} at x^{}: {} vs {}",
                    m.channel.name(),
                    m.exponent,
                    m.lhs,
                    m.rhs
                ));
            }
        }
    }
    CheckResult::from_failures("series", format!("N, n <= 5, M = {order}"), failures)
}

/// Ring axioms, division round-trip, extended Euclid on random polynomials.
pub fn check_ring_axioms(seed: u64) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for trial in 0..200 {
        let (a, b, c) = (random_poly(&mut rng, 12), random_poly(&mut rng, 12), random_poly(&mut rng, 12));
        if &a + &b != &b + &a || &a * &b != &b * &a {
            failures.push(format!("trial {trial}: commutativity"));
        }
        if &(&a * &b) * &c != &a * &(&b * &c) || &(&a + &b) + &c != &a + &(&b + &c) {
            failures.push(format!("trial {trial}: associativity"));
        }
        if &a * &(&b + &c) != &(&a * &b) + &(&a * &c) {
            failures.push(format!("trial {trial}: distributivity"));
        }
        if !(&a - &a).is_zero() || &a * &Poly::one() != a {
            failures.push(format!("trial {trial}: identities"));
        }
        if !b.is_zero() {
            let (quo, rem) = a.divrem(&b).expect("nonzero divisor");
            if &(&quo * &b) + &rem != a || rem.degree().map_or(false, |d| d >= b.degree().unwrap()) {
                failures.push(format!("trial {trial}: division"));
            }
        }
        if !(a.is_zero() && b.is_zero()) {
            let e = ext_euclid(&a, &b).expect("not both zero");
            if &(&e.s * &a) + &(&e.t * &b) != e.g || e.g.leading() != Some(&q(1)) {
                failures.push(format!("trial {trial}: extended Euclid"));
            }
        }
    }
    CheckResult::from_failures("ring axioms", "200 random triples, degree <= 12".into(), failures)
}

/// Raising the truncation order never changes lower coefficients.
pub fn check_truncation_stability(seed: u64) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for _ in 0..40 {
        let p = ChgParams::new(rng.gen_range(0..=5), rng.gen_range(0..=5));
        let lo = rng.gen_range(0..=12);
        let hi = lo + rng.gen_range(1..=10);
        if psi_dl::<Rational>(p, hi).truncated(lo) != psi_dl::<Rational>(p, lo)
            || psi_pm::<Rational>(p, hi).truncated(lo) != psi_pm::<Rational>(p, lo)
        {
            failures.push(format!("N={}, n={}, {lo} < {hi}", p.big_n, p.n));
        }
    }
    let exact: Vec<Rational> = (0..12).map(|k| Rational::from_i64(1) / factorial::<Rational>(k)).collect();
    if crate::poly::exp_truncated::<Rational>(11).coeffs() != exact.as_slice() {
        failures.push("exp series".into());
    }
    if harmonic::<Rational>(4) != Rational::from_ratio(25, 12) {
        failures.push("harmonic numbers".into());
    }
    CheckResult::from_failures("truncation stability", "40 random (N, n, M) pairs".into(), failures)
}

/// The whole suite in a fixed order.
pub fn run_all(seed: u64) -> Vec<CheckResult> {
    vec![
        check_golden_tables(),
        check_dalembert_examples(20),
        check_pq_construction(seed),
        check_casoratians(seed.wrapping_add(1)),
        check_coefficient_resummation(),
        check_recurrences(),
        check_bezout(),
        check_series(20),
        check_ring_axioms(seed.wrapping_add(2)),
        check_truncation_stability(seed.wrapping_add(3)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cheap_checks_pass() {
        assert!(check_golden_tables().passed);
        assert!(check_dalembert_examples(12).passed, "{}", check_dalembert_examples(12));
        assert!(check_truncation_stability(7).passed);
    }

    #[test]
    fn failure_detail_is_capped() {
        let r = CheckResult::from_failures("x", String::new(), (0..8).map(|i| i.to_string()).collect());
        assert!(!r.passed);
        assert_eq!(r.detail, "0; 1; 2; 3; 4; ... 3 more");
        assert_eq!(r.to_string(), "FAIL x: 0; 1; 2; 3; 4; ... 3 more");
    }
}
