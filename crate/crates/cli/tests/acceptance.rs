//! Acceptance suite: one line per criterion, each timed against its budget.
//! Runs without the libtest harness so the lines always reach stdout.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use secondsol::bezout::{bezout_phi, compare_footnote, FootnoteComparison};
use secondsol::chg::{c_coeff, casoratian_poly, p_poly, psibar, ChgParams, CMethod, PolyMethod};
use secondsol::pqpoly::{assemble_y, build_p};
use secondsol::recurrence::{casorati, dalembert_second, BuiltinExample, Orbit};
use secondsol::series::compare;
use secondsol::{Poly, Rational, Scalar};

fn q(n: i64) -> Rational {
    Rational::from_i64(n)
}

fn fact(m: usize) -> Rational {
    (1..=m as i64).fold(q(1), |acc, k| acc * q(k))
}

fn poly_desc(c: &[i64]) -> Poly {
    Poly::from_coeffs(c.iter().rev().map(|&v| q(v)).collect())
}

/// `Φ(N, n, x)` with coefficients `(-1)^k C(N, k) / (n+1)_k`.
fn phi_oracle(big_n: usize, n: usize) -> Poly {
    let mut coeffs = Vec::new();
    let mut c = q(1);
    for k in 0..=big_n {
        coeffs.push(c.clone());
        c = c * q(-(big_n as i64 - k as i64)) / (q(k as i64 + 1) * q((n + k + 1) as i64));
    }
    Poly::from_coeffs(coeffs)
}

fn x_poly() -> Poly {
    Poly::from_coeffs(vec![q(0), q(1)])
}

struct Outcome {
    failures: Vec<String>,
    summary: String,
}

fn ok_if(failures: Vec<String>, summary: impl Into<String>) -> Outcome {
    Outcome { failures, summary: summary.into() }
}

/// P(N, n, x) for N = 0..=4, n = 0..=6, descending integer coefficients.
const TABLES: [[&[i64]; 7]; 5] = [
    [&[0], &[1], &[1, 1], &[1, 1, 2], &[1, 1, 2, 6], &[1, 1, 2, 6, 24], &[1, 1, 2, 6, 24, 120]],
    [
        &[-1],
        &[-1, 1],
        &[-1, 2, 1],
        &[-1, 3, 2, 2],
        &[-1, 4, 3, 4, 6],
        &[-1, 5, 4, 6, 12, 24],
        &[-1, 6, 5, 8, 18, 48, 120],
    ],
    [
        &[1, -3],
        &[1, -5, 2],
        &[1, -7, 6, 2],
        &[1, -9, 12, 6, 4],
        &[1, -11, 20, 12, 12, 12],
        &[1, -13, 30, 20, 24, 36, 48],
        &[1, -15, 42, 30, 40, 72, 144, 240],
    ],
    [
        &[-1, 8, -11],
        &[-1, 11, -26, 6],
        &[-1, 14, -47, 24, 6],
        &[-1, 17, -74, 60, 24, 12],
        &[-1, 20, -107, 120, 60, 48, 36],
        &[-1, 23, -146, 210, 120, 120, 144, 144],
        &[-1, 26, -191, 336, 210, 240, 360, 576, 720],
    ],
    [
        &[1, -15, 58, -50],
        &[1, -19, 102, -154, 24],
        &[1, -23, 158, -342, 120, 24],
        &[1, -27, 226, -638, 360, 120, 48],
        &[1, -31, 306, -1066, 840, 360, 240, 144],
        &[1, -35, 398, -1650, 1680, 840, 720, 720, 576],
        &[1, -39, 502, -2414, 3024, 1680, 1680, 2160, 2880, 2880],
    ],
];

fn criterion_1() -> Outcome {
    let mut failures = Vec::new();
    for (big_n, rows) in TABLES.iter().enumerate() {
        for (n, row) in rows.iter().enumerate() {
            let expected = poly_desc(row);
            for method in [PolyMethod::Resummed, PolyMethod::Direct] {
                let got = p_poly::<Rational>(ChgParams::new(big_n, n), method);
                if got != expected {
                    failures.push(format!("P({big_n},{n}) {method:?}: {got} vs {expected}"));
                }
            }
        }
    }
    ok_if(failures, "35 reference polynomials, both construction routes")
}

fn criterion_2() -> Outcome {
    const LAST: usize = 20;
    let mut failures = Vec::new();
    for ex in BuiltinExample::ALL {
        let r = if ex == BuiltinExample::DoubleRoot { Rational::from_ratio(-5, 3) } else { q(1) };
        let y = dalembert_second(&ex.spec(&r), &ex.first_solution(&r, LAST), LAST).expect("valid example");
        if !y.values()[0].is_zero() {
            failures.push(format!("{}: y_0 = {}", ex.name(), y.values()[0]));
        }
        for n in 1..=LAST {
            let expected = match ex {
                BuiltinExample::DoubleRoot => q(n as i64 - 1) * r.pow_usize(n),
                BuiltinExample::Factorial => {
                    let mut s = q(0);
                    for l in 2..=n {
                        let sign = if l % 2 == 1 { q(1) } else { q(-1) };
                        s = s + sign / fact(l);
                    }
                    fact(n) * s
                }
                BuiltinExample::Harmonic => (1..n).fold(q(0), |acc, k| acc + Rational::from_ratio(1, k as i64 + 1)),
                BuiltinExample::Ex4 => fact(n + 2) - q(3) * q(2).pow_usize(n),
            };
            if y.values()[n] != expected {
                failures.push(format!("{} n={n}: {} vs {expected}", ex.name(), y.values()[n]));
            }
        }
    }
    ok_if(failures, "four worked examples, 1 <= n <= 20, y_0 = 0 placeholder")
}

fn random_q(rng: &mut ChaCha8Rng) -> Rational {
    Rational::from_ratio(rng.gen_range(-12..=12), rng.gen_range(1..=7))
}

fn criterion_3() -> Outcome {
    let mut failures = Vec::new();
    let (mut f0, mut f1) = (0u128, 1u128);
    for n in 0..=20 {
        // f1 = F_{n+1}
        let count = build_p(n).len() as u128;
        if count != f1 {
            failures.push(format!("|P_{n}| = {count}, F_{} = {f1}", n + 1));
        }
        (f0, f1) = (f1, f0 + f1);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce55);
    for trial in 0..100 {
        let beta: Vec<Rational> = (0..14).map(|_| random_q(&mut rng)).collect();
        let gamma: Vec<Rational> = (0..14).map(|_| random_q(&mut rng)).collect();
        let (y0, y1) = (random_q(&mut rng), random_q(&mut rng));
        // matrix iteration: (Y_{k+2}, Y_{k+1}) = [[β_k, γ_k], [1, 0]] (Y_{k+1}, Y_k)
        let mut state = (y1.clone(), y0.clone());
        let mut ys = vec![y0.clone(), y1.clone()];
        for k in 0..12 {
            state = (beta[k].clone() * state.0.clone() + gamma[k].clone() * state.1.clone(), state.0);
            ys.push(state.0.clone());
        }
        for n in 0..=12 {
            let got = assemble_y(n, &y0, &y1, &beta, &gamma).expect("enough coefficients");
            if got != ys[n + 1] {
                failures.push(format!("trial {trial}: Y_{}", n + 1));
            }
        }
        let lambda = loop {
            let v = random_q(&mut rng);
            if !v.is_zero() {
                break v;
            }
        };
        let sb: Vec<Rational> = beta.iter().map(|b| b.clone() * lambda.clone()).collect();
        let sg: Vec<Rational> = gamma.iter().map(|g| g.clone() * lambda.clone() * lambda.clone()).collect();
        for n in 0..=12 {
            let p = build_p(n);
            let scaled = p.evaluate(&sb, &sg).expect("enough coefficients");
            let plain = p.evaluate(&beta, &gamma).expect("enough coefficients");
            if scaled != plain * lambda.pow_usize(n) {
                failures.push(format!("trial {trial}: homogeneity of P_{n}"));
            }
        }
    }
    ok_if(failures, "counts n <= 20; 100 random sequences n <= 12; λ-scaling")
}

fn criterion_4() -> Outcome {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0xca50);
    for trial in 0..100 {
        let beta: Vec<Rational> = (0..14).map(|_| random_q(&mut rng)).collect();
        let gamma: Vec<Rational> = (0..14).map(|_| random_q(&mut rng)).collect();
        let run = |y0: Rational, y1: Rational| {
            let mut ys = vec![y0, y1];
            for k in 0..13 {
                let next = beta[k].clone() * ys[k + 1].clone() + gamma[k].clone() * ys[k].clone();
                ys.push(next);
            }
            Orbit::new(ys)
        };
        let (ya, yb) = (run(q(1), q(0)), run(q(0), q(1)));
        let mut product = q(1);
        for n in 0..=12usize {
            product = product * gamma[n].clone();
            let sign = if n % 2 == 0 { q(-1) } else { q(1) };
            if casorati(&ya, &yb, n + 1).expect("in range") != sign * product.clone() {
                failures.push(format!("trial {trial}: C({})", n + 1));
            }
        }
    }
    for big_n in 0..=8usize {
        for n in 0..=8usize {
            let c = casoratian_poly::<Rational>(ChgParams::new(big_n, n));
            let closed = fact(big_n) * fact(n) * fact(n) / fact(big_n + n + 1);
            if c != Poly::from_coeffs(vec![closed.clone()]) || closed.is_zero() {
                failures.push(format!("chg C(N+1) at N={big_n}, n={n}: {c}"));
            }
            if big_n == 0 && closed != fact(n) / q(n as i64 + 1) {
                failures.push(format!("C(1) at n={n}"));
            }
        }
    }
    ok_if(failures, "100 random γ, n <= 12; confluent N, n <= 8 incl. C(1)")
}

fn criterion_5() -> Outcome {
    let mut failures = Vec::new();
    for big_n in 0..=12usize {
        for n in 0..=12usize {
            let p = ChgParams::new(big_n, n);
            let poly = p_poly::<Rational>(p, PolyMethod::Resummed);
            for m in 0..big_n {
                let ds = c_coeff::<Rational>(p, m, CMethod::DoubleSum).expect("m < N");
                let hs = c_coeff::<Rational>(p, m, CMethod::Harmonic).expect("m < N");
                if ds != hs {
                    failures.push(format!("c({big_n},{n},{m}): {ds} vs {hs}"));
                }
            }
            if big_n >= 1 {
                let top = c_coeff::<Rational>(p, big_n - 1, CMethod::Harmonic).expect("m < N");
                let sign = if big_n % 2 == 0 { q(1) } else { q(-1) };
                if top != sign {
                    failures.push(format!("c({big_n},{n},N-1) = {top}"));
                }
            }
            for m in 0..n {
                let low = fact(big_n + m) * fact(n - m - 1) / fact(m);
                let got = poly.coeff(m);
                if got != low || !got.is_integer() || got <= q(0) {
                    failures.push(format!("low coefficient m={m} at N={big_n}, n={n}: {got}"));
                }
            }
        }
    }
    ok_if(failures, "N, n <= 12, every m")
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    let x = x_poly();
    let k = |v: usize| Poly::from_coeffs(vec![q(v as i64)]);
    for big_n in 1..=10usize {
        for n in 0..=8usize {
            let middle = &k(2 * big_n + n + 1) - &x;
            let residual = |f: &dyn Fn(usize) -> Poly| {
                &(&(&k(big_n + n + 1) * &f(big_n + 1)) - &(&middle * &f(big_n))) + &(&k(big_n) * &f(big_n - 1))
            };
            if !residual(&|nn| phi_oracle(nn, n)).is_zero() {
                failures.push(format!("N-recurrence Φ at N={big_n}, n={n}"));
            }
            if !residual(&|nn| psibar::<Rational>(ChgParams::new(nn, n))).is_zero() {
                failures.push(format!("N-recurrence Ψ̄ at N={big_n}, n={n}"));
            }
        }
    }
    for big_n in 0..=8usize {
        for n in 1..=8usize {
            let f = |nn: usize| psibar::<Rational>(ChgParams::new(big_n, nn));
            // multiplied through by x^{n+1}
            let t1 = &(&k(n * (n + 1)) * &(&x * &x)) * &f(n - 1);
            let t2 = &(&(&k(n + 1) * &(&k(n) + &x)) * &x) * &f(n);
            let t3 = &(&k(n + 1 + big_n) * &x) * &f(n + 1);
            if !(&(&t1 - &t2) + &t3).is_zero() {
                failures.push(format!("n-recurrence second kind at N={big_n}, n={n}"));
            }
        }
    }
    for big_n in 0..=10usize {
        for n in 1..=10usize {
            let at0 = p_poly::<Rational>(ChgParams::new(big_n, n), PolyMethod::Resummed).coeff(0);
            if at0 != fact(big_n) * fact(n - 1) {
                failures.push(format!("P({big_n},{n},0) = {at0}"));
            }
        }
    }
    ok_if(failures, "N-recurrence 1 <= N <= 10, n <= 8; n-recurrence N, n <= 8; P(N,n,0)")
}

fn criterion_7() -> Outcome {
    let mut failures = Vec::new();
    let x = x_poly();
    for big_n in 2..=10usize {
        for n in 0..=10usize {
            let p = ChgParams::new(big_n, n);
            let pair = bezout_phi::<Rational>(p).expect("N >= 1");
            let phi = phi_oracle(big_n, n);
            let dphi = phi.derivative();
            if &(&pair.s * &phi) + &(&pair.t * &dphi) != Poly::one() {
                failures.push(format!("sΦ + tΦ' at N={big_n}, n={n}"));
            }
            if pair.s.degree() != Some(big_n - 2) || pair.t.degree() != Some(big_n - 1) {
                failures.push(format!("degrees at N={big_n}, n={n}: {:?}, {:?}", pair.s.degree(), pair.t.degree()));
            }
            let c = q(n as i64 + 1) * fact(n + big_n) / (fact(n) * fact(big_n));
            let weight = Poly::from_coeffs(vec![q(n as i64 + 1), q(-1)]);
            let lhs = &(&(&x * &pair.t.derivative()) - &(&weight * &pair.t)) + &(&x * &pair.s);
            if lhs != phi.scale(&c) {
                failures.push(format!("cancellation at N={big_n}, n={n}"));
            }
            match compare_footnote::<Rational>(p) {
                Ok(FootnoteComparison::Equal) => {}
                Ok(FootnoteComparison::Differs { closed_form, .. }) => failures.push(format!(
                    "closed form differs at N={big_n}, n={n}: s = {}, t = {}",
                    closed_form.s, closed_form.t
                )),
                Ok(FootnoteComparison::Undefined(why)) => failures.push(why),
                Err(e) => failures.push(e.to_string()),
            }
        }
    }
    ok_if(failures, "2 <= N <= 10, n <= 10; closed forms equal everywhere")
}

fn criterion_8() -> Outcome {
    let mut failures = Vec::new();
    for big_n in 0..=5usize {
        for n in 0..=5usize {
            let r = compare::<Rational>(ChgParams::new(big_n, n), 20);
            if !r.equal {
                failures.push(format!("N={big_n}, n={n}: {:?}", r.first_mismatch));
            }
        }
    }
    ok_if(failures, "N, n <= 5, M = 20, all channels")
}

fn criterion_9() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_secondsol")).arg("selftest").output().expect("binary runs");
    let stdout = String::from_utf8_lossy(&out.stdout);
    let mut failures: Vec<String> = stdout.lines().filter(|l| l.starts_with("FAIL")).map(String::from).collect();
    if !out.status.success() {
        failures.push(format!("exit status {}", out.status));
    }
    ok_if(failures, stdout.lines().last().unwrap_or("").to_string())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, u64); 9] = [
        ("1 golden tables", criterion_1, 1),
        ("2 d'Alembert examples", criterion_2, 1),
        ("3 PQ construction", criterion_3, 5),
        ("4 Casoratians", criterion_4, 5),
        ("5 coefficient resummation", criterion_5, 10),
        ("6 recurrences", criterion_6, 10),
        ("7 Bézout", criterion_7, 30),
        ("8 series", criterion_8, 30),
        ("9 selftest via CLI", criterion_9, 120),
    ];
    let mut all_ok = true;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed < Duration::from_secs(budget);
        let ok = outcome.failures.is_empty() && in_time;
        all_ok &= ok;
        let tag = if ok { "PASS" } else { "FAIL" };
        println!(
            "{tag} criterion {name}: {} [{:.3}s / {budget}s, exact]",
            outcome.summary,
            elapsed.as_secs_f64()
        );
        if !in_time {
            println!("    over time budget");
        }
        for f in outcome.failures.iter().take(10) {
            println!("    {f}");
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
