//! Factorials, rising factorials, binomials and harmonic range sums.
//!
//! Empty products are one and empty sums are zero throughout.

use crate::Scalar;

/// `m!`.
pub fn factorial<T: Scalar>(m: usize) -> T {
    (1..=m).fold(T::one(), |acc, k| acc * T::from_usize(k))
}

/// Rising factorial `a (a+1) ... (a+k-1)`.
pub fn pochhammer<T: Scalar>(a: &T, k: usize) -> T {
    let mut acc = T::one();
    let mut term = a.clone();
    for _ in 0..k {
        acc = acc * term.clone();
        if acc.is_zero() {
            return acc;
        }
        term = term + T::one();
    }
    acc
}

/// Rising factorial with an integer base, `(a)_k` for `a` in `i64`.
pub fn pochhammer_int<T: Scalar>(a: i64, k: usize) -> T {
    pochhammer(&T::from_i64(a), k)
}

/// `binom(n, k)`, zero when `k > n`.
pub fn binomial<T: Scalar>(n: usize, k: usize) -> T {
    if k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    let mut acc = T::one();
    for i in 0..k {
        acc = acc * T::from_usize(n - i) / T::from_usize(i + 1);
    }
    acc
}

/// `sum_{k=lo}^{hi} 1/k`; zero when `hi < lo`.
///
/// Panics if `lo == 0`.
pub fn harmonic_range<T: Scalar>(lo: usize, hi: i64) -> T {
    assert!(lo >= 1, "harmonic_range requires lo >= 1");
    let mut acc = T::zero();
    let mut k = lo as i64;
    while k <= hi {
        acc = acc + T::one() / T::from_i64(k);
        k += 1;
    }
    acc
}

/// Harmonic number `H_m`.
pub fn harmonic<T: Scalar>(m: usize) -> T {
    harmonic_range(1, m as i64)
}

/// Fibonacci numbers with `F_1 = F_2 = 1`, `F_0 = 0`.
pub fn fibonacci(n: usize) -> u128 {
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 0..n {
        let next = a + b;
        a = b;
        b = next;
    }
    a
}
