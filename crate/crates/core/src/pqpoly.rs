//! Word polynomials in `β_i` and `γ_{i,i+1}`.
//!
//! Iterating `Y_{k+1} = β_k Y_k + γ_{k-1,k} Y_{k-1}` gives
//! `Y_{n+1} = P_n Y_1 + γ_{-1,0} Q_{n-1} Y_0`, where `P_n` is the sum over all
//! ways of tiling the index slots `0..n` with single `β` slots and adjacent
//! `γ` pairs, and `Q_n` is the same tiling over slots `1..=n`. The number of
//! tilings of `n` slots is the Fibonacci number `F_{n+1}`, and the number of
//! `β` tokens in each word has the parity of `n`.
//!
//! Here `γ_{i-1,i}` is the same value as `γ_i` of the recurrence, so the
//! `gamma` slices taken by the evaluators are indexed like
//! [`crate::recurrence::YTransform::gamma`].

use std::fmt;

use crate::error::{Error, Result};
use crate::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Token {
    /// One slot, `β_i`.
    B,
    /// Two slots, `γ_{i,i+1}`.
    G,
}

impl Token {
    fn width(self) -> usize {
        match self {
            Token::B => 1,
            Token::G => 2,
        }
    }
}

/// A single monomial, stored as its token sequence; indices are assigned on
/// demand starting from `base`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BetaGammaWord {
    pub tokens: Vec<Token>,
    pub base: usize,
}

/// A token with its assigned index: `β_i` or `γ_{i,i+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexedSymbol {
    Beta(usize),
    Gamma(usize, usize),
}

impl fmt::Display for IndexedSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexedSymbol::Beta(i) => write!(f, "b{i}"),
            IndexedSymbol::Gamma(i, j) => write!(f, "g({i},{j})"),
        }
    }
}

impl BetaGammaWord {
    /// Number of index slots consumed.
    pub fn slots(&self) -> usize {
        self.tokens.iter().map(|t| t.width()).sum()
    }

    pub fn beta_count(&self) -> usize {
        self.tokens.iter().filter(|t| **t == Token::B).count()
    }

    pub fn symbols(&self) -> Vec<IndexedSymbol> {
        let mut next = self.base;
        self.tokens
            .iter()
            .map(|t| {
                let s = match t {
                    Token::B => IndexedSymbol::Beta(next),
                    Token::G => IndexedSymbol::Gamma(next, next + 1),
                };
                next += t.width();
                s
            })
            .collect()
    }

    /// Product of the assigned symbol values. `gamma[j]` is `γ_{j-1,j}`.
    pub fn evaluate<T: Scalar>(&self, beta: &[T], gamma: &[T]) -> Result<T> {
        self.symbols().into_iter().try_fold(T::one(), |acc, s| {
            let v = match s {
                IndexedSymbol::Beta(i) => beta.get(i).ok_or(Error::MissingIndex { symbol: 'b', index: i })?,
                IndexedSymbol::Gamma(_, j) => gamma.get(j).ok_or(Error::MissingIndex { symbol: 'g', index: j })?,
            };
            Ok(acc * v.clone())
        })
    }

    /// Token strings such as `["g(0,1)", "b2", "b3"]`.
    pub fn token_strings(&self) -> Vec<String> {
        self.symbols().iter().map(ToString::to_string).collect()
    }
}

impl fmt::Display for BetaGammaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tokens.is_empty() {
            return write!(f, "1");
        }
        write!(f, "{}", self.token_strings().join(" "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PqKind {
    P,
    Q,
}

/// `P_n` or `Q_n` as an ordered set of words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PqPoly {
    pub kind: PqKind,
    pub order: usize,
    pub words: Vec<BetaGammaWord>,
}

impl PqPoly {
    pub fn evaluate<T: Scalar>(&self, beta: &[T], gamma: &[T]) -> Result<T> {
        self.words
            .iter()
            .try_fold(T::zero(), |acc, w| Ok(acc + w.evaluate(beta, gamma)?))
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

impl fmt::Display for PqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.words.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// All tilings of `slots` slots, lexicographic with `B < G`.
fn tilings(slots: usize) -> Vec<Vec<Token>> {
    if slots == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in [Token::B, Token::G] {
        if first.width() > slots {
            continue;
        }
        for rest in tilings(slots - first.width()) {
            let mut w = Vec::with_capacity(rest.len() + 1);
            w.push(first);
            w.extend(rest);
            out.push(w);
        }
    }
    out
}

fn build(kind: PqKind, n: usize) -> PqPoly {
    let base = match kind {
        PqKind::P => 0,
        PqKind::Q => 1,
    };
    let words = tilings(n)
        .into_iter()
        .map(|tokens| BetaGammaWord { tokens, base })
        .collect();
    PqPoly { kind, order: n, words }
}

/// `P_n`, indices `0..n`.
pub fn build_p(n: usize) -> PqPoly {
    build(PqKind::P, n)
}

/// `Q_n`, indices `1..=n`.
pub fn build_q(n: usize) -> PqPoly {
    build(PqKind::Q, n)
}

/// `Y_{n+1} = P_n Y_1 + γ_{-1,0} Q_{n-1} Y_0`, with `Q_{-1} = 0`.
pub fn assemble_y<T: Scalar>(n: usize, y0: &T, y1: &T, beta: &[T], gamma: &[T]) -> Result<T> {
    let p_part = build_p(n).evaluate(beta, gamma)? * y1.clone();
    if n == 0 {
        return Ok(p_part);
    }
    let g0 = gamma.first().ok_or(Error::MissingIndex { symbol: 'g', index: 0 })?;
    let q_part = build_q(n - 1).evaluate(beta, gamma)?;
    Ok(p_part + g0.clone() * q_part * y0.clone())
}
