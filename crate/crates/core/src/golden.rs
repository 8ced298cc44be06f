//! Reference values of `P(N, n, x)` for `N = 0..=4`, `n = 0..=6`, and the text
//! table format used to print them.
//!
//! Table format: a header line `n  N=<N>`, then one line per `n` holding the
//! index, two spaces, and the polynomial in descending powers with explicit
//! signs (`x^2 - 5x + 2`). Tables are separated by a blank line.

use num_bigint::BigInt;

use crate::chg::{p_poly, ChgParams, PolyMethod};
use crate::error::{Error, Result};
use crate::{Poly, Rational};

pub const MAX_BIG_N: usize = 4;
pub const MAX_N: usize = 6;

/// `GOLDEN[N][n]`, transcribed term by term.
pub const GOLDEN: [[&str; MAX_N + 1]; MAX_BIG_N + 1] = [
    [
        "0",
        "1",
        "x + 1",
        "x^2 + x + 2",
        "x^3 + x^2 + 2x + 6",
        "x^4 + x^3 + 2x^2 + 6x + 24",
        "x^5 + x^4 + 2x^3 + 6x^2 + 24x + 120",
    ],
    [
        "-1",
        "-x + 1",
        "-x^2 + 2x + 1",
        "-x^3 + 3x^2 + 2x + 2",
        "-x^4 + 4x^3 + 3x^2 + 4x + 6",
        "-x^5 + 5x^4 + 4x^3 + 6x^2 + 12x + 24",
        "-x^6 + 6x^5 + 5x^4 + 8x^3 + 18x^2 + 48x + 120",
    ],
    [
        "x - 3",
        "x^2 - 5x + 2",
        "x^3 - 7x^2 + 6x + 2",
        "x^4 - 9x^3 + 12x^2 + 6x + 4",
        "x^5 - 11x^4 + 20x^3 + 12x^2 + 12x + 12",
        "x^6 - 13x^5 + 30x^4 + 20x^3 + 24x^2 + 36x + 48",
        "x^7 - 15x^6 + 42x^5 + 30x^4 + 40x^3 + 72x^2 + 144x + 240",
    ],
    [
        "-x^2 + 8x - 11",
        "-x^3 + 11x^2 - 26x + 6",
        "-x^4 + 14x^3 - 47x^2 + 24x + 6",
        "-x^5 + 17x^4 - 74x^3 + 60x^2 + 24x + 12",
        "-x^6 + 20x^5 - 107x^4 + 120x^3 + 60x^2 + 48x + 36",
        "-x^7 + 23x^6 - 146x^5 + 210x^4 + 120x^3 + 120x^2 + 144x + 144",
        "-x^8 + 26x^7 - 191x^6 + 336x^5 + 210x^4 + 240x^3 + 360x^2 + 576x + 720",
    ],
    [
        "x^3 - 15x^2 + 58x - 50",
        "x^4 - 19x^3 + 102x^2 - 154x + 24",
        "x^5 - 23x^4 + 158x^3 - 342x^2 + 120x + 24",
        "x^6 - 27x^5 + 226x^4 - 638x^3 + 360x^2 + 120x + 48",
        "x^7 - 31x^6 + 306x^5 - 1066x^4 + 840x^3 + 360x^2 + 240x + 144",
        "x^8 - 35x^7 + 398x^6 - 1650x^5 + 1680x^4 + 840x^3 + 720x^2 + 720x + 576",
        "x^9 - 39x^8 + 502x^7 - 2414x^6 + 3024x^5 + 1680x^4 + 1680x^3 + 2160x^2 + 2880x + 2880",
    ],
];

/// Parses the text rendering of a polynomial (integer or `(p/q)` coefficients).
pub fn parse_poly(text: &str) -> Result<Poly> {
    let bad = |what: &str| Error::InvalidParams(format!("cannot parse polynomial {text:?}: {what}"));
    let compact: String = text.split_whitespace().collect();
    if compact.is_empty() {
        return Err(bad("empty"));
    }
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    let mut depth = 0usize;
    for (i, ch) in compact.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.checked_sub(1).ok_or_else(|| bad("unbalanced parenthesis"))?,
            _ => {}
        }
        if (ch == '+' || ch == '-') && depth == 0 {
            if i > 0 {
                if current.is_empty() {
                    return Err(bad("dangling sign"));
                }
                terms.push((negative, std::mem::take(&mut current)));
            }
            negative = ch == '-';
        } else {
            current.push(ch);
        }
    }
    if current.is_empty() {
        return Err(bad("dangling sign"));
    }
    terms.push((negative, current));

    let mut coeffs: Vec<Rational> = Vec::new();
    for (negative, term) in terms {
        let (coef_text, exponent) = match term.find('x') {
            None => (term.as_str(), 0usize),
            Some(pos) => {
                let rest = &term[pos + 1..];
                let e = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^').and_then(|r| r.parse().ok()).ok_or_else(|| bad("bad exponent"))?
                };
                (&term[..pos], e)
            }
        };
        let coef_text = coef_text.trim_start_matches('(').trim_end_matches(')');
        let mut c = if coef_text.is_empty() {
            if exponent == 0 {
                return Err(bad("empty term"));
            }
            Rational::from_integer(1.into())
        } else if let Some((n, d)) = coef_text.split_once('/') {
            let n: BigInt = n.parse().map_err(|_| bad("bad numerator"))?;
            let d: BigInt = d.parse().map_err(|_| bad("bad denominator"))?;
            if d == BigInt::from(0) {
                return Err(bad("zero denominator"));
            }
            Rational::new(n, d)
        } else {
            Rational::from_integer(coef_text.parse::<BigInt>().map_err(|_| bad("bad coefficient"))?)
        };
        if negative {
            c = -c;
        }
        if coeffs.len() <= exponent {
            coeffs.resize(exponent + 1, Rational::from_integer(0.into()));
        }
        coeffs[exponent] = coeffs[exponent].clone() + c;
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// The reference polynomial `P(N, n, x)`, if tabulated.
pub fn golden_poly(big_n: usize, n: usize) -> Option<Poly> {
    GOLDEN.get(big_n)?.get(n).map(|s| parse_poly(s).expect("reference table parses"))
}

/// One table in the text format, computed from `p_poly`.
pub fn render_table(big_n: usize, max_n: usize, method: PolyMethod) -> String {
    let mut out = format!("n  N={big_n}\n");
    for n in 0..=max_n {
        out.push_str(&format!("{n}  {}\n", p_poly::<Rational>(ChgParams::new(big_n, n), method)));
    }
    out
}

/// All five reference tables, computed.
pub fn render_all(method: PolyMethod) -> String {
    (0..=MAX_BIG_N).map(|big_n| render_table(big_n, MAX_N, method)).collect::<Vec<_>>().join("\n")
}

/// All five reference tables, from the transcription.
pub fn reference_text() -> String {
    GOLDEN
        .iter()
        .enumerate()
        .map(|(big_n, rows)| {
            let mut out = format!("n  N={big_n}\n");
            for (n, row) in rows.iter().enumerate() {
                out.push_str(&format!("{n}  {row}\n"));
            }
            out
        })
        .collect::<Vec<_>>()
        .join("\n")
}

/// `(N, n)` entries where the computed polynomial differs from the reference.
pub fn golden_mismatches(method: PolyMethod) -> Vec<(usize, usize)> {
    let mut bad = Vec::new();
    for big_n in 0..=MAX_BIG_N {
        for n in 0..=MAX_N {
            if golden_poly(big_n, n) != Some(p_poly::<Rational>(ChgParams::new(big_n, n), method)) {
                bad.push((big_n, n));
            }
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Scalar;

    #[test]
    fn parser_handles_the_rendering() {
        let p = parse_poly("-x^2 + 8x - 11").unwrap();
        assert_eq!(p.coeffs(), &[Rational::from_i64(-11), Rational::from_i64(8), Rational::from_i64(-1)]);
        assert_eq!(parse_poly("0").unwrap(), Poly::zero());
        let p = parse_poly("-(1/3)x^2 + 1/2").unwrap();
        assert_eq!(p.to_string(), "-(1/3)x^2 + 1/2");
        assert!(parse_poly("x +").is_err());
        assert!(parse_poly("").is_err());
        assert!(parse_poly("3y").is_err());
    }

    #[test]
    fn transcription_renders_verbatim() {
        for rows in GOLDEN {
            for row in rows {
                assert_eq!(parse_poly(row).unwrap().to_string(), row);
            }
        }
    }

    #[test]
    fn tables_match_both_methods() {
        assert!(golden_mismatches(PolyMethod::Resummed).is_empty());
        assert!(golden_mismatches(PolyMethod::Direct).is_empty());
        assert_eq!(render_all(PolyMethod::Resummed), reference_text());
    }
}
