//! JSON encoding of exact values and reports.
//!
//! - rational: `{"num": "-5", "den": "2"}` (decimal strings, reduced, `den > 0`)
//! - polynomial: `[[exponent, num, den], ...]`, descending exponent, zero
//!   coefficients omitted
//! - orbit: array of rationals
//! - word: array of token strings (`"b2"`, `"g(0,1)"`)

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::bezout::{BezoutPair, BezoutReport};
use crate::chg::ChgParams;
use crate::error::{Error, Result};
use crate::laurent::{Channel, LaurentLogExpansion, Mismatch};
use crate::pqpoly::{BetaGammaWord, PqKind, PqPoly, Token};
use crate::series::ExpansionReport;
use crate::{Poly, Rational, RationalOrbit};

fn shape(msg: impl Into<String>) -> Error {
    Error::Json(msg.into())
}

pub fn rational_to_json(q: &Rational) -> Value {
    json!({"num": q.numer().to_string(), "den": q.denom().to_string()})
}

fn parse_bigint(v: &Value) -> Result<BigInt> {
    v.as_str()
        .ok_or_else(|| shape("expected a decimal string"))?
        .parse::<BigInt>()
        .map_err(|e| shape(e.to_string()))
}

fn build_rational(num: BigInt, den: BigInt) -> Result<Rational> {
    if den == BigInt::from(0) {
        return Err(shape("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

pub fn rational_from_json(v: &Value) -> Result<Rational> {
    let num = parse_bigint(v.get("num").ok_or_else(|| shape("missing num"))?)?;
    let den = parse_bigint(v.get("den").ok_or_else(|| shape("missing den"))?)?;
    build_rational(num, den)
}

pub fn poly_to_json(p: &Poly) -> Value {
    Value::Array(
        p.terms_desc()
            .map(|(e, c)| json!([e, c.numer().to_string(), c.denom().to_string()]))
            .collect(),
    )
}

pub fn poly_from_json(v: &Value) -> Result<Poly> {
    let terms = v.as_array().ok_or_else(|| shape("polynomial must be an array"))?;
    let mut coeffs: Vec<Rational> = Vec::new();
    for term in terms {
        let t = term.as_array().filter(|t| t.len() == 3).ok_or_else(|| shape("term must be [exp, num, den]"))?;
        let e = t[0].as_u64().ok_or_else(|| shape("exponent must be a non-negative integer"))? as usize;
        let c = build_rational(parse_bigint(&t[1])?, parse_bigint(&t[2])?)?;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, Rational::from_integer(0.into()));
        }
        coeffs[e] = coeffs[e].clone() + c;
    }
    Ok(Poly::from_coeffs(coeffs))
}

pub fn orbit_to_json(o: &RationalOrbit) -> Value {
    Value::Array(o.values().iter().map(rational_to_json).collect())
}

pub fn orbit_from_json(v: &Value) -> Result<RationalOrbit> {
    let items = v.as_array().ok_or_else(|| shape("orbit must be an array"))?;
    Ok(RationalOrbit::new(items.iter().map(rational_from_json).collect::<Result<_>>()?))
}

pub fn word_to_json(w: &BetaGammaWord) -> Value {
    json!(w.token_strings())
}

/// Parses token strings back into a word; indices must be consecutive.
pub fn word_from_json(v: &Value) -> Result<BetaGammaWord> {
    let items = v.as_array().ok_or_else(|| shape("word must be an array"))?;
    let mut tokens = Vec::with_capacity(items.len());
    let mut base = None;
    let mut next = 0usize;
    for item in items {
        let s = item.as_str().ok_or_else(|| shape("token must be a string"))?;
        let (token, start) = if let Some(i) = s.strip_prefix('b') {
            (Token::B, i.parse::<usize>().map_err(|_| shape(format!("bad token {s}")))?)
        } else if let Some(inner) = s.strip_prefix("g(").and_then(|r| r.strip_suffix(')')) {
            let (i, j) = inner.split_once(',').ok_or_else(|| shape(format!("bad token {s}")))?;
            let i: usize = i.parse().map_err(|_| shape(format!("bad token {s}")))?;
            let j: usize = j.parse().map_err(|_| shape(format!("bad token {s}")))?;
            if j != i + 1 {
                return Err(shape(format!("gamma indices must be adjacent in {s}")));
            }
            (Token::G, i)
        } else {
            return Err(shape(format!("bad token {s}")));
        };
        if base.is_none() {
            base = Some(start);
            next = start;
        }
        if start != next {
            return Err(shape(format!("token {s} does not continue the word")));
        }
        next += if token == Token::B { 1 } else { 2 };
        tokens.push(token);
    }
    Ok(BetaGammaWord { tokens, base: base.unwrap_or(0) })
}

pub fn pq_to_json(p: &PqPoly) -> Value {
    json!({
        "kind": match p.kind { PqKind::P => "P", PqKind::Q => "Q" },
        "order": p.order,
        "count": p.len(),
        "words": p.words.iter().map(word_to_json).collect::<Vec<_>>(),
    })
}

/// Inverse of [`pq_to_json`]. Empty words take the kind's base index.
pub fn pq_from_json(v: &Value) -> Result<PqPoly> {
    let kind = match v.get("kind").and_then(Value::as_str) {
        Some("P") => PqKind::P,
        Some("Q") => PqKind::Q,
        _ => return Err(shape("kind must be \"P\" or \"Q\"")),
    };
    let order = v.get("order").and_then(Value::as_u64).ok_or_else(|| shape("missing order"))? as usize;
    let base = if kind == PqKind::P { 0 } else { 1 };
    let words = v
        .get("words")
        .and_then(Value::as_array)
        .ok_or_else(|| shape("missing words"))?
        .iter()
        .map(|w| {
            word_from_json(w).map(|mut w| {
                if w.tokens.is_empty() {
                    w.base = base;
                }
                w
            })
        })
        .collect::<Result<_>>()?;
    Ok(PqPoly { kind, order, words })
}

pub fn params_to_json(p: ChgParams) -> Value {
    json!({"N": p.big_n, "n": p.n})
}

pub fn params_from_json(v: &Value) -> Result<ChgParams> {
    let get = |k: &str| v.get(k).and_then(Value::as_u64).ok_or_else(|| shape(format!("missing {k}")));
    Ok(ChgParams::new(get("N")? as usize, get("n")? as usize))
}

pub fn bezout_report_to_json(r: &BezoutReport<Rational>) -> Value {
    json!({
        "params": params_to_json(r.pair.params),
        "s": poly_to_json(&r.pair.s),
        "t": poly_to_json(&r.pair.t),
        "degree_s": r.degree_s(),
        "degree_t": r.degree_t(),
        "identity_holds": r.identity_holds,
        "c": rational_to_json(&r.c),
    })
}

pub fn bezout_report_from_json(v: &Value) -> Result<BezoutReport<Rational>> {
    let field = |k: &str| v.get(k).ok_or_else(|| shape(format!("missing {k}")));
    let params = params_from_json(field("params")?)?;
    Ok(BezoutReport {
        pair: BezoutPair { params, s: poly_from_json(field("s")?)?, t: poly_from_json(field("t")?)? },
        identity_holds: field("identity_holds")?.as_bool().ok_or_else(|| shape("identity_holds must be bool"))?,
        c: rational_from_json(field("c")?)?,
    })
}

fn channel_from_name(s: &str) -> Result<Channel> {
    Channel::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| shape(format!("unknown channel {s}")))
}

pub fn mismatch_to_json(m: &Mismatch<Rational>) -> Value {
    json!({
        "channel": m.channel.name(),
        "exponent": m.exponent,
        "lhs": rational_to_json(&m.lhs),
        "rhs": rational_to_json(&m.rhs),
    })
}

pub fn expansion_report_to_json(r: &ExpansionReport<Rational>) -> Value {
    json!({
        "params": params_to_json(r.params),
        "order": r.order,
        "equal": r.equal,
        "first_mismatch": r.first_mismatch.as_ref().map(mismatch_to_json),
        "scale": rational_to_json(&r.scale),
    })
}

pub fn expansion_report_from_json(v: &Value) -> Result<ExpansionReport<Rational>> {
    let field = |k: &str| v.get(k).ok_or_else(|| shape(format!("missing {k}")));
    let first_mismatch = match field("first_mismatch")? {
        Value::Null => None,
        m => Some(Mismatch {
            channel: channel_from_name(m.get("channel").and_then(Value::as_str).unwrap_or(""))?,
            exponent: m.get("exponent").and_then(Value::as_i64).ok_or_else(|| shape("missing exponent"))?,
            lhs: rational_from_json(m.get("lhs").ok_or_else(|| shape("missing lhs"))?)?,
            rhs: rational_from_json(m.get("rhs").ok_or_else(|| shape("missing rhs"))?)?,
        }),
    };
    Ok(ExpansionReport {
        params: params_from_json(field("params")?)?,
        order: field("order")?.as_u64().ok_or_else(|| shape("order must be an integer"))? as usize,
        equal: field("equal")?.as_bool().ok_or_else(|| shape("equal must be bool"))?,
        first_mismatch,
        scale: rational_from_json(field("scale")?)?,
    })
}

/// Every channel as `{exponent: value}` maps, poles keyed by negative exponent.
pub fn expansion_to_json(e: &LaurentLogExpansion<Rational>) -> Value {
    let mut out = Map::new();
    out.insert("order".into(), json!(e.order()));
    for channel in Channel::ALL {
        let rows = crate::series::channel_rows(e, channel);
        let arr: Vec<Value> = rows.into_iter().map(|(k, v)| json!([k, rational_to_json(&v)])).collect();
        out.insert(channel.name().into(), Value::Array(arr));
    }
    Value::Object(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bezout::bezout_report;
    use crate::chg::{p_poly, PolyMethod};
    use crate::pqpoly::{build_p, build_q};
    use crate::series::compare;
    use crate::Scalar;

    #[test]
    fn rational_shape() {
        let q = Rational::from_ratio(-10, 4);
        let v = rational_to_json(&q);
        assert_eq!(v, json!({"num": "-5", "den": "2"}));
        assert_eq!(rational_from_json(&v).unwrap(), q);
        assert!(rational_from_json(&json!({"num": "1", "den": "0"})).is_err());
    }

    #[test]
    fn poly_shape_and_round_trip() {
        let p = p_poly::<Rational>(ChgParams::new(2, 1), PolyMethod::Resummed);
        let v = poly_to_json(&p);
        assert_eq!(v, json!([[2, "1", "1"], [1, "-5", "1"], [0, "2", "1"]]));
        assert_eq!(poly_from_json(&v).unwrap(), p);
        assert_eq!(poly_to_json(&Poly::zero()), json!([]));
    }

    #[test]
    fn words_round_trip() {
        for n in 0..7 {
            for p in [build_p(n), build_q(n)] {
                assert_eq!(pq_from_json(&pq_to_json(&p)).unwrap(), p);
            }
        }
        assert!(word_from_json(&json!(["b0", "b2"])).is_err());
        assert!(word_from_json(&json!(["g(0,2)"])).is_err());
    }

    #[test]
    fn reports_round_trip() {
        let b = bezout_report::<Rational>(ChgParams::new(4, 2)).unwrap();
        assert_eq!(bezout_report_from_json(&bezout_report_to_json(&b)).unwrap(), b);
        let e = compare::<Rational>(ChgParams::new(2, 2), 6);
        assert_eq!(expansion_report_from_json(&expansion_report_to_json(&e)).unwrap(), e);
        let m = ExpansionReport {
            first_mismatch: Some(Mismatch {
                channel: Channel::Gamma,
                exponent: 3,
                lhs: Rational::from_ratio(1, 3),
                rhs: Rational::from_i64(0),
            }),
            equal: false,
            ..e
        };
        assert_eq!(expansion_report_from_json(&expansion_report_to_json(&m)).unwrap(), m);
    }
}
