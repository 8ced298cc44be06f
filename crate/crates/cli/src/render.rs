//! Plain-text layouts for the subcommands.

use secondsol::bezout::BezoutReport;
use secondsol::chg::ChgParams;
use secondsol::laurent::{Channel, LaurentLogExpansion};
use secondsol::series::ExpansionReport;
use secondsol::{Rational, RationalOrbit};

fn verdict(ok: bool) -> &'static str {
    if ok {
        "holds"
    } else {
        "FAILS"
    }
}

/// Left-aligned columns separated by two spaces.
fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if c + 1 < row.len() {
                line.push_str(&" ".repeat(widths[c] - cell.chars().count()));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn dalembert(label: &str, first: &RationalOrbit, second: &RationalOrbit, solves: bool, y_form: bool) -> String {
    let mut rows = vec![vec!["n".to_string(), "f_n".to_string(), "y_n".to_string()]];
    for (n, (f, y)) in first.values().iter().zip(second.values()).enumerate() {
        rows.push(vec![n.to_string(), f.to_string(), y.to_string()]);
    }
    format!(
        "spec: {label}\n{}recurrence (n >= 1): {}\nY-form: {}\n",
        table(&rows),
        verdict(solves),
        verdict(y_form)
    )
}

pub fn chg_checks(results: &[(ChgParams, Vec<(String, bool)>)]) -> String {
    let mut out = String::new();
    for (p, checks) in results {
        for (name, passed) in checks {
            let tag = if *passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{tag} N={} n={}: {name}\n", p.big_n, p.n));
        }
    }
    out
}

pub fn bezout(r: &BezoutReport<Rational>, pair_ok: bool, closed_form: &str, compact: bool) -> String {
    let p = r.pair.params;
    if compact {
        return format!(
            "N={} n={}: deg s = {}, deg t = {}, sΦ + tΦ' = 1 {}, cancellation {}, closed form {}\n",
            p.big_n,
            p.n,
            r.degree_s(),
            r.degree_t(),
            verdict(pair_ok),
            verdict(r.identity_holds),
            closed_form
        );
    }
    format!(
        "N={} n={}\ns = {}\nt = {}\ndeg s = {}\ndeg t = {}\nsΦ + tΦ' = 1: {}\nc = {}\nx t' - (n+1-x) t + x s = c Φ: {}\nclosed form: {}\n",
        p.big_n,
        p.n,
        r.pair.s,
        r.pair.t,
        r.degree_s(),
        r.degree_t(),
        verdict(pair_ok),
        r.c,
        verdict(r.identity_holds),
        closed_form
    )
}

/// `r + gγ` with the sign folded in and zero parts dropped.
fn euler(r: &Rational, g: &Rational) -> String {
    let zero = Rational::from_integer(0.into());
    let gamma = |g: &Rational| match g.to_string().as_str() {
        "1" => "γ".to_string(),
        "-1" => "-γ".to_string(),
        s => format!("{s}γ"),
    };
    match (*r == zero, *g == zero) {
        (_, true) => r.to_string(),
        (true, false) => gamma(g),
        (false, false) if *g < zero => format!("{r} - {}", gamma(&-g.clone())),
        (false, false) => format!("{r} + {}", gamma(g)),
    }
}

fn exponent_label(channel: Channel, k: i64) -> String {
    match channel {
        Channel::Log => format!("x^{k} ln x"),
        _ => format!("x^{k}"),
    }
}

fn mismatch_text(r: &ExpansionReport<Rational>) -> String {
    match &r.first_mismatch {
        None => "none".into(),
        Some(m) => format!("{} at x^{}: {} vs {}", m.channel.name(), m.exponent, m.lhs, m.rhs),
    }
}

pub fn series_line(r: &ExpansionReport<Rational>) -> String {
    format!(
        "N={} n={} M={}: {} (first mismatch: {})\n",
        r.params.big_n,
        r.params.n,
        r.order,
        if r.equal { "equal" } else { "DIFFERENT" },
        mismatch_text(r)
    )
}

/// Pole, regular (rational and γ parts side by side) and log tables.
pub fn series(
    r: &ExpansionReport<Rational>,
    pm: &LaurentLogExpansion<Rational>,
    dl: &LaurentLogExpansion<Rational>,
) -> String {
    let mut out = format!("N={} n={} M={} scale={}\n", r.params.big_n, r.params.n, r.order, r.scale);
    let header = |title: &str| vec![title.to_string(), "Ψ_PM".to_string(), "Ψ_DL".to_string()];

    out.push_str("\npole\n");
    let mut rows = vec![header("term")];
    for k in (1..=pm.pole_len().max(dl.pole_len())).rev() {
        rows.push(vec![exponent_label(Channel::Pole, -(k as i64)), pm.pole(k).to_string(), dl.pole(k).to_string()]);
    }
    out.push_str(&table(&rows));

    out.push_str("\nregular (rational + γ_E)\n");
    let mut rows = vec![header("term")];
    for k in 0..=r.order {
        let (a, b) = (pm.regular(k), dl.regular(k));
        rows.push(vec![
            exponent_label(Channel::Rational, k as i64),
            euler(&a.rational, &a.gamma),
            euler(&b.rational, &b.gamma),
        ]);
    }
    out.push_str(&table(&rows));

    out.push_str("\nlog\n");
    let mut rows = vec![header("term")];
    for k in 0..=r.order {
        rows.push(vec![exponent_label(Channel::Log, k as i64), pm.log(k).to_string(), dl.log(k).to_string()]);
    }
    out.push_str(&table(&rows));

    out.push_str(&format!("\nequal: {}\nfirst mismatch: {}\n", r.equal, mismatch_text(r)));
    out
}
