use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use secondsol::bezout::{bezout_report, compare_footnote, FootnoteComparison};
use secondsol::chg::{
    c_coeff, casoratian_check, casoratian_closed, p_at_zero, p_poly, psibar, verify_b_recurrence, verify_n_recurrence,
    ChgParams, CMethod, Kind, PolyMethod,
};
use secondsol::golden;
use secondsol::json::{
    bezout_report_to_json, expansion_report_to_json, expansion_to_json, orbit_to_json, params_to_json, poly_to_json,
    pq_to_json,
};
use secondsol::pqpoly::{build_p, build_q};
use secondsol::recurrence::{dalembert_second, iterate, verify_y_form, BuiltinExample, RecurrenceSpec};
use secondsol::selftest::{run_all, DEFAULT_SEED};
use secondsol::series::{compare, psi_dl, psi_pm};
use secondsol::{Error, Poly, Rational};

mod render;

#[derive(Parser, Debug)]
#[command(name = "secondsol", version, about = "Exact second solutions of second-order difference equations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Second solution by reduction of order for a built-in or user recurrence.
    Dalembert(DalembertArgs),
    /// The β/γ word polynomials P_n and Q_n.
    Pq(PqArgs),
    /// The second-kind polynomial P(N, n, x), or all reference tables.
    ChgTable(ChgArgs),
    /// Recurrence, Casoratian and coefficient checks for P(N, n, x).
    ChgVerify(ChgArgs),
    /// Minimal Bézout pair for (Φ, Φ') and the cancellation identity.
    Bezout(ChgArgs),
    /// Coefficientwise comparison of the two series for the log solution.
    SeriesCompare(SeriesArgs),
    /// Run the full verification suite.
    Selftest(SelftestArgs),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args, Debug)]
struct DalembertArgs {
    /// double-root, factorial, harmonic or ex4.
    #[arg(long, conflicts_with = "coeffs", required_unless_present = "coeffs")]
    example: Option<String>,
    /// Polynomial coefficients in n, ascending: "a=1;b=-2,0;c=1".
    #[arg(long)]
    coeffs: Option<String>,
    /// Last index computed.
    #[arg(long, default_value_t = 10)]
    upto: usize,
    /// Root for the double-root example.
    #[arg(long, default_value = "1")]
    r: String,
    /// Initial values of the first solution when using --coeffs.
    #[arg(long, default_value = "1,1")]
    seeds: String,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args, Debug)]
struct PqArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args, Debug)]
struct ChgArgs {
    #[arg(long = "N", required_unless_present = "all")]
    big_n: Option<usize>,
    #[arg(long, required_unless_present = "all")]
    n: Option<usize>,
    /// Sweep the standard parameter grid instead of a single point.
    #[arg(long, conflicts_with_all = ["big_n", "n"])]
    all: bool,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    #[arg(long = "N", required_unless_present = "all")]
    big_n: Option<usize>,
    #[arg(long, required_unless_present = "all")]
    n: Option<usize>,
    #[arg(long, conflicts_with_all = ["big_n", "n"])]
    all: bool,
    /// Truncation order M.
    #[arg(long, default_value_t = 20)]
    order: usize,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args, Debug)]
struct SelftestArgs {
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

/// Outcome of a subcommand: output text plus whether every check passed.
struct Report {
    text: String,
    ok: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Self { text, ok: true }
    }
}

/// A bad flag value (exit 2) or a failed computation (exit 1).
enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParams(m) => Failure::Usage(m),
            other => Failure::Compute(other.to_string()),
        }
    }
}

fn json_text(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn parse_rational(s: &str) -> Result<Rational, Failure> {
    s.trim().parse::<Rational>().map_err(|_| Failure::Usage(format!("not a rational number: {s:?}")))
}

fn parse_list(s: &str) -> Result<Vec<Rational>, Failure> {
    s.split(',').map(parse_rational).collect()
}

/// `a=...;b=...;c=...`, each a comma-separated list of coefficients of `n^0, n^1, ...`.
fn parse_coeffs(s: &str) -> Result<RecurrenceSpec<Rational>, Failure> {
    let mut slots: [Option<Poly>; 3] = [None, None, None];
    for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, values) = part
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("expected key=values in {part:?}")))?;
        let idx = match key.trim() {
            "a" => 0,
            "b" => 1,
            "c" => 2,
            other => return Err(Failure::Usage(format!("unknown coefficient {other:?}"))),
        };
        slots[idx] = Some(Poly::from_coeffs(parse_list(values)?));
    }
    let [a, b, c] = slots;
    match (a, b, c) {
        (Some(a), Some(b), Some(c)) => Ok(RecurrenceSpec::from_polys(a, b, c)),
        _ => Err(Failure::Usage("--coeffs needs a, b and c".into())),
    }
}

fn point(big_n: Option<usize>, n: Option<usize>) -> ChgParams {
    ChgParams::new(big_n.expect("required by clap"), n.expect("required by clap"))
}

fn run_dalembert(args: &DalembertArgs) -> Result<Report, Failure> {
    let (label, spec, first) = if let Some(name) = &args.example {
        let ex = BuiltinExample::from_name(name).ok_or_else(|| {
            let names: Vec<_> = BuiltinExample::ALL.iter().map(|e| e.name()).collect();
            Failure::Usage(format!("unknown example {name:?}; expected one of {}", names.join(", ")))
        })?;
        let r = parse_rational(&args.r)?;
        (ex.name().to_string(), ex.spec(&r), ex.first_solution(&r, args.upto))
    } else {
        let spec = parse_coeffs(args.coeffs.as_deref().expect("required by clap"))?;
        let seeds = parse_list(&args.seeds)?;
        let [y0, y1]: [Rational; 2] =
            seeds.try_into().map_err(|_| Failure::Usage("--seeds takes exactly two values".into()))?;
        let first = iterate(&spec, y0, y1, args.upto)?;
        ("coeffs".to_string(), spec, first)
    };
    let second = dalembert_second(&spec, &first, args.upto)?;
    let solves = spec.is_solution_from(&second, 1);
    let y_form = verify_y_form(&spec, &second);
    let ok = solves && y_form;
    let text = match args.format {
        Format::Json => json_text(&json!({
            "spec": label,
            "upto": args.upto,
            "first": orbit_to_json(&first),
            "second": orbit_to_json(&second),
            "solves_recurrence": solves,
            "y_form_holds": y_form,
        })),
        Format::Text => render::dalembert(&label, &first, &second, solves, y_form),
    };
    Ok(Report { text, ok })
}

fn run_pq(args: &PqArgs) -> Result<Report, Failure> {
    let p = build_p(args.n);
    let q = build_q(args.n);
    Ok(Report::ok(match args.format {
        Format::Json => json_text(&json!({"P": pq_to_json(&p), "Q": pq_to_json(&q)})),
        Format::Text => format!(
            "P_{n} ({}) = {p}\nQ_{n} ({}) = {q}\n",
            p.len(),
            q.len(),
            n = args.n
        ),
    }))
}

fn run_chg_table(args: &ChgArgs) -> Result<Report, Failure> {
    let method = PolyMethod::default();
    if args.all {
        return Ok(Report::ok(match args.format {
            Format::Text => golden::render_all(method),
            Format::Json => {
                let mut rows = Vec::new();
                for big_n in 0..=golden::MAX_BIG_N {
                    for n in 0..=golden::MAX_N {
                        let p = ChgParams::new(big_n, n);
                        rows.push(json!({"params": params_to_json(p), "P": poly_to_json(&p_poly(p, method))}));
                    }
                }
                json_text(&Value::Array(rows))
            }
        }));
    }
    let p = point(args.big_n, args.n);
    let poly = p_poly::<Rational>(p, method);
    Ok(Report::ok(match args.format {
        Format::Text => format!("{poly}\n"),
        Format::Json => json_text(&json!({
            "params": params_to_json(p),
            "P": poly_to_json(&poly),
            "psibar": poly_to_json(&psibar(p)),
        })),
    }))
}

/// Every single-point identity for `P(N, n, x)`.
fn chg_checks(p: ChgParams) -> Vec<(String, bool)> {
    let mut out = Vec::new();
    let resummed = p_poly::<Rational>(p, PolyMethod::Resummed);
    out.push(("direct = resummed".to_string(), resummed == p_poly(p, PolyMethod::Direct)));
    let c_ok = (0..p.big_n).all(|m| {
        let h = c_coeff::<Rational>(p, m, CMethod::Harmonic).ok();
        h.is_some() && h == c_coeff(p, m, CMethod::DoubleSum).ok() && h == Some(resummed.coeff(p.n + m))
    });
    out.push(("c double sum = harmonic = coefficient".to_string(), c_ok));
    if p.big_n >= 1 {
        out.push(("N-recurrence, first kind".into(), verify_n_recurrence::<Rational>(p, Kind::First)));
        out.push(("N-recurrence, second kind".into(), verify_n_recurrence::<Rational>(p, Kind::Second)));
    }
    if p.n >= 1 {
        out.push(("n-recurrence, first kind".into(), verify_b_recurrence::<Rational>(p, Kind::First)));
        out.push(("n-recurrence, second kind".into(), verify_b_recurrence::<Rational>(p, Kind::Second)));
        out.push(("P(N,n,0) = N!(n-1)!".into(), p_at_zero::<Rational>(p).ok() == Some(resummed.coeff(0))));
    }
    out.push((format!("Casoratian C(N+1) = {}", casoratian_closed::<Rational>(p)), casoratian_check::<Rational>(p)));
    out
}

fn run_chg_verify(args: &ChgArgs) -> Result<Report, Failure> {
    let points: Vec<ChgParams> = if args.all {
        (0..=8).flat_map(|big_n| (0..=8).map(move |n| ChgParams::new(big_n, n))).collect()
    } else {
        vec![point(args.big_n, args.n)]
    };
    let results: Vec<(ChgParams, Vec<(String, bool)>)> = points.into_iter().map(|p| (p, chg_checks(p))).collect();
    let ok = results.iter().all(|(_, checks)| checks.iter().all(|c| c.1));
    let text = match args.format {
        Format::Json => json_text(&Value::Array(
            results
                .iter()
                .map(|(p, checks)| {
                    json!({
                        "params": params_to_json(*p),
                        "checks": checks.iter().map(|(name, passed)| json!({"name": name, "passed": passed})).collect::<Vec<_>>(),
                    })
                })
                .collect(),
        )),
        Format::Text => render::chg_checks(&results),
    };
    Ok(Report { text, ok })
}

fn footnote_label(p: ChgParams) -> Result<String, Failure> {
    if p.big_n < 2 {
        return Ok("not applicable (N < 2)".into());
    }
    Ok(match compare_footnote::<Rational>(p)? {
        FootnoteComparison::Equal => "equal".into(),
        FootnoteComparison::Differs { closed_form, .. } => {
            format!("differs: s = {}, t = {}", closed_form.s, closed_form.t)
        }
        FootnoteComparison::Undefined(why) => format!("undefined: {why}"),
    })
}

fn run_bezout(args: &ChgArgs) -> Result<Report, Failure> {
    let points: Vec<ChgParams> = if args.all {
        (2..=10).flat_map(|big_n| (0..=10).map(move |n| ChgParams::new(big_n, n))).collect()
    } else {
        vec![point(args.big_n, args.n)]
    };
    let mut ok = true;
    let mut json_rows = Vec::new();
    let mut text = String::new();
    for p in points {
        let report = bezout_report::<Rational>(p)?;
        let footnote = footnote_label(p)?;
        let pair_ok = report.pair.satisfies_identity();
        ok &= pair_ok && report.identity_holds && (p.big_n < 2 || footnote == "equal");
        match args.format {
            Format::Json => {
                let mut v = bezout_report_to_json(&report);
                v["bezout_identity_holds"] = json!(pair_ok);
                v["closed_form"] = json!(footnote);
                json_rows.push(v);
            }
            Format::Text => text.push_str(&render::bezout(&report, pair_ok, &footnote, args.all)),
        }
    }
    if args.format == Format::Json {
        text = json_text(&if args.all { Value::Array(json_rows) } else { json_rows.remove(0) });
    }
    Ok(Report { text, ok })
}

fn run_series(args: &SeriesArgs) -> Result<Report, Failure> {
    if args.all {
        let reports: Vec<_> = (0..=5)
            .flat_map(|big_n| (0..=5).map(move |n| ChgParams::new(big_n, n)))
            .map(|p| compare::<Rational>(p, args.order))
            .collect();
        let ok = reports.iter().all(|r| r.equal);
        let text = match args.format {
            Format::Json => json_text(&Value::Array(reports.iter().map(expansion_report_to_json).collect())),
            Format::Text => reports.iter().map(render::series_line).collect(),
        };
        return Ok(Report { text, ok });
    }
    let p = point(args.big_n, args.n);
    let report = compare::<Rational>(p, args.order);
    let (pm, dl) = (psi_pm::<Rational>(p, args.order), psi_dl::<Rational>(p, args.order));
    let text = match args.format {
        Format::Json => {
            let mut v = expansion_report_to_json(&report);
            v["psi_pm"] = expansion_to_json(&pm);
            v["psi_dl"] = expansion_to_json(&dl);
            json_text(&v)
        }
        Format::Text => render::series(&report, &pm, &dl),
    };
    Ok(Report { text, ok: report.equal })
}

fn run_selftest(args: &SelftestArgs) -> Result<Report, Failure> {
    let results = run_all(args.seed);
    let ok = results.iter().all(|r| r.passed);
    let text = match args.format {
        Format::Json => json_text(&json!({
            "seed": args.seed,
            "passed": ok,
            "checks": results
                .iter()
                .map(|r| json!({"name": r.name, "passed": r.passed, "detail": r.detail}))
                .collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut s: String = results.iter().map(|r| format!("{r}\n")).collect();
            let passed = results.iter().filter(|r| r.passed).count();
            s.push_str(&format!("{passed}/{} checks passed\n", results.len()));
            s
        }
    };
    Ok(Report { text, ok })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    let outcome = match &cli.command {
        Command::Dalembert(a) => run_dalembert(a),
        Command::Pq(a) => run_pq(a),
        Command::ChgTable(a) => run_chg_table(a),
        Command::ChgVerify(a) => run_chg_verify(a),
        Command::Bezout(a) => run_bezout(a),
        Command::SeriesCompare(a) => run_series(a),
        Command::Selftest(a) => run_selftest(a),
    };
    match outcome {
        Ok(report) => {
            print!("{}", report.text);
            if !report.text.ends_with('\n') {
                println!();
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
