//! The `lensinv` command-line front end.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use lens_invariants::lens::{self, tau_equal, tau_series, xi, xi_ratio, LensSpace, PrimedInverses, XiTrace};
use lens_invariants::numtheory::{self, dedekind, jacobi, neg_cont_frac, DedekindMethod};
use lens_invariants::{search, verify, Error};
use num_bigint::BigInt;
use serde_json::{json, Value};

pub mod record;

use record::{complex, float, pair_report, rational, CycloJson, OutputRecord};

#[derive(Debug, Parser)]
#[command(name = "lensinv", version, about = "Exact quantum invariants of lens spaces")]
pub struct Cli {
    /// Emit one JSON record instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Significant digits for floating-point renderings.
    #[arg(long, global = true, default_value_t = 12, value_parser = clap::value_parser!(u16).range(1..=17))]
    pub precision: u16,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Direct,
    Hickerson,
    Fast,
    /// Run every method and fail with exit code 2 on disagreement.
    All,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Dedekind sum s(q, p).
    #[command(allow_negative_numbers = true)]
    Dedekind {
        #[arg(value_parser = int)]
        p: i64,
        #[arg(value_parser = int)]
        q: i64,
        #[arg(long, value_enum, default_value_t = Method::Fast)]
        method: Method,
    },
    /// Negative continued fraction of p/q.
    #[command(allow_negative_numbers = true)]
    Contfrac {
        #[arg(value_parser = int)]
        p: i64,
        #[arg(value_parser = int)]
        q: i64,
    },
    /// Jacobi symbol (a/n).
    #[command(allow_negative_numbers = true)]
    Jacobi {
        #[arg(value_parser = int)]
        a: i64,
        #[arg(value_parser = int)]
        n: i64,
    },
    /// SO(3) invariant xi_r(L(p,q)) with its trace.
    #[command(allow_negative_numbers = true)]
    Xi {
        #[arg(value_parser = int)]
        p: i64,
        #[arg(value_parser = int)]
        q: i64,
        #[arg(value_parser = int)]
        r: i64,
    },
    /// Exact quotient xi_r(L(p,q1)) / xi_r(L(p,q2)).
    #[command(allow_negative_numbers = true)]
    XiRatio {
        #[arg(value_parser = int)]
        p: i64,
        #[arg(value_parser = int)]
        q1: i64,
        #[arg(value_parser = int)]
        q2: i64,
        #[arg(value_parser = int)]
        r: i64,
    },
    /// Coefficients lambda_0..lambda_N of the tau series.
    #[command(allow_negative_numbers = true)]
    Tau {
        #[arg(value_parser = int)]
        p: i64,
        #[arg(value_parser = int)]
        q: i64,
        #[arg(long, default_value = "8", value_parser = int)]
        order: i64,
    },
    /// Classify odd levels r <= rmax for the pair L(p,q1), L(p,q2).
    #[command(allow_negative_numbers = true)]
    Compare {
        #[arg(value_parser = int)]
        p: i64,
        #[arg(value_parser = int)]
        q1: i64,
        #[arg(value_parser = int)]
        q2: i64,
        #[arg(long, default_value = "45", value_parser = int)]
        rmax: i64,
    },
    /// Find tau-indistinguishable pairs with p <= pmax and classify them.
    #[command(allow_negative_numbers = true)]
    Search {
        #[arg(long, default_value = "25", value_parser = int)]
        pmax: i64,
        #[arg(long, default_value = "45", value_parser = int)]
        rmax: i64,
    },
    /// Run the acceptance criteria and print PASS/FAIL per claim.
    VerifyTheorem,
}

/// Parses an integer of any size, then rejects what does not fit in 64 bits.
fn int(s: &str) -> Result<i64, String> {
    let big: BigInt = s
        .trim()
        .parse()
        .map_err(|_| format!("`{s}` is not an integer"))?;
    i64::try_from(&big).map_err(|_| format!("{big} is outside the supported range [-2^63, 2^63)"))
}

/// A violated precondition, reported with exit code 1.
#[derive(Debug)]
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

struct Output {
    record: OutputRecord,
    text: String,
    /// Printed after the output; turns exit code 0 into 2.
    mismatch: Option<String>,
}

fn lens_space(p: i64, q: i64) -> Result<LensSpace, Failure> {
    Ok(LensSpace::new(p, q)?)
}

fn record(command: &str, inputs: Value, exact: Value, approx: Value, trace: Value) -> OutputRecord {
    OutputRecord {
        command: command.into(),
        inputs,
        exact,
        approx,
        trace,
    }
}

fn fmt_complex(re: f64, im: f64, digits: usize) -> String {
    let sign = if im < 0.0 { '-' } else { '+' };
    format!("{re:.digits$} {sign} {:.digits$}i", im.abs())
}

fn xi_trace_json(t: &XiTrace) -> Value {
    let primed = match t.primed {
        Some(PrimedInverses::Inverses { r_prime, p_prime }) => {
            json!({ "r_prime": r_prime, "p_prime": p_prime })
        }
        Some(PrimedInverses::Bezout(b)) => json!({
            "p_over_c_prime": b.a_prime,
            "r_over_c_prime": b.b_prime,
        }),
        None => Value::Null,
    };
    json!({
        "case_tag": t.case.tag(),
        "c": t.c,
        "eta": t.eta,
        "q_star": t.q_star,
        "p_star": t.p_star,
        "primed": primed,
        "dedekind": rational(&t.dedekind),
        "conductor": t.conductor(),
    })
}

fn run_dedekind(p: i64, q: i64, method: Method, digits: usize) -> Result<Output, Failure> {
    let one = |m| dedekind(q, p, m).map(|s| s.value);
    let (value, mut trace, mismatch) = if method == Method::All {
        let values = [
            ("direct", one(DedekindMethod::Direct)?),
            ("hickerson", one(DedekindMethod::Hickerson)?),
            ("fast", one(DedekindMethod::Fast)?),
        ];
        let agree = values.iter().all(|(_, v)| *v == values[0].1);
        let methods: serde_json::Map<_, _> = values
            .iter()
            .map(|(k, v)| (k.to_string(), Value::String(rational(v))))
            .collect();
        let mismatch = (!agree).then(|| {
            format!("Dedekind methods disagree for s({q},{p}): {}", Value::Object(methods.clone()))
        });
        (values[0].1.clone(), json!({ "methods": methods }), mismatch)
    } else {
        let m = match method {
            Method::Direct => DedekindMethod::Direct,
            Method::Hickerson => DedekindMethod::Hickerson,
            _ => DedekindMethod::Fast,
        };
        (one(m)?, json!({}), None)
    };
    let twelve_ps = value.clone() * lens_invariants::Rational::from_integer((12 * p as i128).into());
    trace["twelve_p_s"] = json!(twelve_ps.to_integer().to_string());
    let approx = num_traits::ToPrimitive::to_f64(&value).unwrap_or(f64::NAN);
    Ok(Output {
        text: value.to_string(),
        record: record(
            "dedekind",
            json!({ "p": p, "q": q, "method": format!("{method:?}").to_lowercase() }),
            json!(rational(&value)),
            float(approx, digits),
            trace,
        ),
        mismatch,
    })
}

fn run_xi(p: i64, q: i64, r: i64, digits: usize) -> Result<Output, Failure> {
    let t = xi(&lens_space(p, q)?, r)?;
    let (re, im) = (t.value_approx.re, t.value_approx.im);
    let trace = xi_trace_json(&t);
    let mut text = format!("{}\n~ {}\n", t.value, fmt_complex(re, im, digits));
    for (k, v) in trace.as_object().into_iter().flatten() {
        match v {
            Value::String(s) => writeln!(text, "{k}: {s}"),
            v => writeln!(text, "{k}: {v}"),
        }
        .expect("writing to a String");
    }
    Ok(Output {
        text: text.trim_end().to_string(),
        record: record(
            "xi",
            json!({ "p": p, "q": q, "r": r }),
            json!(CycloJson::new(&t.value)),
            complex(re, im, digits),
            trace,
        ),
        mismatch: None,
    })
}

fn run_xi_ratio(p: i64, q1: i64, q2: i64, r: i64, digits: usize) -> Result<Output, Failure> {
    let ratio = xi_ratio(&lens_space(p, q1)?, &lens_space(p, q2)?, r)?;
    let z = ratio.to_complex();
    Ok(Output {
        text: format!("{ratio}\n~ {}\nequal: {}", fmt_complex(z.re, z.im, digits), ratio.is_one()),
        record: record(
            "xi-ratio",
            json!({ "p": p, "q1": q1, "q2": q2, "r": r }),
            json!(CycloJson::new(&ratio)),
            complex(z.re, z.im, digits),
            json!({ "equal": ratio.is_one(), "conductor": ratio.conductor() }),
        ),
        mismatch: None,
    })
}

fn run_tau(p: i64, q: i64, order: i64, digits: usize) -> Result<Output, Failure> {
    let order = usize::try_from(order)
        .map_err(|_| Failure(format!("order must be non-negative, got {order}")))?;
    let series = tau_series(&lens_space(p, q)?, order);
    let floats: Vec<f64> = series
        .lambda
        .iter()
        .map(|l| num_traits::ToPrimitive::to_f64(l).unwrap_or(f64::NAN))
        .collect();
    let text = series
        .lambda
        .iter()
        .enumerate()
        .map(|(n, l)| format!("lambda_{n} = {l}"))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Output {
        text,
        record: record(
            "tau",
            json!({ "p": p, "q": q, "order": order }),
            json!(series.lambda.iter().map(rational).collect::<Vec<_>>()),
            json!(floats.iter().map(|&x| float(x, digits)).collect::<Vec<_>>()),
            Value::Null,
        ),
        mismatch: None,
    })
}

fn report_text(r: &search::PairReport) -> String {
    format!(
        "L({p},{q1}) vs L({p},{q2}): s = {s}\n  distinguishing r: {d:?}\n  agreeing r: {a:?}\n  both zero r: {z:?}",
        p = r.p,
        q1 = r.q1,
        q2 = r.q2,
        s = r.dedekind_value,
        d = r.distinguishing_r,
        a = r.agreeing_r,
        z = r.all_zero_r,
    )
}

fn run_compare(p: i64, q1: i64, q2: i64, rmax: i64) -> Result<Output, Failure> {
    let (a, b) = (lens_space(p, q1)?, lens_space(p, q2)?);
    let report = search::classify_pair(p, q1, q2, rmax)?;
    let tau = tau_equal(&a, &b);
    let homeo = lens::oriented_homeomorphic(&a, &b);
    Ok(Output {
        text: format!("{}\n  tau equal: {tau}\n  homeomorphic: {homeo}", report_text(&report)),
        record: record(
            "compare",
            json!({ "p": p, "q1": q1, "q2": q2, "rmax": rmax }),
            pair_report(&report),
            Value::Null,
            json!({ "tau_equal": tau, "oriented_homeomorphic": homeo }),
        ),
        mismatch: None,
    })
}

fn run_search(pmax: i64, rmax: i64) -> Result<Output, Failure> {
    let reports = search::search(pmax, rmax)?;
    let text = if reports.is_empty() {
        "no pairs".to_string()
    } else {
        reports.iter().map(report_text).collect::<Vec<_>>().join("\n")
    };
    Ok(Output {
        text,
        record: record(
            "search",
            json!({ "pmax": pmax, "rmax": rmax }),
            json!(reports.iter().map(pair_report).collect::<Vec<_>>()),
            Value::Null,
            json!({ "pairs": reports.len() }),
        ),
        mismatch: None,
    })
}

fn run_verify() -> Output {
    let criteria = verify::all_criteria();
    let failed: Vec<u32> = criteria.iter().filter(|c| !c.passed()).map(|c| c.number).collect();
    let mut text = criteria.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("\n");
    write!(text, "\n{} of {} criteria pass", criteria.len() - failed.len(), criteria.len())
        .expect("writing to a String");
    let exact: Vec<Value> = criteria
        .iter()
        .map(|c| {
            json!({
                "number": c.number,
                "title": c.title,
                "passed": c.passed(),
                "claims": c.claims.iter().map(|k| json!({
                    "statement": k.statement,
                    "passed": k.passed,
                    "detail": k.detail,
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    let timings: Vec<Value> = criteria
        .iter()
        .map(|c| json!({ "number": c.number, "seconds": c.elapsed.as_secs_f64() }))
        .collect();
    Output {
        text,
        record: record("verify-theorem", json!({}), json!(exact), Value::Null, json!(timings)),
        mismatch: (!failed.is_empty()).then(|| format!("failing criteria: {failed:?}")),
    }
}

fn dispatch(cli: &Cli) -> Result<Output, Failure> {
    let digits = cli.precision as usize;
    match cli.command {
        Command::Dedekind { p, q, method } => run_dedekind(p, q, method, digits),
        Command::Contfrac { p, q } => {
            let cf = neg_cont_frac(p, q)?;
            Ok(Output {
                text: format!("{cf}\nn = {}", cf.len()),
                record: record(
                    "contfrac",
                    json!({ "p": p, "q": q }),
                    json!({ "terms": cf.terms, "n": cf.len() }),
                    Value::Null,
                    json!({ "term_sum": cf.term_sum() }),
                ),
                mismatch: None,
            })
        }
        Command::Jacobi { a, n } => {
            let j = jacobi(a, n)?;
            Ok(Output {
                text: j.to_string(),
                record: record(
                    "jacobi",
                    json!({ "a": a, "n": n }),
                    json!(j),
                    Value::Null,
                    json!({ "gcd": numtheory::gcd(a, n) }),
                ),
                mismatch: None,
            })
        }
        Command::Xi { p, q, r } => run_xi(p, q, r, digits),
        Command::XiRatio { p, q1, q2, r } => run_xi_ratio(p, q1, q2, r, digits),
        Command::Tau { p, q, order } => run_tau(p, q, order, digits),
        Command::Compare { p, q1, q2, rmax } => run_compare(p, q1, q2, rmax),
        Command::Search { pmax, rmax } => run_search(pmax, rmax),
        Command::VerifyTheorem => Ok(run_verify()),
    }
}

/// Runs the CLI and returns the process exit code: 0 on success, 1 on a
/// usage or domain error, 2 when a cross-check fails.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match dispatch(&cli) {
        Ok(out) => {
            if cli.json {
                match serde_json::to_string_pretty(&out.record) {
                    Ok(s) => println!("{s}"),
                    Err(e) => {
                        eprintln!("error: cannot serialize output: {e}");
                        return 1;
                    }
                }
            } else {
                println!("{}", out.text);
            }
            match out.mismatch {
                Some(msg) => {
                    eprintln!("error: {msg}");
                    2
                }
                None => 0,
            }
        }
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}
