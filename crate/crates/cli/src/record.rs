//! JSON output records and their exact decoders.

use lens_invariants::cyclotomic::CycloElement;
use lens_invariants::search::PairReport;
use lens_invariants::Rational;
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// One command's machine-readable result.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: Value,
    pub exact: Value,
    pub approx: Value,
    pub trace: Value,
}

/// Renders a rational as `"a/b"`, always with an explicit denominator.
pub fn rational(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn parse_rational(s: &str) -> Option<Rational> {
    let (n, d) = s.split_once('/')?;
    let d = d.parse().ok()?;
    if num_traits::Zero::is_zero(&d) {
        return None;
    }
    Some(Rational::new(n.parse().ok()?, d))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub exp: usize,
    pub coeff: String,
}

/// A cyclotomic number as sparse power-basis terms `coeff * z^exp`,
/// `z = e^{2 pi i / conductor}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycloJson {
    pub conductor: u64,
    pub terms: Vec<Term>,
}

impl CycloJson {
    pub fn new(x: &CycloElement) -> Self {
        CycloJson {
            conductor: x.conductor(),
            terms: x
                .terms()
                .map(|(exp, c)| Term {
                    exp,
                    coeff: rational(&c),
                })
                .collect(),
        }
    }

    pub fn to_element(&self) -> Option<CycloElement> {
        let len = self.terms.iter().map(|t| t.exp + 1).max().unwrap_or(0);
        let mut coeffs = vec![Rational::from_integer(0.into()); len];
        for t in &self.terms {
            coeffs[t.exp] = parse_rational(&t.coeff)?;
        }
        CycloElement::from_polynomial(self.conductor, &coeffs).ok()
    }
}

/// Rounds to `digits` significant decimals so the JSON stays stable.
pub fn float(x: f64, digits: usize) -> Value {
    let rounded: f64 = format!("{:.*e}", digits.saturating_sub(1), x)
        .parse()
        .unwrap_or(x);
    serde_json::Number::from_f64(rounded).map_or(Value::Null, Value::Number)
}

pub fn complex(re: f64, im: f64, digits: usize) -> Value {
    serde_json::json!({ "re": float(re, digits), "im": float(im, digits) })
}

pub fn pair_report(report: &PairReport) -> Value {
    serde_json::json!({
        "p": report.p,
        "q1": report.q1,
        "q2": report.q2,
        "dedekind": rational(&report.dedekind_value),
        "distinguishing_r": report.distinguishing_r,
        "agreeing_r": report.agreeing_r,
        "all_zero_r": report.all_zero_r,
    })
}
