//! Searches for lens spaces with equal `τ` but different `ξ_r`.
//!
//! Two lens spaces share `τ` exactly when they have the same order `p` and
//! the same Dedekind sum, so candidates are found by bucketing `q` by the
//! integer `12 p s(q, p)` within each `p`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::lens::{oriented_homeomorphic, tau_equal, xi, LensSpace};
use crate::numtheory::{dedekind, gcd, DedekindMethod};
use crate::{Error, Rational, Result};

/// `L(p, q1)` and `L(p, q2)`, `0 < q1 < q2 < p`, with equal `τ` that are not
/// orientation-preservingly homeomorphic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwinPair {
    pub p: i64,
    pub q1: i64,
    pub q2: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairReport {
    pub p: i64,
    pub q1: i64,
    pub q2: i64,
    /// The common value `s(q1, p) = s(q2, p)`.
    pub dedekind_value: Rational,
    /// Odd levels where the two `ξ_r` differ.
    pub distinguishing_r: Vec<i64>,
    /// Odd levels where they agree, including `all_zero_r`.
    pub agreeing_r: Vec<i64>,
    /// Odd levels where both vanish.
    pub all_zero_r: Vec<i64>,
}

/// All twin pairs of a single order `p`, sorted.
pub fn twins_of_order(p: i64) -> Vec<TwinPair> {
    let mut buckets: BTreeMap<BigInt, Vec<i64>> = BTreeMap::new();
    for q in (1..p).filter(|&q| gcd(p, q) == 1) {
        let key = dedekind(q, p, DedekindMethod::Fast)
            .expect("coprime by construction")
            .scaled();
        buckets.entry(key).or_default().push(q);
    }
    let mut out = Vec::new();
    for qs in buckets.values() {
        for (i, &q1) in qs.iter().enumerate() {
            for &q2 in &qs[i + 1..] {
                let (a, b) = (lens(p, q1), lens(p, q2));
                if !oriented_homeomorphic(&a, &b) {
                    out.push(TwinPair { p, q1, q2 });
                }
            }
        }
    }
    out.sort();
    out
}

fn lens(p: i64, q: i64) -> LensSpace {
    LensSpace::new(p, q).expect("coprime by construction")
}

/// Every twin pair with `2 <= p <= p_max`, sorted lexicographically.
pub fn find_tau_twins(p_max: i64) -> Result<Vec<TwinPair>> {
    if p_max < 2 {
        return Err(Error::SearchBound { min: 2, got: p_max });
    }
    let per_order: Vec<Vec<TwinPair>> = (2..=p_max).into_par_iter().map(twins_of_order).collect();
    Ok(per_order.into_iter().flatten().collect())
}

/// Evaluates `ξ_r` for both spaces at every odd `r` in `[3, r_max]` and
/// buckets the levels.
pub fn classify_pair(p: i64, q1: i64, q2: i64, r_max: i64) -> Result<PairReport> {
    let a = LensSpace::new(p, q1)?;
    let b = LensSpace::new(p, q2)?;
    let reject = |reason| Error::NotTwinPair { p, q1, q2, reason };
    if a == b {
        return Err(reject("q1 and q2 coincide modulo p"));
    }
    if !tau_equal(&a, &b) {
        return Err(reject("the Dedekind sums differ"));
    }
    if oriented_homeomorphic(&a, &b) {
        return Err(reject("the lens spaces are homeomorphic"));
    }
    let levels: Vec<i64> = (3..=r_max).step_by(2).collect();
    let outcomes: Vec<(i64, bool, bool)> = levels
        .par_iter()
        .map(|&r| {
            let ta = xi(&a, r)?;
            let tb = xi(&b, r)?;
            Ok((r, ta.value == tb.value, ta.is_zero() && tb.is_zero()))
        })
        .collect::<Result<_>>()?;

    let mut report = PairReport {
        p,
        q1: a.q(),
        q2: b.q(),
        dedekind_value: a.dedekind(),
        distinguishing_r: vec![],
        agreeing_r: vec![],
        all_zero_r: vec![],
    };
    for (r, equal, both_zero) in outcomes {
        if equal {
            report.agreeing_r.push(r);
            if both_zero {
                report.all_zero_r.push(r);
            }
        } else {
            report.distinguishing_r.push(r);
        }
    }
    Ok(report)
}

/// [`find_tau_twins`] followed by [`classify_pair`] on every pair.
pub fn search(p_max: i64, r_max: i64) -> Result<Vec<PairReport>> {
    find_tau_twins(p_max)?
        .par_iter()
        .map(|t| classify_pair(t.p, t.q1, t.q2, r_max))
        .collect()
}
