//! Runs catalog entries at a requested precision and depth.

mod render;

use std::cmp::Ordering;
use std::fmt;
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{digits_matched, pi, ratio_evaluation, sum_series, HPReal, PrecisionContext, TAIL_LOOKAHEAD};
use crate::registry::{self, Instance, Params, Status, Term, TermStructure};

pub use render::{reports_csv, reports_markdown, CSV_HEADER};

/// Negative controls must miss the target by this many digits or more.
pub const NEGATIVE_CONTROL_MAX_DIGITS: u32 = 2;

const MAX_GUARD_DOUBLINGS: u32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub id: String,
    pub params: Params,
    pub status: Status,
    pub digits: u32,
    pub terms: u64,
    pub value: String,
    pub target: String,
    pub abs_error: String,
    pub digits_matched: u32,
    pub tail_bound: Option<String>,
    pub verdict: Verdict,
    pub paper_anchor: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerificationReport {
    /// Pass for theorems and conjectures, fail for negative controls.
    pub fn is_expected(&self) -> bool {
        match self.status {
            Status::NegativeControl => self.verdict == Verdict::Fail,
            _ => self.verdict == Verdict::Pass,
        }
    }

    /// `<id>[_<params>]`, the stem of persisted file names.
    pub fn label(&self) -> String {
        let mut out = self.id.clone();
        for (k, v) in &self.params {
            out.push_str(&format!("_{k}{v}"));
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidArgument(format!("malformed report: {e}")))
    }

    pub fn to_markdown(&self) -> String {
        reports_markdown(std::slice::from_ref(self))
    }

    pub fn to_csv(&self) -> String {
        reports_csv(std::slice::from_ref(self))
    }
}

/// Digits required for a pass when no override is given.
pub fn default_threshold(status: Status, digits: u32) -> u32 {
    let t = match status {
        Status::Conjecture => 15.min(digits.saturating_sub(25)),
        _ => 30.min(digits.saturating_sub(20)),
    };
    t.max(5).min(digits)
}

/// Exact terms computed once and re-evaluated at each precision.
enum ExactTerms {
    Series(Vec<Term>),
    Ratio(Vec<Term>, Vec<Term>),
    Difference(Vec<(Term, Term)>),
    Limit(BigRational),
}

impl ExactTerms {
    fn build(inst: &Instance, depth: u64) -> Result<Self> {
        let (k0, k_end) = inst.index_range(depth);
        if let TermStructure::Limit(q) = inst.term_structure(depth)? {
            return Ok(ExactTerms::Limit(q));
        }
        let structures = (k0..=k_end + TAIL_LOOKAHEAD)
            .map(|k| inst.term_structure(k))
            .collect::<Result<Vec<_>>>()?;
        Ok(match &structures[0] {
            TermStructure::Series(_) => ExactTerms::Series(
                structures
                    .into_iter()
                    .map(|s| match s {
                        TermStructure::Series(t) => t,
                        _ => unreachable!("one structure per identity"),
                    })
                    .collect(),
            ),
            TermStructure::Ratio { .. } => {
                let (num, den) = structures
                    .into_iter()
                    .map(|s| match s {
                        TermStructure::Ratio { numerator, denominator } => (numerator, denominator),
                        _ => unreachable!("one structure per identity"),
                    })
                    .unzip();
                ExactTerms::Ratio(num, den)
            }
            TermStructure::Difference { .. } => ExactTerms::Difference(
                structures
                    .into_iter()
                    .map(|s| match s {
                        TermStructure::Difference { left, right } => (left, right),
                        _ => unreachable!("one structure per identity"),
                    })
                    .collect(),
            ),
            TermStructure::Limit(_) => unreachable!("handled above"),
        })
    }
}

struct Evaluation {
    value: HPReal,
    tail_bound: Option<HPReal>,
    /// Largest relative size of the last included term(s), for tail dominance.
    last_weight: Option<HPReal>,
}

fn term_values(terms: &[Term], pi: &HPReal) -> Vec<HPReal> {
    terms.iter().map(|t| t.value(pi)).collect()
}

fn evaluate(exact: &ExactTerms, k0: u64, k_end: u64, ctx: PrecisionContext) -> Result<Evaluation> {
    let series_of = |values: Vec<HPReal>| sum_series(|k| values[(k - k0) as usize].clone(), k0, k_end, ctx);
    match exact {
        ExactTerms::Limit(q) => Ok(Evaluation {
            value: HPReal::from_rational(q, ctx),
            tail_bound: None,
            last_weight: None,
        }),
        ExactTerms::Series(terms) => {
            let s = series_of(term_values(terms, &pi(ctx)?))?;
            Ok(Evaluation {
                last_weight: Some(s.tail_bound.clone().unwrap_or_else(|| s.last_term.abs())),
                value: s.partial_sum,
                tail_bound: s.tail_bound,
            })
        }
        ExactTerms::Difference(pairs) => {
            let p = pi(ctx)?;
            let values = pairs.iter().map(|(l, r)| &l.value(&p) - &r.value(&p)).collect();
            let s = series_of(values)?;
            Ok(Evaluation {
                last_weight: Some(s.tail_bound.clone().unwrap_or_else(|| s.last_term.abs())),
                value: s.partial_sum,
                tail_bound: s.tail_bound,
            })
        }
        ExactTerms::Ratio(num, den) => {
            let p = pi(ctx)?;
            let (nv, dv) = (term_values(num, &p), term_values(den, &p));
            let r = ratio_evaluation(
                |k| nv[(k - k0) as usize].clone(),
                |k| dv[(k - k0) as usize].clone(),
                k0,
                k_end,
                ctx,
            )?;
            let rel = |s: &crate::numeric::SeriesEvaluation| &s.last_term.abs() / &s.partial_sum.abs();
            let (a, b) = (rel(&r.numerator), rel(&r.denominator));
            let weight = if a.cmp_abs(&b) == Ordering::Less { b } else { a };
            Ok(Evaluation {
                value: r.ratio,
                tail_bound: None,
                last_weight: Some(weight),
            })
        }
    }
}

/// Evaluate, doubling the guard digits until two successive precisions agree
/// on the requested digits.
fn evaluate_stable(exact: &ExactTerms, k0: u64, k_end: u64, digits: u32) -> Result<(Evaluation, PrecisionContext)> {
    let mut ctx = PrecisionContext::new(digits)?;
    let mut current = evaluate(exact, k0, k_end, ctx)?;
    for _ in 0..MAX_GUARD_DOUBLINGS {
        let wider = ctx.doubled_guard();
        let next = evaluate(exact, k0, k_end, wider)?;
        let lifted = current.value.with_context(wider);
        if digits_matched(&next.value, &lifted) >= digits {
            return Ok((current, ctx));
        }
        ctx = wider;
        current = next;
    }
    Ok((current, ctx))
}

/// `10^{-d} · max(1, |x|)` at `x`'s precision.
fn tolerance(x: &HPReal, d: u32) -> HPReal {
    let ctx = x.ctx();
    let one = HPReal::one(ctx);
    let scale = if x.cmp_abs(&one) == Ordering::Greater {
        x.abs()
    } else {
        one
    };
    scale.div_int(&num_traits::pow(BigInt::from(10), d as usize))
}

/// Verify one instance at `digits` of precision and depth `depth`.
pub fn verify_instance(inst: &Instance, digits: u32, depth: u64, threshold: Option<u32>) -> Result<VerificationReport> {
    if digits < crate::numeric::MIN_DIGITS {
        return Err(Error::InvalidParams {
            id: inst.id().into(),
            reason: format!("digits must be at least {}, got {digits}", crate::numeric::MIN_DIGITS),
        });
    }
    if depth < inst.min_depth() {
        return Err(Error::InvalidParams {
            id: inst.id().into(),
            reason: format!("depth must be at least {}, got {depth}", inst.min_depth()),
        });
    }
    let status = inst.identity.status;
    let threshold = threshold.unwrap_or_else(|| default_threshold(status, digits));
    let (k0, k_end) = inst.index_range(depth);

    let mut report = VerificationReport {
        id: inst.id().to_string(),
        params: inst.params.clone(),
        status,
        digits,
        terms: depth,
        value: String::new(),
        target: String::new(),
        abs_error: String::new(),
        digits_matched: 0,
        tail_bound: None,
        verdict: Verdict::Inconclusive,
        paper_anchor: inst.identity.paper_anchor.clone(),
        note: None,
    };

    let exact = ExactTerms::build(inst, depth)?;
    let (eval, ctx) = match evaluate_stable(&exact, k0, k_end, digits) {
        Ok(v) => v,
        Err(Error::ZeroDenominator) => {
            let ctx = PrecisionContext::new(digits)?;
            report.value = "undefined".into();
            report.target = inst.target_value(ctx)?.to_decimal(digits);
            report.abs_error = "undefined".into();
            report.note = Some("denominator partial sum vanishes at working precision".into());
            return Ok(report);
        }
        Err(e) => return Err(e),
    };

    let target = inst.target_value(ctx)?;
    let error = (&eval.value - &target).abs();
    let matched = digits_matched(&eval.value, &target);
    let is_limit = matches!(exact, ExactTerms::Limit(_));

    report.value = eval.value.to_decimal(digits);
    report.target = target.to_decimal(digits);
    report.abs_error = error.to_sci(3);
    report.digits_matched = matched;
    report.tail_bound = eval.tail_bound.as_ref().map(|t| t.to_sci(3));

    report.verdict = if is_limit {
        // Relative error of (1 + 1/n)^n behaves like 1/(2n); allow twice that.
        let limit = target.div_int(&BigInt::from(depth));
        if error.cmp_abs(&limit) == Ordering::Greater {
            Verdict::Fail
        } else {
            Verdict::Pass
        }
    } else {
        let unsettled = eval.last_weight.as_ref().is_some_and(|w| {
            let tol = if matches!(exact, ExactTerms::Ratio(..)) {
                HPReal::one(ctx).div_int(&num_traits::pow(BigInt::from(10), threshold as usize))
            } else {
                tolerance(&target, threshold)
            };
            w.cmp_abs(&tol) != Ordering::Less
        });
        match status {
            Status::NegativeControl if matched <= NEGATIVE_CONTROL_MAX_DIGITS => Verdict::Fail,
            Status::NegativeControl if matched < threshold => Verdict::Inconclusive,
            _ if matched >= threshold => Verdict::Pass,
            _ if unsettled => Verdict::Inconclusive,
            _ => Verdict::Fail,
        }
    };
    if report.verdict == Verdict::Inconclusive && report.note.is_none() {
        report.note = Some(format!("truncation tail dominates 1e-{threshold}; increase the depth"));
    }
    Ok(report)
}

/// Verify an identity by id with parameter overrides.
pub fn verify(
    id: &str,
    params: &Params,
    digits: u32,
    depth: u64,
    threshold: Option<u32>,
) -> Result<VerificationReport> {
    verify_instance(&registry::instance(id, params)?, digits, depth, threshold)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub family: String,
    pub param: String,
    pub reports: Vec<VerificationReport>,
    pub passed: usize,
    pub failed: usize,
    pub inconclusive: usize,
}

impl ScanSummary {
    fn from_reports(family: &str, param: &str, reports: Vec<VerificationReport>) -> Self {
        let count = |v| reports.iter().filter(|r| r.verdict == v).count();
        Self {
            family: family.into(),
            param: param.into(),
            passed: count(Verdict::Pass),
            failed: count(Verdict::Fail),
            inconclusive: count(Verdict::Inconclusive),
            reports,
        }
    }
}

/// Verify a family over an inclusive parameter range. `param` defaults to
/// the family's scan parameter; `fixed` pins the others. Without `depth`
/// each instance runs at its default depth.
pub fn scan(
    family: &str,
    param: Option<&str>,
    range: RangeInclusive<i64>,
    fixed: &Params,
    digits: u32,
    depth: Option<u64>,
    threshold: Option<u32>,
) -> Result<ScanSummary> {
    let identity = registry::find_identity(family)?;
    let param = match param {
        Some(p) => p.to_string(),
        None => identity
            .scan_param()
            .map(|p| p.name.clone())
            .ok_or_else(|| Error::InvalidParams {
                id: family.into(),
                reason: "not a parameterized family".into(),
            })?,
    };
    if range.is_empty() {
        return Err(Error::InvalidParams {
            id: family.into(),
            reason: format!("empty range {}..{}", range.start(), range.end()),
        });
    }
    let instances = range
        .map(|v| {
            let mut p = fixed.clone();
            p.insert(param.clone(), v);
            identity.resolve(&p)
        })
        .collect::<Result<Vec<_>>>()?;
    let reports = instances
        .par_iter()
        .map(|inst| verify_instance(inst, digits, depth.unwrap_or_else(|| inst.default_depth()), threshold))
        .collect::<Result<Vec<_>>>()?;
    Ok(ScanSummary::from_reports(family, &param, reports))
}

/// Every default instance of the catalog, in catalog order. `depth`
/// overrides each instance's default depth.
pub fn verify_all(digits: u32, depth: Option<u64>, threshold: Option<u32>) -> Result<Vec<VerificationReport>> {
    let instances: Vec<Instance> = registry::list_identities()
        .iter()
        .flat_map(|i| i.default_instances())
        .collect();
    instances
        .par_iter()
        .map(|inst| verify_instance(inst, digits, depth.unwrap_or_else(|| inst.default_depth()), threshold))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvergenceRow {
    pub terms: u64,
    pub digits_matched: u32,
    pub abs_error: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConvergenceTable {
    pub id: String,
    pub params: Params,
    pub digits: u32,
    pub rows: Vec<ConvergenceRow>,
}

pub fn convergence_table(id: &str, params: &Params, digits: u32, depths: &[u64]) -> Result<ConvergenceTable> {
    if depths.is_empty() || depths.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(
            "depth list must be nonempty and strictly increasing".into(),
        ));
    }
    let inst = registry::instance(id, params)?;
    let rows = depths
        .par_iter()
        .map(|&k| {
            verify_instance(&inst, digits, k, None).map(|r| ConvergenceRow {
                terms: k,
                digits_matched: r.digits_matched,
                abs_error: r.abs_error,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ConvergenceTable {
        id: id.into(),
        params: inst.params,
        digits,
        rows,
    })
}
