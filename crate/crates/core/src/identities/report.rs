use std::ops::RangeInclusive;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::cases::{Axis, CaseStatus, IdentityCase, Point};
use super::value::Value;

/// Parameter ranges of a verification run. Ranges are inclusive and may
/// be empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridSpec {
    pub n: RangeInclusive<i64>,
    pub m: RangeInclusive<i64>,
    pub order: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            n: 1..=4,
            m: 0..=6,
            order: 40,
        }
    }
}

impl GridSpec {
    /// Points of `case` inside both the grid and its domain.
    pub fn points(&self, case: &IdentityCase) -> Vec<Point> {
        let pts: Vec<Point> = match case.axis {
            Axis::NM => self
                .n
                .clone()
                .flat_map(|n| {
                    self.m.clone().map(move |m| Point {
                        n: Some(n),
                        m: Some(m),
                        order: None,
                    })
                })
                .collect(),
            Axis::N => self
                .n
                .clone()
                .map(|n| Point {
                    n: Some(n),
                    ..Point::default()
                })
                .collect(),
            Axis::M => self
                .m
                .clone()
                .map(|m| Point {
                    m: Some(m),
                    ..Point::default()
                })
                .collect(),
            Axis::Order => vec![Point {
                order: Some(self.order),
                ..Point::default()
            }],
        };
        pts.into_iter().filter(|p| case.in_domain(p)).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ResultStatus {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "exploratory-mismatch")]
    ExploratoryMismatch,
}

impl ResultStatus {
    pub fn label(self) -> &'static str {
        match self {
            ResultStatus::Pass => "pass",
            ResultStatus::Fail => "fail",
            ResultStatus::ExploratoryMismatch => "exploratory-mismatch",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CaseResult {
    pub id: &'static str,
    pub n: Option<i64>,
    pub m: Option<i64>,
    pub order: Option<usize>,
    pub status: ResultStatus,
    pub lhs: Option<Value>,
    pub rhs: Option<Value>,
    pub diff: Option<Value>,
    pub ms: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub exploratory: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub version: &'static str,
    pub summary: Summary,
    pub results: Vec<CaseResult>,
}

impl VerificationReport {
    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn evaluate(case: &'static IdentityCase, p: Point, timing: bool) -> CaseResult {
    let start = Instant::now();
    let outcome = case.evaluate(&p);
    let ms = timing.then(|| (start.elapsed().as_secs_f64() * 1e6).round() / 1e3);
    let mismatch = match case.status {
        CaseStatus::Asserted => ResultStatus::Fail,
        CaseStatus::Exploratory => ResultStatus::ExploratoryMismatch,
    };
    let mut result = CaseResult {
        id: case.id,
        n: p.n,
        m: p.m,
        order: p.order,
        status: mismatch,
        lhs: None,
        rhs: None,
        diff: None,
        ms,
        error: None,
    };
    match outcome {
        Ok((lhs, rhs)) => {
            result.diff = Value::difference(&lhs, &rhs);
            if result.diff.as_ref().is_some_and(Value::is_zero) {
                result.status = ResultStatus::Pass;
            }
            result.lhs = Some(lhs);
            result.rhs = Some(rhs);
        }
        Err(e) => result.error = Some(e.to_string()),
    }
    result
}

/// Evaluates every case on its grid points in parallel. Results are sorted
/// by `(id, n, m, order)`, so the report does not depend on scheduling;
/// elapsed times are only recorded when `timing` is set.
pub fn run_grid(
    cases: &[&'static IdentityCase],
    grid: &GridSpec,
    timing: bool,
) -> VerificationReport {
    let work: Vec<(&'static IdentityCase, Point)> = cases
        .iter()
        .flat_map(|&case| grid.points(case).into_iter().map(move |p| (case, p)))
        .collect();
    let mut results: Vec<CaseResult> = work
        .into_par_iter()
        .map(|(case, p)| evaluate(case, p, timing))
        .collect();
    results.sort_by(|a, b| (a.id, a.n, a.m, a.order).cmp(&(b.id, b.n, b.m, b.order)));
    let mut summary = Summary::default();
    for r in &results {
        match r.status {
            ResultStatus::Pass => summary.pass += 1,
            ResultStatus::Fail => summary.fail += 1,
            ResultStatus::ExploratoryMismatch => summary.exploratory += 1,
        }
    }
    VerificationReport {
        version: crate::VERSION,
        summary,
        results,
    }
}
