use std::collections::BTreeMap;
use std::fmt::Write;

use qident::identities::{
    registry, Axis, CaseResult, CaseStatus, ResultStatus, Summary, VerificationReport,
};

fn point(r: &CaseResult) -> String {
    let mut parts = Vec::new();
    if let Some(n) = r.n {
        parts.push(format!("n={n}"));
    }
    if let Some(m) = r.m {
        parts.push(format!("m={m}"));
    }
    if let Some(t) = r.order {
        parts.push(format!("order={t}"));
    }
    parts.join(" ")
}

/// One verdict line per grid point, then a per-case summary table.
pub fn human(report: &VerificationReport) -> String {
    let mut out = String::new();
    let mut per_case: BTreeMap<&str, Summary> = BTreeMap::new();
    for r in &report.results {
        let _ = write!(out, "{:<20} {:<18} {}", r.status.label(), r.id, point(r));
        if let Some(ms) = r.ms {
            let _ = write!(out, " ({ms} ms)");
        }
        out.push('\n');
        if r.status != ResultStatus::Pass {
            match (&r.error, &r.lhs, &r.rhs, &r.diff) {
                (Some(e), ..) => {
                    let _ = writeln!(out, "    error: {e}");
                }
                (None, Some(l), Some(rh), diff) => {
                    let _ = writeln!(out, "    lhs:  {l}\n    rhs:  {rh}");
                    if let Some(d) = diff {
                        let _ = writeln!(out, "    diff: {d}");
                    }
                }
                _ => {}
            }
        }
        let s = per_case.entry(r.id).or_default();
        match r.status {
            ResultStatus::Pass => s.pass += 1,
            ResultStatus::Fail => s.fail += 1,
            ResultStatus::ExploratoryMismatch => s.exploratory += 1,
        }
    }
    let _ = writeln!(
        out,
        "\n{:<18} {:>6} {:>6} {:>12}",
        "case", "pass", "fail", "exploratory"
    );
    for (id, s) in &per_case {
        let _ = writeln!(
            out,
            "{id:<18} {:>6} {:>6} {:>12}",
            s.pass, s.fail, s.exploratory
        );
    }
    let t = report.summary;
    let _ = writeln!(
        out,
        "{:<18} {:>6} {:>6} {:>12}",
        "total", t.pass, t.fail, t.exploratory
    );
    let _ = writeln!(out, "{}", if t.fail == 0 { "OK" } else { "FAILED" });
    out
}

pub fn case_list() -> String {
    let mut out = String::new();
    for c in registry() {
        let status = match c.status {
            CaseStatus::Asserted => "asserted",
            CaseStatus::Exploratory => "exploratory",
        };
        let axis = match c.axis {
            Axis::NM => "n,m",
            Axis::N => "n",
            Axis::M => "m",
            Axis::Order => "order",
        };
        let _ = writeln!(out, "{:<18} {:<12} {:<6} {}", c.id, status, axis, c.summary);
    }
    out
}
