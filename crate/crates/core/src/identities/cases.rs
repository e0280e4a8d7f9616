//! The registry: every checkable statement as a named case with a domain
//! and a pair of exact evaluators.

use serde::Serialize;

use super::limits::{limit_case, Limit};
use super::value::{Value, ValueKind};
use super::*;
use crate::combinat::{
    audit_involution, claim_violations, g_counts, split_sgn_closed_form, subsplit_closed_form,
    FamilySpec,
};
use crate::exact::{cc4_gauss, cc6_eisen, filter_difference};
use crate::qseries::{
    prefactor_mod2_half, prefactor_mod2_int, prefactor_mod3, subset_weight_enumerator,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CaseStatus {
    /// Must hold on its whole domain.
    Asserted,
    /// Reported, never fails a run.
    Exploratory,
}

/// Which grid parameters a case consumes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    /// Every `(n, m)` of the grid.
    NM,
    /// Every `n`; `m` is unused.
    N,
    /// Every `m`; `n` is unused.
    M,
    /// A single point at the grid's order.
    Order,
}

/// A grid point; unused coordinates are `None`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub n: Option<i64>,
    pub m: Option<i64>,
    pub order: Option<usize>,
}

impl Point {
    fn n(&self) -> i64 {
        self.n.expect("case reads n")
    }

    fn m(&self) -> i64 {
        self.m.expect("case reads m")
    }

    fn order(&self) -> usize {
        self.order.expect("case reads order")
    }
}

type Sides = Result<(Value, Value)>;

pub struct IdentityCase {
    pub id: &'static str,
    pub status: CaseStatus,
    pub axis: Axis,
    pub kind: ValueKind,
    pub summary: &'static str,
    domain: fn(&Point) -> bool,
    eval: fn(&Point) -> Sides,
}

impl IdentityCase {
    pub fn in_domain(&self, p: &Point) -> bool {
        (self.domain)(p)
    }

    /// `(lhs, rhs)` at `p`.
    pub fn evaluate(&self, p: &Point) -> Sides {
        (self.eval)(p)
    }
}

impl std::fmt::Debug for IdentityCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentityCase")
            .field("id", &self.id)
            .field("status", &self.status)
            .field("axis", &self.axis)
            .finish()
    }
}

/// Largest ground set used by the structural cases on a grid.
const STRUCTURE_BOUND: i64 = 16;

fn pair<L: Into<Value>, R: Into<Value>>(lhs: L, rhs: R) -> Sides {
    Ok((lhs.into(), rhs.into()))
}

fn int(v: i64) -> Value {
    Value::Integer(v.into())
}

fn family(layout: Layout, d: Modulus, p: &Point) -> Result<FamilySpec> {
    FamilySpec::new(d, GroundSet::new(layout, p.n() as usize, p.m() as usize)?)
}

/// Sum of every involution-law violation plus one if the domain's signed
/// sum does not cancel.
fn involution_defects(layout: Layout, d: Modulus, p: &Point) -> Sides {
    let audit = audit_involution(&family(layout, d, p)?)?;
    let defects = audit.leaves_domain
        + audit.not_involutive
        + audit.sign_kept
        + audit.weight_changed
        + audit.fixed_points
        + audit.size_step
        + usize::from(!audit.cancel_sum.is_zero());
    Ok((int(defects as i64), int(0)))
}

fn small(p: &Point) -> bool {
    2 * p.n() + p.m() <= STRUCTURE_BOUND
}

fn limit(which: Limit, p: &Point) -> Sides {
    let (lhs, rhs) = limit_case(which, p.order())?;
    pair(lhs, rhs)
}

macro_rules! case {
    ($id:literal, $status:ident, $axis:ident, $kind:ident, $summary:literal, |$p:ident| $domain:expr, $eval:expr $(,)?) => {
        IdentityCase {
            id: $id,
            status: CaseStatus::$status,
            axis: Axis::$axis,
            kind: ValueKind::$kind,
            summary: $summary,
            domain: |$p: &Point| $domain,
            eval: $eval,
        }
    };
}

static REGISTRY: &[IdentityCase] = &[
    case!(
        "T1",
        Asserted,
        NM,
        Rational,
        "sum (-1)^k C(2n+m, n+2k) = 2^{n+m/2} cos(m pi/4)",
        |p| p.n() >= 0 && 2 * p.n() + p.m() >= 0,
        |p| pair(lhs_t1(p.n(), p.m())?, rhs_t1(p.n(), p.m())?)
    ),
    case!(
        "T2",
        Asserted,
        NM,
        Qpoly,
        "mod-2 q-sum = (-q;q^2)_n times partition blocks on the half-integer ladder",
        |p| p.n() >= 1 && p.m() >= 0,
        |p| pair(lhs_t2(p.n(), p.m())?, rhs_t2(p.n(), p.m())?)
    ),
    case!(
        "T2-literal",
        Exploratory,
        NM,
        Qpoly,
        "mod-2 q-sum against blocks over the integer interval [n+1, n+m-1]",
        |p| p.n() >= 1 && p.m() >= 0,
        |p| pair(lhs_t2(p.n(), p.m())?, rhs_t2_literal(p.n(), p.m())?)
    ),
    case!(
        "T3",
        Asserted,
        NM,
        Qpoly,
        "shifted mod-2 q-sum = (-q^2;q^2)_n {a + c - (b + d)}",
        |p| p.n() >= 1 && p.m() >= 1,
        |p| pair(lhs_t3(p.n(), p.m())?, rhs_t3(p.n(), p.m())?)
    ),
    case!(
        "T4",
        Asserted,
        NM,
        Rational,
        "sum (-1)^k C(2n+m, n+3k) = 2 * 3^{n-1+m/2} cos(m pi/6)",
        |p| p.n() >= 0 && (2 * p.n() + p.m() >= 1 || (p.n() == 0 && p.m() == 0)),
        |p| pair(lhs_t4(p.n(), p.m())?, rhs_t4(p.n(), p.m())?)
    ),
    case!(
        "T4-diagonal",
        Exploratory,
        NM,
        Rational,
        "the mod-3 closed form on 2n + m = 0, n >= 1 (empty binomial top)",
        |p| p.n() >= 1 && 2 * p.n() + p.m() == 0,
        |p| pair(lhs_t4(p.n(), p.m())?, rhs_t4(p.n(), p.m())?)
    ),
    case!(
        "T5",
        Asserted,
        NM,
        Qpoly,
        "mod-3 q-sum = q^{(n^2-n)/2} times the signed subset weight sum",
        |p| p.n() >= 1 && p.m() >= 0 && 2 * p.n() + p.m() <= ORACLE_BOUND,
        |p| pair(lhs_t5(p.n(), p.m())?, rhs_t5_oracle(p.n(), p.m())?)
    ),
    case!(
        "T5-literal",
        Exploratory,
        NM,
        Qpoly,
        "mod-3 q-sum against the A-polynomial combination",
        |p| p.n() >= 1 && p.m() >= 0,
        |p| pair(lhs_t5(p.n(), p.m())?, rhs_t5_literal(p.n(), p.m())?)
    ),
    case!(
        "EQ1",
        Asserted,
        N,
        Rational,
        "sum (-1)^k C(2n, n+2k) = 2^n",
        |p| p.n() >= 0,
        |p| {
            let (l, r) = eq1(p.n())?;
            pair(l, r)
        }
    ),
    case!(
        "EQ2",
        Asserted,
        N,
        Rational,
        "sum (-1)^k C(2n, n+3k) = 2 * 3^{n-1} (1 at n = 0)",
        |p| p.n() >= 0,
        |p| {
            let (l, r) = eq2(p.n())?;
            pair(l, r)
        }
    ),
    case!(
        "EQ3",
        Asserted,
        N,
        Qpoly,
        "sum (-1)^k q^{2k^2} [2n, n+2k] = (-q;q^2)_n",
        |p| p.n() >= 0,
        |p| {
            let (l, r) = eq3(p.n())?;
            pair(l, r)
        }
    ),
    case!(
        "EQ4",
        Asserted,
        N,
        Qpoly,
        "sum (-1)^k q^{(9k^2+3k)/2} [2n, n+3k] = (1+q^n) (q^3;q^3)_{n-1}/(q;q)_{n-1}",
        |p| p.n() >= 0,
        |p| {
            let (l, r) = eq4(p.n())?;
            pair(l, r)
        }
    ),
    case!(
        "R1A",
        Asserted,
        NM,
        Integer,
        "m = 4N+2, q = 1: the 4l and 4l+2 partition double sums agree (ladder parts)",
        |p| p.n() >= 1 && p.m() >= 2 && p.m() % 4 == 2,
        |p| {
            let (l, r) = remark1a(p.n(), (p.m() - 2) / 4)?;
            pair(l, r)
        }
    ),
    case!(
        "R1A-literal",
        Exploratory,
        NM,
        Integer,
        "as R1A with parts from the integer interval [n+1, n+m-1]",
        |p| p.n() >= 1 && p.m() >= 2 && p.m() % 4 == 2,
        |p| {
            let (l, r) = remark1a_literal(p.n(), (p.m() - 2) / 4)?;
            pair(l, r)
        }
    ),
    case!(
        "R1B",
        Asserted,
        NM,
        Integer,
        "m = 6N+3: the mod-3 q-sum vanishes at q = 1",
        |p| p.n() >= 1 && p.m() >= 3 && p.m() % 6 == 3,
        |p| pair(remark1b(p.n(), (p.m() - 3) / 6)?, int(0))
    ),
    case!(
        "R1B-literal",
        Exploratory,
        NM,
        Integer,
        "m = 6N+3: A_{6,0}(1) - A_{6,3}(1) + A_{6,1}(1) - A_{6,4}(1) = 0",
        |p| p.n() >= 1 && p.m() >= 3 && p.m() % 6 == 3,
        |p| pair(remark1b_literal(p.n(), (p.m() - 3) / 6)?, int(0))
    ),
    case!(
        "L1",
        Asserted,
        Order,
        TruncSeries,
        "limit of the mod-2 q-sum = (q^2;q^4)^2 (q^4;q^4) / (q;q)",
        |p| p.order() <= MAX_ORDER,
        |p| limit(Limit::L1, p)
    ),
    case!(
        "L2",
        Asserted,
        Order,
        TruncSeries,
        "limit of the shifted mod-2 q-sum = 1 / (q^2;q^4)",
        |p| p.order() <= MAX_ORDER,
        |p| limit(Limit::L2, p)
    ),
    case!(
        "L3",
        Asserted,
        Order,
        TruncSeries,
        "limit of the mod-3 q-sum = (q^3;q^3) / (q;q)",
        |p| p.order() <= MAX_ORDER,
        |p| limit(Limit::L3, p)
    ),
    case!(
        "PRODID",
        Asserted,
        Order,
        TruncSeries,
        "(q^2;q^4)^2 (q^4;q^4) / (q;q) = (-q;q) (q^2;q^4)",
        |p| p.order() <= MAX_ORDER,
        |p| limit(Limit::ProdId, p)
    ),
    case!(
        "P-PREFIX2H",
        Asserted,
        N,
        Qpoly,
        "prod (q^{-(2i-1)/2} + q^{(2i-1)/2}) = q^{-n^2/2} (-q;q^2)_n",
        |p| p.n() >= 0,
        |p| pair(
            prefactor_mod2_half(p.n() as u32),
            eq3(p.n())?.1.shift(-p.n() * p.n())
        )
    ),
    case!(
        "P-PREFIX2I",
        Asserted,
        N,
        Qpoly,
        "prod (q^{-i} + q^i) = q^{-n(n+1)/2} (-q^2;q^2)_n",
        |p| p.n() >= 0,
        |p| pair(
            prefactor_mod2_int(p.n() as u32),
            pochhammer(&PochhammerSpec::finite(-1, 2, 2, p.n() as u32))?
                .shift(-p.n() * (p.n() + 1)),
        )
    ),
    case!(
        "P-PREFIX3",
        Asserted,
        N,
        Qpoly,
        "prod_{i<n} (q^{-i} + 1 + q^i) = q^{-(n^2-n)/2} (q^3;q^3)_{n-1}/(q;q)_{n-1}",
        |p| p.n() >= 1,
        |p| pair(
            prefactor_mod3(p.n() as u32),
            cube_ratio(p.n() as u32)?.shift(-p.n() * (p.n() - 1))
        )
    ),
    case!(
        "LEMMA7",
        Asserted,
        NM,
        Qpoly,
        "k-subsets of {1..n} by weight = [n, k] q^{k(k+1)/2} (m plays k)",
        |p| p.m() >= 0 && p.m() <= p.n(),
        |p| pair(
            subset_weight_enumerator(p.n() as u32, p.m() as u32),
            qbinom(p.n(), p.m()).shift(p.m() * (p.m() + 1)),
        )
    ),
    case!(
        "SPLITSGN",
        Asserted,
        NM,
        Integer,
        "plain mod-2 signed count = 2^n (sum C(m,4l) - sum C(m,4l+2))",
        |p| p.n() >= 0 && p.m() >= 0 && small(p),
        |p| pair(
            family_signed_sum(&family(Layout::Plain, Modulus::Two, p)?)?.eval_at_one(),
            split_sgn_closed_form(p.n() as u32, p.m() as u32)?,
        )
    ),
    case!(
        "SUBSPLIT",
        Asserted,
        NM,
        Integer,
        "plain mod-3 signed count = 3^{n-1} times the C(m+1, .) filter differences",
        |p| p.n() >= 1 && p.m() >= 0 && small(p),
        |p| pair(
            family_signed_sum(&family(Layout::Plain, Modulus::Three, p)?)?.eval_at_one(),
            subsplit_closed_form(p.n() as u32, p.m() as u32 + 1)?,
        )
    ),
    case!(
        "SUBSPLIT-printed",
        Exploratory,
        NM,
        Integer,
        "plain mod-3 signed count against C(m, .) filter differences",
        |p| p.n() >= 1 && p.m() >= 0 && small(p),
        |p| pair(
            family_signed_sum(&family(Layout::Plain, Modulus::Three, p)?)?.eval_at_one(),
            subsplit_closed_form(p.n() as u32, p.m() as u32)?,
        )
    ),
    case!(
        "INV2-PLAIN",
        Asserted,
        NM,
        Integer,
        "pair-toggling involution laws, unweighted (violation count)",
        |p| p.n() >= 0 && p.m() >= 0 && small(p),
        |p| involution_defects(Layout::Plain, Modulus::Two, p)
    ),
    case!(
        "INV2-HALF",
        Asserted,
        NM,
        Integer,
        "pair-toggling involution laws, half-integer weights",
        |p| p.n() >= 0 && p.m() >= 0 && small(p),
        |p| involution_defects(Layout::HalfMod2, Modulus::Two, p)
    ),
    case!(
        "INV2-INT",
        Asserted,
        NM,
        Integer,
        "pair-toggling involution laws, integer weights with a zero element",
        |p| p.n() >= 0 && p.m() >= 1 && small(p),
        |p| involution_defects(Layout::IntMod2, Modulus::Two, p)
    ),
    case!(
        "INV3-PLAIN",
        Asserted,
        NM,
        Integer,
        "mod-3 involution laws, unweighted",
        |p| p.n() >= 1 && p.m() >= 0 && small(p),
        |p| involution_defects(Layout::Plain, Modulus::Three, p)
    ),
    case!(
        "INV3-Q",
        Asserted,
        NM,
        Integer,
        "mod-3 involution laws, weights 0, +-1, ..., n+m",
        |p| p.n() >= 1 && p.m() >= 0 && small(p),
        |p| involution_defects(Layout::Mod3, Modulus::Three, p)
    ),
    case!(
        "GCOUNT1",
        Asserted,
        N,
        Integer,
        "#G_1 traces = 3^{n-1}",
        |p| p.n() >= 1 && 2 * p.n() <= STRUCTURE_BOUND,
        |p| pair(
            g_counts(p.n() as usize, 0)?.g1_traces,
            Integer::from(3).pow(p.n() as u32 - 1)
        )
    ),
    case!(
        "GCOUNT2",
        Asserted,
        N,
        Integer,
        "#G_2 traces = 3^{n-1}",
        |p| p.n() >= 1 && 2 * p.n() <= STRUCTURE_BOUND,
        |p| pair(
            g_counts(p.n() as usize, 0)?.g2_traces,
            Integer::from(3).pow(p.n() as u32 - 1)
        )
    ),
    case!(
        "CLAIM",
        Asserted,
        NM,
        Integer,
        "every member of G has prefix counts in {i, i+1} (violation count)",
        |p| p.n() >= 1 && p.m() >= 0 && small(p),
        |p| pair(
            claim_violations(&family(Layout::Plain, Modulus::Three, p)?)? as i64,
            0
        )
    ),
    case!(
        "FILTER4",
        Asserted,
        M,
        Integer,
        "sum C(m,4l) - sum C(m,4l+2) = Re((1+i)^m)",
        |p| p.m() >= 0,
        |p| pair(
            filter_difference(p.m() as u32, 4, 0, 2)?,
            cc4_gauss(p.m() as u32)
        )
    ),
    case!(
        "FILTER6A",
        Asserted,
        M,
        Rational,
        "sum C(m+1,6l) - sum C(m+1,6l+3) = 2 * 3^{(m-1)/2} cos((m+1) pi/6)",
        |p| p.m() >= 0,
        |p| pair(
            Rational::from_integer(filter_difference(p.m() as u32 + 1, 6, 0, 3)?),
            cc6_eisen(p.m() as u32 + 1) * Rational::new(2.into(), 3.into()),
        )
    ),
    case!(
        "FILTER6B",
        Asserted,
        M,
        Rational,
        "sum C(m+1,6l+1) - sum C(m+1,6l+4) = 2 * 3^{(m-1)/2} cos((m-1) pi/6)",
        |p| p.m() >= 0,
        |p| pair(
            Rational::from_integer(filter_difference(p.m() as u32 + 1, 6, 1, 4)?),
            if p.m() >= 1 {
                cc6_eisen(p.m() as u32 - 1)
            } else {
                cc6(-1)
            } * Integer::from(2),
        )
    ),
];

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        int(v)
    }
}

pub fn registry() -> &'static [IdentityCase] {
    REGISTRY
}

pub fn find_case(id: &str) -> Result<&'static IdentityCase> {
    REGISTRY
        .iter()
        .find(|c| c.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| Error::UnknownCase(id.to_string()))
}

/// Resolves a comma-separated selector; `all` selects every case.
pub fn resolve_cases(selector: &str) -> Result<Vec<&'static IdentityCase>> {
    let mut out: Vec<&'static IdentityCase> = Vec::new();
    for id in selector.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if id.eq_ignore_ascii_case("all") {
            return Ok(REGISTRY.iter().collect());
        }
        let case = find_case(id)?;
        if !out.iter().any(|c| c.id == case.id) {
            out.push(case);
        }
    }
    Ok(out)
}
