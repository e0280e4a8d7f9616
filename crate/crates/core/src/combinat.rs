//! Weighted ground sets, the subset families built on them, and the
//! sign-reversing involutions that cancel everything outside the
//! structured family `G`.
//!
//! A ground set is an ordered sequence `a_1, ..., a_{2n+m}` of weights in
//! half-units. Subsets are bitmasks with bit `i` standing for `a_{i+1}`.
//!
//! With modulus `d`, the family is `F = {A : #A = n (mod d)}` and the sign
//! is `(-1)^{(#A - n)/d}`.
//!
//! * `d = 2`: `G` holds the members of `F` that meet every pair
//!   `{a_{2i-1}, a_{2i}}` (`i <= n`) exactly once, and `H = F \ G`. The
//!   involution adds or removes the first pair met zero or two times.
//! * `d = 3`: `G` holds the members of `F` whose prefix counts
//!   `c_i = #(A & {a_1, ..., a_{2i+1}})` avoid `{i-1, i+2}` for
//!   `1 <= i <= n-1`. The involution flips `a_1` and every unbalanced pair
//!   `{a_{2j}, a_{2j+1}}` up to the first bad index, which moves `#A` by 3.

use std::collections::{BTreeMap, HashSet};

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{filter_difference, Integer};
use crate::qpoly::QPoly;

/// Largest ground set that is enumerated exhaustively.
pub const ENUMERATION_BOUND: usize = 22;

/// Arrangement of the ground set's weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Layout {
    /// Unweighted: every element has weight 0.
    Plain,
    /// `a_{2i-1} = -(2i-1)/2`, `a_{2i} = (2i-1)/2`, `a_{2n+j} = (2n+2j-1)/2`.
    HalfMod2,
    /// `a_{2i-1} = -i`, `a_{2i} = i`, `a_{2n+1} = 0`, `a_{2n+j} = n+j-1`.
    IntMod2,
    /// `a_1 = 0`, `a_{2i} = -i`, `a_{2i+1} = i`, `a_{2n+j} = n+j` for `j = 0..m`.
    Mod3,
}

impl Layout {
    pub fn name(self) -> &'static str {
        match self {
            Layout::Plain => "plain",
            Layout::HalfMod2 => "half-mod2",
            Layout::IntMod2 => "int-mod2",
            Layout::Mod3 => "mod3",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroundSet {
    layout: Layout,
    n: usize,
    m: usize,
    weights: Vec<i64>,
}

impl GroundSet {
    pub fn new(layout: Layout, n: usize, m: usize) -> Result<Self> {
        let bad = |reason: &str| Error::Layout {
            layout: layout.name(),
            reason: reason.to_string(),
        };
        let (ni, mi) = (n as i64, m as i64);
        let weights: Vec<i64> = match layout {
            Layout::Plain => vec![0; 2 * n + m],
            Layout::HalfMod2 => (1..=ni)
                .flat_map(|i| [-(2 * i - 1), 2 * i - 1])
                .chain((1..=mi).map(|j| 2 * ni + 2 * j - 1))
                .collect(),
            Layout::IntMod2 => {
                if m < 1 {
                    return Err(bad("needs m >= 1 for its zero-weight element"));
                }
                (1..=ni)
                    .flat_map(|i| [-2 * i, 2 * i])
                    .chain(std::iter::once(0))
                    .chain((2..=mi).map(|j| 2 * (ni + j - 1)))
                    .collect()
            }
            Layout::Mod3 => {
                if n < 1 {
                    return Err(bad("needs n >= 1"));
                }
                std::iter::once(0)
                    .chain((1..ni).flat_map(|i| [-2 * i, 2 * i]))
                    .chain((0..=mi).map(|j| 2 * (ni + j)))
                    .collect()
            }
        };
        debug_assert_eq!(weights.len(), 2 * n + m);
        Ok(Self {
            layout,
            n,
            m,
            weights,
        })
    }

    pub fn layout(&self) -> Layout {
        self.layout
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Element weights in half-units, `a_1` first.
    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// `|A|`, the sum of weights, in half-units.
    pub fn weight(&self, a: Subset) -> i64 {
        a.indices().map(|i| self.weights[i]).sum()
    }

    fn check_bound(&self) -> Result<()> {
        if self.len() > ENUMERATION_BOUND {
            return Err(Error::EnumerationBound {
                size: self.len(),
                bound: ENUMERATION_BOUND,
            });
        }
        Ok(())
    }
}

/// Subset of a ground set as a bitmask; bit `i` is element `a_{i+1}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(pub u32);

impl Subset {
    /// Builds a subset from 1-based element indices.
    pub fn from_elements(elements: &[usize]) -> Self {
        Subset(elements.iter().fold(0, |acc, &e| acc | 1 << (e - 1)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Whether `a_index` (1-based) belongs to the subset.
    pub fn contains(self, index: usize) -> bool {
        self.0 >> (index - 1) & 1 == 1
    }

    /// 0-based bit positions.
    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |i| self.0 >> i & 1 == 1)
    }

    /// Number of elements among `a_1 .. a_len`.
    fn prefix_count(self, len: usize) -> usize {
        (self.0 & low_mask(len)).count_ones() as usize
    }
}

fn low_mask(len: usize) -> u32 {
    if len >= 32 {
        u32::MAX
    } else {
        (1u32 << len) - 1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Modulus {
    Two,
    Three,
}

impl Modulus {
    pub fn value(self) -> usize {
        match self {
            Modulus::Two => 2,
            Modulus::Three => 3,
        }
    }
}

/// How the mod-3 structure predicate counts elements at index `i`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum PredicateReading {
    /// `#(A & {a_1, ..., a_{2i+1}})`.
    #[default]
    Prefix,
    /// `#(A & {a_1, a_{2i+1}})`, kept for comparison only.
    Pair,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    modulus: Modulus,
    ground: GroundSet,
    reading: PredicateReading,
}

/// Membership flags for the structured families.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GFlags {
    pub in_g: bool,
    pub in_g1: bool,
    pub in_g2: bool,
}

impl FamilySpec {
    pub fn new(modulus: Modulus, ground: GroundSet) -> Result<Self> {
        let ok = matches!(
            (modulus, ground.layout),
            (_, Layout::Plain)
                | (Modulus::Two, Layout::HalfMod2 | Layout::IntMod2)
                | (Modulus::Three, Layout::Mod3)
        );
        if !ok {
            return Err(Error::Layout {
                layout: ground.layout.name(),
                reason: format!("does not carry a mod-{} structure", modulus.value()),
            });
        }
        if modulus == Modulus::Three && ground.n < 1 {
            return Err(Error::Layout {
                layout: ground.layout.name(),
                reason: "needs n >= 1 for the mod-3 structure".into(),
            });
        }
        Ok(Self {
            modulus,
            ground,
            reading: PredicateReading::Prefix,
        })
    }

    pub fn with_reading(mut self, reading: PredicateReading) -> Self {
        self.reading = reading;
        self
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn in_f(&self, a: Subset) -> bool {
        let d = self.modulus.value() as i64;
        (a.len() as i64 - self.ground.n as i64).rem_euclid(d) == 0
    }

    /// `(-1)^{(#A - n)/d}` for members of `F`.
    pub fn sign(&self, a: Subset) -> Option<i32> {
        if !self.in_f(a) {
            return None;
        }
        let d = self.modulus.value() as i64;
        let k = (a.len() as i64 - self.ground.n as i64).div_euclid(d);
        Some(if k.rem_euclid(2) == 0 { 1 } else { -1 })
    }

    /// Number of elements of `A` in the pair `{a_{2i-1}, a_{2i}}`.
    fn pair_hits_mod2(a: Subset, i: usize) -> usize {
        ((a.0 >> (2 * i - 2)) & 0b11).count_ones() as usize
    }

    /// Count compared against `{i-1, i+2}` at index `i` of the mod-3 structure.
    fn mod3_count(&self, a: Subset, i: usize) -> usize {
        match self.reading {
            PredicateReading::Prefix => a.prefix_count(2 * i + 1),
            PredicateReading::Pair => {
                usize::from(a.contains(1)) + usize::from(a.contains(2 * i + 1))
            }
        }
    }

    /// First index breaking the structure predicate, if any.
    fn first_bad_index(&self, a: Subset) -> Option<usize> {
        let n = self.ground.n;
        match self.modulus {
            Modulus::Two => (1..=n).find(|&i| Self::pair_hits_mod2(a, i) != 1),
            Modulus::Three => (1..n).find(|&i| {
                let c = self.mod3_count(a, i);
                c + 1 == i || c == i + 2
            }),
        }
    }

    pub fn in_g(&self, a: Subset) -> bool {
        self.in_f(a) && self.first_bad_index(a).is_none()
    }

    /// Domain of the involution: `H` for `d = 2`, `F \ G` for `d = 3`.
    pub fn in_involution_domain(&self, a: Subset) -> bool {
        self.in_f(a) && self.first_bad_index(a).is_some()
    }

    /// `A_1 = A & {a_1, ..., a_{2n-1}}` as a mask.
    fn trace_a1(&self, a: Subset) -> Subset {
        Subset(a.0 & low_mask(2 * self.ground.n - 1))
    }

    /// `#A_2` with `A_2 = A & {a_{2n}, ..., a_{2n+m}}`.
    fn a2_len(&self, a: Subset) -> usize {
        a.len() - self.trace_a1(a).len()
    }

    /// `#A'` with `A' = A & {a_{2n+1}, ..., a_{2n+m}}`.
    fn tail_len(&self, a: Subset) -> usize {
        a.len() - a.prefix_count(2 * self.ground.n)
    }

    pub fn g_membership(&self, a: Subset) -> GFlags {
        let in_g = self.in_g(a);
        if self.modulus == Modulus::Two || !in_g {
            return GFlags {
                in_g,
                ..GFlags::default()
            };
        }
        let a1 = self.trace_a1(a).len();
        GFlags {
            in_g,
            in_g1: a1 == self.ground.n,
            in_g2: a1 + 1 == self.ground.n,
        }
    }
}

/// Pair-toggling involution on `H`.
pub fn inv_mod2(a: Subset, spec: &FamilySpec) -> Result<Subset> {
    if spec.modulus != Modulus::Two || !spec.in_f(a) {
        return Err(Error::NotInDomain(a.0));
    }
    let i = spec.first_bad_index(a).ok_or(Error::NotInDomain(a.0))?;
    let pair = 0b11u32 << (2 * i - 2);
    Ok(if a.0 & pair == 0 {
        Subset(a.0 | pair)
    } else {
        Subset(a.0 & !pair)
    })
}

/// Mod-3 involution on `F \ G`: flips `a_1` and each pair
/// `{a_{2j}, a_{2j+1}}` (`j <= i_A`) that `A` meets zero or two times.
pub fn inv_mod3(a: Subset, spec: &FamilySpec) -> Result<Subset> {
    if spec.modulus != Modulus::Three || !spec.in_f(a) {
        return Err(Error::NotInDomain(a.0));
    }
    let i_a = spec.first_bad_index(a).ok_or(Error::NotInDomain(a.0))?;
    let mut out = a.0 ^ 1;
    for j in 1..=i_a {
        let pair = 0b11u32 << (2 * j - 1);
        match a.0 & pair {
            0 => out |= pair,
            p if p == pair => out &= !pair,
            _ => {}
        }
    }
    Ok(Subset(out))
}

/// The involution matching the spec's modulus.
pub fn involution(a: Subset, spec: &FamilySpec) -> Result<Subset> {
    match spec.modulus {
        Modulus::Two => inv_mod2(a, spec),
        Modulus::Three => inv_mod3(a, spec),
    }
}

/// Sums `sign(A) q^{|A|}` over every subset for which `select` returns a
/// sign. Enumeration is split across threads by the high bits of the mask;
/// integer accumulation keeps the result independent of the split.
fn signed_weight_sum<F>(ground: &GroundSet, select: F) -> Result<QPoly>
where
    F: Fn(Subset) -> Option<i32> + Sync,
{
    ground.check_bound()?;
    let len = ground.len();
    let high_bits = len.saturating_sub(10);
    let low_bits = len - high_bits;
    let low_weight: Vec<i64> = (0u32..1 << low_bits)
        .map(|s| ground.weight(Subset(s)))
        .collect();
    let totals = (0u32..1 << high_bits)
        .into_par_iter()
        .map(|high| {
            let base = high << low_bits;
            let high_weight = ground.weight(Subset(base));
            let mut acc: BTreeMap<i64, i64> = BTreeMap::new();
            for (low, w) in low_weight.iter().enumerate() {
                let a = Subset(base | low as u32);
                if let Some(sign) = select(a) {
                    *acc.entry(high_weight + w).or_default() += i64::from(sign);
                }
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (e, c) in b {
                *a.entry(e).or_default() += c;
            }
            a
        });
    Ok(QPoly::from_terms(totals))
}

/// `sum_{A in F} sign(A) q^{|A|}`; a constant for the plain layout.
pub fn family_signed_sum(spec: &FamilySpec) -> Result<QPoly> {
    signed_weight_sum(&spec.ground, |a| spec.sign(a))
}

/// Signed weight sum over `G` alone.
pub fn g_signed_sum(spec: &FamilySpec) -> Result<QPoly> {
    signed_weight_sum(&spec.ground, |a| {
        spec.in_g(a).then(|| spec.sign(a)).flatten()
    })
}

/// Signed weight sum over the involution's domain; zero when the
/// involution cancels in pairs.
pub fn domain_signed_sum(spec: &FamilySpec) -> Result<QPoly> {
    signed_weight_sum(&spec.ground, |a| {
        spec.in_involution_domain(a).then(|| spec.sign(a)).flatten()
    })
}

/// One class of the split of `G`, with its sign in the recombination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassSum {
    pub label: &'static str,
    pub sign: i32,
    pub sum: QPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassSums {
    pub classes: Vec<ClassSum>,
}

impl ClassSums {
    pub fn combination(&self) -> QPoly {
        self.classes
            .iter()
            .map(|c| if c.sign > 0 { c.sum.clone() } else { -&c.sum })
            .sum()
    }
}

/// Unsigned weight sums of the classes of `G`.
///
/// For `d = 2` the classes are `#A' = 0` and `#A' = 2 (mod 4)`; for `d = 3`
/// they are `(G_1, #A_2 = 0)`, `(G_1, #A_2 = 3)`, `(G_2, #A_2 = 1)` and
/// `(G_2, #A_2 = 4)` modulo 6. The signed combination equals
/// [`family_signed_sum`].
pub fn g_split_signed_sum(spec: &FamilySpec) -> Result<ClassSums> {
    let class_of = |a: Subset| -> Option<usize> {
        let flags = spec.g_membership(a);
        if !flags.in_g {
            return None;
        }
        match spec.modulus {
            Modulus::Two => match spec.tail_len(a) % 4 {
                0 => Some(0),
                2 => Some(1),
                _ => None,
            },
            Modulus::Three => match (flags.in_g1, flags.in_g2, spec.a2_len(a) % 6) {
                (true, _, 0) => Some(0),
                (true, _, 3) => Some(1),
                (_, true, 1) => Some(2),
                (_, true, 4) => Some(3),
                _ => None,
            },
        }
    };
    let layout: &[(&'static str, i32)] = match spec.modulus {
        Modulus::Two => &[("tail=0 mod 4", 1), ("tail=2 mod 4", -1)],
        Modulus::Three => &[
            ("G1, A2=0 mod 6", 1),
            ("G1, A2=3 mod 6", -1),
            ("G2, A2=1 mod 6", 1),
            ("G2, A2=4 mod 6", -1),
        ],
    };
    let classes = layout
        .iter()
        .enumerate()
        .map(|(idx, &(label, sign))| {
            let sum = signed_weight_sum(&spec.ground, |a| (class_of(a) == Some(idx)).then_some(1))?;
            Ok(ClassSum { label, sign, sum })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ClassSums { classes })
}

/// Cardinalities behind `#G_1 = #G_2 = 3^{n-1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GCounts {
    /// Distinct traces `A_1` of members of `G_1`.
    pub g1_traces: Integer,
    /// Distinct traces `A_1` of members of `G_2`.
    pub g2_traces: Integer,
    pub g1_members: Integer,
    pub g2_members: Integer,
}

/// Enumerates `G` for the plain mod-3 family and counts members and traces.
pub fn g_counts(n: usize, m: usize) -> Result<GCounts> {
    let spec = FamilySpec::new(Modulus::Three, GroundSet::new(Layout::Plain, n, m)?)?;
    spec.ground.check_bound()?;
    let (mut t1, mut t2) = (HashSet::new(), HashSet::new());
    let (mut g1, mut g2) = (0u64, 0u64);
    for mask in 0u32..1 << spec.ground.len() {
        let a = Subset(mask);
        let flags = spec.g_membership(a);
        if flags.in_g1 {
            g1 += 1;
            t1.insert(spec.trace_a1(a));
        }
        if flags.in_g2 {
            g2 += 1;
            t2.insert(spec.trace_a1(a));
        }
    }
    Ok(GCounts {
        g1_traces: t1.len().into(),
        g2_traces: t2.len().into(),
        g1_members: g1.into(),
        g2_members: g2.into(),
    })
}

/// Members of `G` whose prefix counts leave `{i, i+1}` for some
/// `1 <= i <= n-1`.
pub fn claim_violations(spec: &FamilySpec) -> Result<usize> {
    if spec.modulus != Modulus::Three {
        return Ok(0);
    }
    spec.ground.check_bound()?;
    let n = spec.ground.n;
    Ok((0u32..1 << spec.ground.len())
        .into_par_iter()
        .map(Subset)
        .filter(|&a| spec.in_g(a))
        .filter(|&a| {
            (1..n).any(|i| !matches!(a.prefix_count(2 * i + 1), c if c == i || c == i + 1))
        })
        .count())
}

/// Tally of involution-law violations over the whole domain.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InvolutionAudit {
    pub domain_size: usize,
    pub leaves_domain: usize,
    pub not_involutive: usize,
    pub sign_kept: usize,
    pub weight_changed: usize,
    pub fixed_points: usize,
    /// Mod-3 only: `#inv(A) - #A` outside `{-3, 3}`.
    pub size_step: usize,
    pub cancel_sum: QPoly,
}

impl InvolutionAudit {
    pub fn is_clean(&self) -> bool {
        self.leaves_domain == 0
            && self.not_involutive == 0
            && self.sign_kept == 0
            && self.weight_changed == 0
            && self.fixed_points == 0
            && self.size_step == 0
            && self.cancel_sum.is_zero()
    }

    fn merge(mut self, other: Self) -> Self {
        self.domain_size += other.domain_size;
        self.leaves_domain += other.leaves_domain;
        self.not_involutive += other.not_involutive;
        self.sign_kept += other.sign_kept;
        self.weight_changed += other.weight_changed;
        self.fixed_points += other.fixed_points;
        self.size_step += other.size_step;
        self.cancel_sum += &other.cancel_sum;
        self
    }
}

/// Checks every involution law on the whole domain. Weight preservation is
/// only meaningful for weighted layouts but is checked for all (the plain
/// layout passes trivially).
pub fn audit_involution(spec: &FamilySpec) -> Result<InvolutionAudit> {
    spec.ground.check_bound()?;
    let mut audit = (0u32..1 << spec.ground.len())
        .into_par_iter()
        .map(Subset)
        .filter(|&a| spec.in_involution_domain(a))
        .fold(InvolutionAudit::default, |mut acc, a| {
            acc.domain_size += 1;
            let b = involution(a, spec).expect("domain member");
            acc.leaves_domain += usize::from(!spec.in_involution_domain(b));
            acc.fixed_points += usize::from(a == b);
            acc.not_involutive += usize::from(involution(b, spec).ok() != Some(a));
            acc.sign_kept += usize::from(spec.sign(b) != spec.sign(a).map(|s| -s));
            acc.weight_changed += usize::from(spec.ground.weight(a) != spec.ground.weight(b));
            if spec.modulus == Modulus::Three {
                acc.size_step += usize::from(a.len().abs_diff(b.len()) != 3);
            }
            acc
        })
        .reduce(InvolutionAudit::default, InvolutionAudit::merge);
    audit.cancel_sum = domain_signed_sum(spec)?;
    Ok(audit)
}

/// `2^n (sum_l C(m, 4l) - sum_l C(m, 4l+2))`, the plain mod-2 count.
pub fn split_sgn_closed_form(n: u32, m: u32) -> Result<Integer> {
    Ok(Integer::from(2).pow(n) * filter_difference(m, 4, 0, 2)?)
}

/// `3^{n-1} (sum C(top, 6l) - sum C(top, 6l+3) + sum C(top, 6l+1) - sum C(top, 6l+4))`.
///
/// `A_2` has `m + 1` elements, so `top = m + 1` is the count of the plain
/// mod-3 family; `top = m` is kept to compare against.
pub fn subsplit_closed_form(n: u32, top: u32) -> Result<Integer> {
    if n < 1 {
        return Ok(Integer::zero());
    }
    let d = filter_difference(top, 6, 0, 3)? + filter_difference(top, 6, 1, 4)?;
    Ok(Integer::from(3).pow(n - 1) * d)
}
