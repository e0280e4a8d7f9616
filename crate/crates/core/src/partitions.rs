//! Partitions into a fixed number of distinct parts drawn from a bounded
//! range, their generating polynomials, and the `A_{n,m,k,r}(q)` builder.
//!
//! Part ranges are unit-step ladders `lo, lo + 1, ..., <= hi` whose
//! endpoints may be half-integers. The integer interval `[a, b]` is the
//! usual case; the ladder `(2n+1)/2, (2n+3)/2, ...` is what the weighted
//! ground set with half-integer elements produces.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::Integer;
use crate::qpoly::QPoly;

/// `p_d(total, [lo, hi], parts)` over an integer interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PartitionQuery {
    pub total: i64,
    pub lo: i64,
    pub hi: i64,
    pub parts: i64,
}

impl PartitionQuery {
    pub fn new(total: i64, lo: i64, hi: i64, parts: i64) -> Self {
        Self {
            total,
            lo,
            hi,
            parts,
        }
    }

    /// True when the count is zero for size reasons alone.
    fn trivially_empty(&self) -> bool {
        let PartitionQuery {
            total,
            lo,
            hi,
            parts: m,
        } = *self;
        if total < 0 || m < 0 {
            return true;
        }
        if m == 0 {
            return total != 0;
        }
        hi < lo
            || hi - lo + 1 < m
            || m * lo + m * (m - 1) / 2 > total
            || m * hi - m * (m - 1) / 2 < total
    }
}

/// Number of sets of `parts` distinct integers in `[lo, hi]` summing to
/// `total`. The empty partition counts once: `p_d(0, [a, b], 0) = 1`.
pub fn count_pd(q: &PartitionQuery) -> Result<Integer> {
    if q.lo < 1 {
        return Err(Error::NonPositivePart(2 * q.lo));
    }
    if q.trivially_empty() {
        return Ok(Integer::zero());
    }
    let (total, parts) = (q.total as usize, q.parts as usize);
    // ways[c][s]: c parts used, summing to s
    let mut ways = vec![vec![Integer::zero(); total + 1]; parts + 1];
    ways[0][0] = Integer::one();
    for p in q.lo..=q.hi.min(q.total) {
        let p = p as usize;
        for c in (1..=parts).rev() {
            let (below, here) = ways.split_at_mut(c);
            for s in (p..=total).rev() {
                if !below[c - 1][s - p].is_zero() {
                    let add = below[c - 1][s - p].clone();
                    here[0][s] += add;
                }
            }
        }
    }
    Ok(std::mem::take(&mut ways[parts][total]))
}

/// Independent brute-force count over subsets of `[lo, hi]`.
pub fn pd_enumeration_oracle(q: &PartitionQuery) -> Result<Integer> {
    if q.lo < 1 {
        return Err(Error::NonPositivePart(2 * q.lo));
    }
    if q.hi > 16 || q.parts > 8 {
        return Err(Error::OracleRange {
            hi: q.hi,
            parts: q.parts,
        });
    }
    if q.parts < 0 || q.total < 0 {
        return Ok(Integer::zero());
    }
    let width = (q.hi - q.lo + 1).max(0) as u32;
    let hits = (0u32..1 << width)
        .filter(|mask| mask.count_ones() as i64 == q.parts)
        .filter(|mask| {
            let sum: i64 = (0..width)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| q.lo + i64::from(i))
                .sum();
            sum == q.total
        })
        .count();
    Ok(Integer::from(hits))
}

/// Unit-step ladder of part sizes `lo/2, lo/2 + 1, ...` up to `hi/2`, with
/// endpoints in half-units.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PartRange {
    lo_half: i64,
    hi_half: i64,
}

impl PartRange {
    pub fn from_halves(lo_half: i64, hi_half: i64) -> Result<Self> {
        if lo_half < 1 {
            return Err(Error::NonPositivePart(lo_half));
        }
        Ok(Self { lo_half, hi_half })
    }

    /// The integer interval `[a, b]`.
    pub fn integers(a: i64, b: i64) -> Result<Self> {
        Self::from_halves(2 * a, 2 * b)
    }

    /// Part sizes in half-units.
    pub fn parts_half(&self) -> impl Iterator<Item = i64> {
        let hi = self.hi_half;
        (self.lo_half..=hi).step_by(2)
    }

    pub fn len(&self) -> usize {
        if self.hi_half < self.lo_half {
            0
        } else {
            ((self.hi_half - self.lo_half) / 2 + 1) as usize
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// All `z`-slices of `prod_{x in range} (1 + z q^x)` at once, so a grid
/// evaluation can reuse one range for every part count.
#[derive(Clone, Debug)]
pub struct PdTable {
    slices: Vec<QPoly>,
}

impl PdTable {
    pub fn new(range: PartRange) -> Self {
        let top = range.len();
        // dense[c][h] counts c-part sets of half-unit weight h
        let max_half: usize = range.parts_half().map(|p| p as usize).sum();
        let mut dense = vec![vec![Integer::zero(); max_half + 1]; top + 1];
        dense[0][0] = Integer::one();
        for (seen, p) in range.parts_half().enumerate() {
            let p = p as usize;
            for c in (1..=seen + 1).rev() {
                let (below, here) = dense.split_at_mut(c);
                for h in (p..=max_half).rev() {
                    if !below[c - 1][h - p].is_zero() {
                        let add = below[c - 1][h - p].clone();
                        here[0][h] += add;
                    }
                }
            }
        }
        let slices = dense
            .into_iter()
            .map(|row| QPoly::from_terms(row.into_iter().enumerate().map(|(h, c)| (h as i64, c))))
            .collect();
        Self { slices }
    }

    /// Generating polynomial of partitions into exactly `parts` parts; zero
    /// for negative or oversized part counts.
    pub fn slice(&self, parts: i64) -> QPoly {
        usize::try_from(parts)
            .ok()
            .and_then(|c| self.slices.get(c))
            .cloned()
            .unwrap_or_default()
    }

    /// `sum_{lo <= j <= hi} p(j) q^j` for the slice with `parts` parts; `j`
    /// runs over integers in the closed real interval `[lo_half/2, hi_half/2]`.
    pub fn block(&self, parts: i64, lo_half: i64, hi_half: i64) -> QPoly {
        let kept = self.slice(parts).restrict(lo_half, hi_half);
        QPoly::from_terms(
            kept.terms()
                .filter(|(e, _)| e % 2 == 0)
                .map(|(e, c)| (e, c.clone())),
        )
    }
}

/// `sum_N p_d(N, [a, b], parts) q^N`.
pub fn gf_pd(a: i64, b: i64, parts: i64) -> Result<QPoly> {
    gf_pd_range(PartRange::integers(a, b)?, parts)
}

/// Generating polynomial over an arbitrary ladder; exponents in half-units
/// follow the part sizes.
pub fn gf_pd_range(range: PartRange, parts: i64) -> Result<QPoly> {
    Ok(PdTable::new(range).slice(parts))
}

/// Parameters `(n, m, k, r)` of `A_{n,m,k,r}(q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct APolyParams {
    pub n: i64,
    pub m: i64,
    pub k: i64,
    pub r: i64,
}

impl APolyParams {
    pub fn new(n: i64, m: i64, k: i64, r: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::APolyParams(format!("n must be positive, got {n}")));
        }
        if m < 0 || r < 0 {
            return Err(Error::APolyParams(format!(
                "m and r must be nonnegative, got m = {m}, r = {r}"
            )));
        }
        if k < 1 {
            return Err(Error::APolyParams(format!("k must be positive, got {k}")));
        }
        Ok(Self { n, m, k, r })
    }
}

/// Literal evaluation of the two double sums defining `A_{n,m,k,r}(q)`
/// with `a_{j,l} = p_d(j, [n, n+m], l)`.
///
/// The `l`-ranges end at `floor((m+1-r)/k)` and `floor((m+2-r)/k)`; a
/// negative floor leaves the range empty. The `j`-ranges have half-integer
/// endpoints and run over the integers inside them.
pub fn build_a(p: &APolyParams) -> QPoly {
    let table = PdTable::new(PartRange::integers(p.n, p.n + p.m).expect("n >= 1"));
    build_a_with(p, &table)
}

pub(crate) fn build_a_with(p: &APolyParams, table: &PdTable) -> QPoly {
    let APolyParams { n, m, k, r } = *p;
    let mut acc = QPoly::zero();
    // (parts offset, spread offset, l upper bound numerator)
    for (offset, spread, top) in [(0, -1, m + 1 - r), (-1, -2, m + 2 - r)] {
        if top < 0 {
            continue;
        }
        for l in 0..=top / k {
            let parts = k * l + r + offset;
            if parts < 0 {
                continue;
            }
            // j from parts * (n + s/2) to parts * (n + m - s/2), s = kl + r + spread
            let s = k * l + r + spread;
            let lo_half = parts * (2 * n + s);
            let hi_half = parts * (2 * n + 2 * m - s);
            acc += &table.block(parts, lo_half, hi_half);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pd(total: i64, lo: i64, hi: i64, parts: i64) -> Integer {
        count_pd(&PartitionQuery::new(total, lo, hi, parts)).unwrap()
    }

    fn poly(terms: &[(i64, i64)]) -> QPoly {
        QPoly::from_terms(terms.iter().map(|&(e, c)| (2 * e, c)))
    }

    #[test]
    fn count_examples() {
        assert_eq!(pd(0, 5, 3, 0), 1.into());
        assert_eq!(pd(7, 2, 5, 2), 2.into());
        assert_eq!(pd(3, 1, 2, 2), 1.into());
        assert_eq!(pd(-5, 1, 9, 2), 0.into());
        assert_eq!(pd(4, 1, 9, -1), 0.into());
    }

    #[test]
    fn count_rejects_nonpositive_parts() {
        assert_eq!(
            count_pd(&PartitionQuery::new(3, 0, 4, 2)),
            Err(Error::NonPositivePart(0))
        );
    }

    #[test]
    fn oracle_examples() {
        let o = |t, a, b, m| pd_enumeration_oracle(&PartitionQuery::new(t, a, b, m)).unwrap();
        assert_eq!(o(7, 2, 5, 2), 2.into());
        assert_eq!(o(0, 1, 5, 0), 1.into());
        assert_eq!(o(100, 1, 5, 2), 0.into());
        assert!(pd_enumeration_oracle(&PartitionQuery::new(1, 1, 17, 1)).is_err());
        assert!(pd_enumeration_oracle(&PartitionQuery::new(1, 1, 10, 9)).is_err());
    }

    #[test]
    fn gf_examples() {
        assert_eq!(
            gf_pd(2, 5, 2).unwrap(),
            poly(&[(5, 1), (6, 1), (7, 2), (8, 1), (9, 1)])
        );
        assert_eq!(gf_pd(3, 9, 0).unwrap(), QPoly::one());
        assert_eq!(gf_pd(1, 2, 2).unwrap(), poly(&[(3, 1)]));
        assert!(gf_pd(4, 3, 1).unwrap().is_zero());
        assert!(gf_pd(1, 3, -1).unwrap().is_zero());
    }

    #[test]
    fn half_integer_ladder() {
        // parts {3/2, 5/2, 7/2}
        let r = PartRange::from_halves(3, 7).unwrap();
        assert_eq!(r.len(), 3);
        let two = gf_pd_range(r, 2).unwrap();
        assert_eq!(two, poly(&[(4, 1), (5, 1), (6, 1)]));
        let one = gf_pd_range(r, 1).unwrap();
        assert_eq!(one, QPoly::from_terms([(3, 1), (5, 1), (7, 1)]));
    }

    #[test]
    fn block_uses_integer_points_of_real_interval() {
        let table = PdTable::new(PartRange::integers(1, 4).unwrap());
        // one-part slice is q + q^2 + q^3 + q^4; j in [3/2, 7/2] keeps 2, 3
        assert_eq!(table.block(1, 3, 7), poly(&[(2, 1), (3, 1)]));
        assert!(table.block(1, 7, 3).is_zero());
    }

    fn a_poly(n: i64, m: i64, k: i64, r: i64) -> QPoly {
        build_a(&APolyParams::new(n, m, k, r).unwrap())
    }

    #[test]
    fn a_polynomial_examples() {
        assert_eq!(a_poly(1, 1, 6, 0), QPoly::one());
        assert_eq!(a_poly(1, 1, 6, 1), poly(&[(0, 1), (1, 1), (2, 1)]));
        assert_eq!(a_poly(1, 1, 6, 3), poly(&[(3, 1)]));
        for n in 1..4 {
            assert!(a_poly(n, 0, 6, 4).is_zero());
            assert!(a_poly(n, 1, 6, 4).is_zero());
        }
    }

    #[test]
    fn a_params_validation() {
        assert!(APolyParams::new(0, 1, 6, 0).is_err());
        assert!(APolyParams::new(1, 1, 0, 0).is_err());
        assert!(APolyParams::new(1, -1, 6, 0).is_err());
    }
}
