//! Shared workloads for the criterion benchmarks, sized so that each
//! iteration stays in the millisecond range.

use qident::combinat::{family_signed_sum, FamilySpec, GroundSet, Layout, Modulus};
use qident::identities::{find_case, run_grid, GridSpec, VerificationReport};
use qident::QPoly;

/// `(n, m)` points for the q-binomial sums.
pub const SUM_POINTS: [(i64, i64); 3] = [(2, 4), (4, 6), (6, 10)];

/// Ground-set sizes `(n, m)` for subset enumeration.
pub const ENUMERATION_SIZES: [(usize, usize); 3] = [(3, 4), (4, 6), (5, 8)];

/// Truncation orders for the limit comparisons.
pub const ORDERS: [usize; 3] = [10, 20, 40];

pub fn mod3_signed_sum(n: usize, m: usize) -> QPoly {
    let ground = GroundSet::new(Layout::Mod3, n, m).expect("valid layout");
    family_signed_sum(&FamilySpec::new(Modulus::Three, ground).expect("valid family"))
        .expect("within bound")
}

/// The asserted mod-2 q-analogue over a small grid.
pub fn t2_grid() -> VerificationReport {
    let grid = GridSpec {
        n: 1..=4,
        m: 0..=6,
        order: 0,
    };
    run_grid(&[find_case("T2").expect("registered")], &grid, false)
}
