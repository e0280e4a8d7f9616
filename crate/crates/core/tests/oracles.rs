//! Brute-force oracles, written without the library's algorithms, and
//! frozen values computed independently of this crate.

use std::collections::BTreeMap;

use proptest::prelude::*;
use qident::identities::{lhs_t1, lhs_t2, lhs_t3, lhs_t4, lhs_t5, rhs_t2, rhs_t3, rhs_t5_oracle};
use qident::qseries::qbinom;
use qident::{Integer, QPoly, Rational};

/// `[n, k]` by summing `q^{|A| - k(k+1)/2}` over k-subsets of `{1..n}`.
fn brute_qbinom(n: u32, k: u32) -> BTreeMap<i64, i64> {
    let mut out = BTreeMap::new();
    for mask in 0u32..1 << n {
        if mask.count_ones() != k {
            continue;
        }
        let weight: i64 = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| i64::from(i) + 1)
            .sum();
        *out.entry(weight - i64::from(k * (k + 1) / 2)).or_insert(0) += 1;
    }
    out.retain(|_, c| *c != 0);
    out
}

fn brute_binomial(n: u64, k: u64) -> i128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

fn as_map(p: &QPoly) -> BTreeMap<i64, i64> {
    p.terms()
        .map(|(e, c)| {
            assert_eq!(e % 2, 0, "integral exponent expected");
            (e / 2, i64::try_from(c.clone()).unwrap())
        })
        .collect()
}

fn poly(terms: &[(i64, i64)]) -> QPoly {
    QPoly::from_terms(terms.iter().map(|&(e, c)| (2 * e, c)))
}

#[test]
fn qbinom_matches_subset_enumeration() {
    for n in 0..=12u32 {
        for k in 0..=n {
            assert_eq!(
                as_map(&qbinom(n.into(), k.into())),
                brute_qbinom(n, k),
                "[{n}, {k}]"
            );
        }
    }
}

#[test]
fn binomial_sums_match_direct_evaluation() {
    for n in 0..=8i64 {
        for m in -2 * n..=12 {
            let top = (2 * n + m) as u64;
            let mut s2 = 0i128;
            let mut s3 = 0i128;
            for j in 0..=top as i64 {
                let c = brute_binomial(top, j as u64);
                if (j - n).rem_euclid(2) == 0 {
                    s2 += c * if ((j - n) / 2).rem_euclid(2) == 0 {
                        1
                    } else {
                        -1
                    };
                }
                if (j - n).rem_euclid(3) == 0 {
                    s3 += c * if ((j - n) / 3).rem_euclid(2) == 0 {
                        1
                    } else {
                        -1
                    };
                }
            }
            let r = |v: i128| Rational::from_integer(Integer::from(v));
            assert_eq!(lhs_t1(n, m).unwrap(), r(s2), "T1 ({n}, {m})");
            assert_eq!(lhs_t4(n, m).unwrap(), r(s3), "T4 ({n}, {m})");
        }
    }
}

#[test]
fn frozen_q_sums() {
    let t2 = poly(&[
        (0, 1),
        (1, 1),
        (3, 1),
        (4, 1),
        (6, -1),
        (7, -2),
        (8, -2),
        (9, -2),
        (10, -2),
        (11, -2),
        (12, -1),
    ]);
    assert_eq!(lhs_t2(2, 3).unwrap(), t2);
    assert_eq!(rhs_t2(2, 3).unwrap(), t2);

    let t3 = poly(&[
        (0, 1),
        (2, 1),
        (3, -1),
        (5, -1),
        (7, -2),
        (8, -1),
        (9, -2),
        (10, -1),
        (11, -1),
        (13, -1),
    ]);
    assert_eq!(lhs_t3(2, 3).unwrap(), t3);
    assert_eq!(rhs_t3(2, 3).unwrap(), t3);

    let t5 = poly(&[
        (0, 1),
        (1, 1),
        (2, 2),
        (3, 2),
        (4, 3),
        (5, 2),
        (6, 1),
        (9, -1),
        (10, -1),
        (11, -1),
    ]);
    assert_eq!(lhs_t5(2, 2).unwrap(), t5);
    assert_eq!(rhs_t5_oracle(2, 2).unwrap(), t5);

    let t5 = poly(&[
        (0, 1),
        (1, 1),
        (2, 2),
        (3, 2),
        (4, 4),
        (5, 4),
        (6, 4),
        (7, 3),
        (8, 3),
        (9, 2),
        (10, 1),
    ]);
    assert_eq!(lhs_t5(3, 1).unwrap(), t5);
    assert_eq!(rhs_t5_oracle(3, 1).unwrap(), t5);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn q_sums_degenerate_to_binomial_sums(n in 0i64..6, m in 0i64..8) {
        let one = |p: QPoly| Rational::from_integer(p.eval_at_one());
        prop_assert_eq!(one(lhs_t2(n, m).unwrap()), lhs_t1(n, m).unwrap());
        prop_assert_eq!(one(lhs_t3(n, m).unwrap()), lhs_t1(n, m).unwrap());
        prop_assert_eq!(one(lhs_t5(n, m).unwrap()), lhs_t4(n, m).unwrap());
    }

    #[test]
    fn mod2_q_sums_agree_with_their_products(n in 1i64..5, m in 1i64..9) {
        prop_assert_eq!(lhs_t2(n, m).unwrap(), rhs_t2(n, m).unwrap());
        prop_assert_eq!(lhs_t3(n, m).unwrap(), rhs_t3(n, m).unwrap());
    }

    #[test]
    fn qbinom_is_palindromic(n in 0i64..16, k in 0i64..16) {
        let p = qbinom(n, k);
        if let Some((lo, hi)) = p.support() {
            let flipped = QPoly::from_terms(p.terms().map(|(e, c)| (lo + hi - e, c.clone())));
            prop_assert_eq!(flipped, p);
        } else {
            prop_assert!(k > n);
        }
    }
}
