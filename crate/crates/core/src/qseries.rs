//! q-Pochhammer symbols, Gaussian binomial coefficients and the weighted
//! prefactor products that appear when a ground set carries weights
//! symmetric about zero.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::Integer;
use crate::qpoly::{QPoly, TruncSeries};

/// Number of factors in a q-Pochhammer symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Length {
    Finite(u32),
    Infinite,
}

/// `(a; q^step)_length` with `a = sign * q^{base_half_exp/2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PochhammerSpec {
    /// `+1` or `-1`.
    pub sign: i8,
    pub base_half_exp: i64,
    pub step: u32,
    pub length: Length,
}

impl PochhammerSpec {
    /// `(sign * q^base; q^step)_n` with integer exponents.
    pub fn finite(sign: i8, base: i64, step: u32, n: u32) -> Self {
        Self {
            sign,
            base_half_exp: 2 * base,
            step,
            length: Length::Finite(n),
        }
    }

    /// `(sign * q^base; q^step)_infinity` with integer exponents.
    pub fn infinite(sign: i8, base: i64, step: u32) -> Self {
        Self {
            sign,
            base_half_exp: 2 * base,
            step,
            length: Length::Infinite,
        }
    }

    fn factor_half_exp(&self, i: u32) -> i64 {
        self.base_half_exp + 2 * i64::from(self.step) * i64::from(i)
    }
}

/// `(a; q^step)_n = prod_{i<n} (1 - a q^{step i})`.
pub fn pochhammer(spec: &PochhammerSpec) -> Result<QPoly> {
    let Length::Finite(n) = spec.length else {
        return Err(Error::InfiniteProduct);
    };
    Ok((0..n)
        .map(|i| QPoly::from_terms([(0, 1), (spec.factor_half_exp(i), -i64::from(spec.sign))]))
        .product())
}

/// Dense Pascal table column `[n, k]` for every row up to `n`, integer
/// exponents, optionally truncated at `order`.
fn pascal_row(n: u32, k: u32, order: Option<usize>) -> Vec<Vec<Integer>> {
    // row[j] holds [i, j] as dense coefficients
    let mut row: Vec<Vec<Integer>> = vec![Vec::new(); k as usize + 1];
    row[0] = vec![Integer::from(1)];
    for i in 1..=n {
        for j in (1..=k.min(i) as usize).rev() {
            // [i, j] = [i-1, j-1] + q^j [i-1, j]
            let shifted = &row[j];
            let mut len = row[j - 1].len().max(shifted.len() + j);
            if let Some(t) = order {
                len = len.min(t + 1);
            }
            let mut next = vec![Integer::zero(); len];
            for (slot, c) in next.iter_mut().zip(&row[j - 1]) {
                *slot += c;
            }
            for (e, c) in shifted.iter().enumerate() {
                if e + j < len {
                    next[e + j] += c;
                }
            }
            row[j] = next;
        }
    }
    row
}

/// Gaussian binomial `[n, m]`, zero outside `0 <= m <= n`.
///
/// Built from the Pascal recurrence `[n, m] = [n-1, m-1] + q^m [n-1, m]`.
pub fn qbinom(n: i64, m: i64) -> QPoly {
    if n < 0 || m < 0 || m > n {
        return QPoly::zero();
    }
    let k = m.min(n - m) as u32;
    let mut row = pascal_row(n as u32, k, None);
    QPoly::from_dense(0, row.swap_remove(k as usize))
}

/// `[n, m]` from the quotient `(q;q)_n / ((q;q)_m (q;q)_{n-m})`.
pub fn qbinom_quotient(n: i64, m: i64) -> Result<QPoly> {
    if n < 0 || m < 0 || m > n {
        return Ok(QPoly::zero());
    }
    let qq = |len: i64| pochhammer(&PochhammerSpec::finite(1, 1, 1, len as u32));
    qq(n)?.exact_div(&(&qq(m)? * &qq(n - m)?))
}

/// `[n, j]` for every `0 <= j <= n`, truncated at `order`.
pub fn qbinom_row_series(n: u32, order: usize) -> Vec<TruncSeries> {
    pascal_row(n, n, Some(order))
        .into_iter()
        .map(|dense| TruncSeries::from_coeffs(order, dense))
        .collect()
}

/// `sum_{A subset {1..n}, #A = k} q^{|A|}`, by a dynamic program over the
/// elements.
pub fn subset_weight_enumerator(n: u32, k: u32) -> QPoly {
    // by_size[c] = dense enumerator of c-subsets of the elements seen so far
    let mut by_size: Vec<Vec<Integer>> = vec![Vec::new(); k as usize + 1];
    by_size[0] = vec![Integer::from(1)];
    for element in 1..=n as usize {
        for c in (1..=k as usize).rev() {
            let (head, tail) = by_size.split_at_mut(c);
            let prev = &head[c - 1];
            let cur = &mut tail[0];
            if prev.is_empty() {
                continue;
            }
            if cur.len() < prev.len() + element {
                cur.resize(prev.len() + element, Integer::zero());
            }
            for (e, v) in prev.iter().enumerate() {
                cur[e + element] += v;
            }
        }
    }
    QPoly::from_dense(0, by_size.swap_remove(k as usize))
}

/// `prod_{i=1}^{n} (q^{-(2i-1)/2} + q^{(2i-1)/2})`.
pub fn prefactor_mod2_half(n: u32) -> QPoly {
    (1..=i64::from(n))
        .map(|i| QPoly::from_terms([(-(2 * i - 1), 1), (2 * i - 1, 1)]))
        .product()
}

/// `prod_{i=1}^{n} (q^{-i} + q^{i})`.
pub fn prefactor_mod2_int(n: u32) -> QPoly {
    (1..=i64::from(n))
        .map(|i| QPoly::from_terms([(-2 * i, 1), (2 * i, 1)]))
        .product()
}

/// `prod_{i=1}^{n-1} (q^{-i} + 1 + q^{i})`.
pub fn prefactor_mod3(n: u32) -> QPoly {
    (1..i64::from(n))
        .map(|i| QPoly::from_terms([(-2 * i, 1), (0, 1), (2 * i, 1)]))
        .product()
}

/// `(q^3;q^3)_{n-1} / (q;q)_{n-1}`, a polynomial.
pub fn cube_ratio(n: u32) -> Result<QPoly> {
    let len = n.saturating_sub(1);
    pochhammer(&PochhammerSpec::finite(1, 3, 3, len))?
        .exact_div(&pochhammer(&PochhammerSpec::finite(1, 1, 1, len))?)
}

/// The infinite (or finite) product truncated at `order`; every factor
/// whose lowest exponent is at most `order` is included.
pub fn trunc_pochhammer_inf(spec: &PochhammerSpec, order: usize) -> Result<TruncSeries> {
    if spec.base_half_exp <= 0 || spec.base_half_exp % 2 != 0 {
        return Err(Error::NonIntegralBase(spec.base_half_exp));
    }
    let limit = match spec.length {
        Length::Finite(n) => n,
        Length::Infinite => u32::MAX,
    };
    let mut acc = TruncSeries::one(order);
    for i in 0..limit {
        let e = spec.factor_half_exp(i) / 2;
        if e as usize > order {
            break;
        }
        let factor = TruncSeries::binomial_factor(order, Integer::from(-spec.sign), e as usize);
        acc = &acc * &factor;
    }
    Ok(acc)
}

pub fn trunc_inverse(s: &TruncSeries) -> Result<TruncSeries> {
    s.inverse()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::binomial;

    fn poly(terms: &[(i64, i64)]) -> QPoly {
        QPoly::from_terms(terms.iter().map(|&(e, c)| (2 * e, c)))
    }

    #[test]
    fn pochhammer_examples() {
        let p = pochhammer(&PochhammerSpec::finite(-1, 1, 2, 2)).unwrap();
        assert_eq!(p, poly(&[(0, 1), (1, 1), (3, 1), (4, 1)]));
        assert_eq!(
            pochhammer(&PochhammerSpec::finite(1, 1, 1, 0)).unwrap(),
            QPoly::one()
        );
        assert_eq!(
            pochhammer(&PochhammerSpec::finite(-1, 2, 2, 1)).unwrap(),
            poly(&[(0, 1), (2, 1)])
        );
        assert_eq!(
            pochhammer(&PochhammerSpec::infinite(1, 1, 1)),
            Err(Error::InfiniteProduct)
        );
    }

    #[test]
    fn qbinom_examples() {
        assert_eq!(qbinom(2, 1), poly(&[(0, 1), (1, 1)]));
        assert_eq!(
            qbinom(4, 2),
            poly(&[(0, 1), (1, 1), (2, 2), (3, 1), (4, 1)])
        );
        assert!(qbinom(3, 5).is_zero());
        assert!(qbinom(3, -1).is_zero());
        assert_eq!(qbinom(0, 0), QPoly::one());
    }

    #[test]
    fn qbinom_recurrence_matches_quotient() {
        for n in 0..=14 {
            for m in 0..=n {
                assert_eq!(qbinom(n, m), qbinom_quotient(n, m).unwrap(), "[{n} {m}]");
            }
        }
    }

    #[test]
    fn qbinom_shape() {
        for n in 0..=14i64 {
            for m in 0..=n {
                let b = qbinom(n, m);
                assert_eq!(b, qbinom(n, n - m));
                assert_eq!(b.support(), Some((0, 2 * m * (n - m))));
                assert_eq!(b.eval_at_one(), binomial(n, m).unwrap());
                let top = 2 * m * (n - m);
                for (e, c) in b.terms() {
                    assert!(c > &Integer::zero());
                    assert_eq!(c, &b.coefficient(top - e));
                }
            }
        }
    }

    #[test]
    fn both_pascal_rules() {
        for n in 1..=12i64 {
            for m in 0..=n {
                let first = &qbinom(n - 1, m - 1) + &qbinom(n - 1, m).shift(2 * m);
                let second = &qbinom(n - 1, m - 1).shift(2 * (n - m)) + &qbinom(n - 1, m);
                assert_eq!(qbinom(n, m), first);
                assert_eq!(qbinom(n, m), second);
            }
        }
    }

    #[test]
    fn truncated_row_matches_full_binomials() {
        let row = qbinom_row_series(9, 6);
        for (j, s) in row.iter().enumerate() {
            assert_eq!(s, &qbinom(9, j as i64).to_series(6).unwrap());
        }
    }

    fn brute_subset_enumerator(n: u32, k: u32) -> QPoly {
        (0u32..1 << n)
            .filter(|mask| mask.count_ones() == k)
            .map(|mask| {
                let w: i64 = (0..n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| i64::from(i) + 1)
                    .sum();
                QPoly::q_pow(w)
            })
            .sum()
    }

    #[test]
    fn subset_enumerator_examples() {
        assert_eq!(
            subset_weight_enumerator(3, 2),
            poly(&[(3, 1), (4, 1), (5, 1)])
        );
        assert_eq!(subset_weight_enumerator(5, 0), QPoly::one());
        assert_eq!(subset_weight_enumerator(2, 2), poly(&[(3, 1)]));
        assert!(subset_weight_enumerator(2, 3).is_zero());
    }

    #[test]
    fn subset_enumerator_matches_brute_force() {
        for n in 0..=10 {
            for k in 0..=n {
                assert_eq!(
                    subset_weight_enumerator(n, k),
                    brute_subset_enumerator(n, k)
                );
            }
        }
    }

    #[test]
    fn prefactor_examples() {
        assert_eq!(
            prefactor_mod2_half(2),
            poly(&[(-2, 1), (-1, 1), (1, 1), (2, 1)])
        );
        assert_eq!(prefactor_mod3(1), QPoly::one());
        assert_eq!(prefactor_mod3(2), poly(&[(-1, 1), (0, 1), (1, 1)]));
    }

    #[test]
    fn prefactor_contracts() {
        for n in 1..=10u32 {
            let n2 = i64::from(n * n);
            let half = pochhammer(&PochhammerSpec::finite(-1, 1, 2, n))
                .unwrap()
                .shift(-n2);
            assert_eq!(prefactor_mod2_half(n), half);

            let int = pochhammer(&PochhammerSpec::finite(-1, 2, 2, n))
                .unwrap()
                .shift(-(n2 + i64::from(n)));
            assert_eq!(prefactor_mod2_int(n), int);

            let three = cube_ratio(n).unwrap().shift(-(n2 - i64::from(n)));
            assert_eq!(prefactor_mod3(n), three);
        }
    }

    #[test]
    fn cube_ratio_small() {
        let expected = &poly(&[(0, 1), (1, 1), (2, 1)]) * &poly(&[(0, 1), (2, 1), (4, 1)]);
        assert_eq!(cube_ratio(3).unwrap(), expected);
    }

    #[test]
    fn euler_product_truncation() {
        let s = trunc_pochhammer_inf(&PochhammerSpec::infinite(1, 1, 1), 5).unwrap();
        let want: Vec<Integer> = [1, -1, -1, 0, 0, 1]
            .into_iter()
            .map(Integer::from)
            .collect();
        assert_eq!(s.coeffs(), want.as_slice());
    }

    #[test]
    fn geometric_inverse() {
        let s = trunc_pochhammer_inf(&PochhammerSpec::finite(1, 1, 1, 1), 3).unwrap();
        let inv = trunc_inverse(&s).unwrap();
        assert_eq!(inv.coeffs(), &[1.into(), 1.into(), 1.into(), 1.into()]);
    }

    fn partitions_avoiding_multiples_of(k: usize, max: usize) -> Vec<Integer> {
        // brute-force count of partitions of t into parts not divisible by k
        fn count(t: usize, largest: usize, k: usize) -> u64 {
            if t == 0 {
                return 1;
            }
            (1..=largest.min(t))
                .filter(|p| p % k != 0)
                .map(|p| count(t - p, p, k))
                .sum()
        }
        (0..=max).map(|t| Integer::from(count(t, t, k))).collect()
    }

    #[test]
    fn cube_quotient_counts_partitions() {
        let num = trunc_pochhammer_inf(&PochhammerSpec::infinite(1, 3, 3), 4).unwrap();
        let den = trunc_pochhammer_inf(&PochhammerSpec::infinite(1, 1, 1), 4).unwrap();
        let s = &num * &den.inverse().unwrap();
        let want: Vec<Integer> = [1, 1, 2, 2, 4].into_iter().map(Integer::from).collect();
        assert_eq!(s.coeffs(), want.as_slice());

        let num = trunc_pochhammer_inf(&PochhammerSpec::infinite(1, 3, 3), 30).unwrap();
        let den = trunc_pochhammer_inf(&PochhammerSpec::infinite(1, 1, 1), 30).unwrap();
        assert_eq!(
            (&num * &den.inverse().unwrap()).coeffs(),
            partitions_avoiding_multiples_of(3, 30)
        );
    }

    #[test]
    fn truncated_product_rejects_bad_bases() {
        let half = PochhammerSpec {
            sign: 1,
            base_half_exp: 1,
            step: 1,
            length: Length::Infinite,
        };
        assert_eq!(
            trunc_pochhammer_inf(&half, 3),
            Err(Error::NonIntegralBase(1))
        );
        assert!(trunc_pochhammer_inf(&PochhammerSpec::infinite(1, 0, 1), 3).is_err());
    }
}
