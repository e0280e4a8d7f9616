//! Truncated comparisons of the q-sums, taken at large `n = m`, with the
//! infinite products they converge to.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::qpoly::TruncSeries;
use crate::qseries::{qbinom_row_series, trunc_inverse, trunc_pochhammer_inf, PochhammerSpec};

pub const MAX_ORDER: usize = 60;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Limit {
    /// `sum (-1)^k q^{2k^2} [..]` against `(q^2;q^4)^2 (q^4;q^4) / (q;q)`.
    L1,
    /// `sum (-1)^k q^{2k^2-k} [..]` against `1 / (q^2;q^4)`.
    L2,
    /// `sum (-1)^k q^{(9k^2+3k)/2} [..]` against `(q^3;q^3) / (q;q)`.
    L3,
    /// `(q^2;q^4)^2 (q^4;q^4) / (q;q)` against `(-q;q) (q^2;q^4)`.
    ProdId,
}

impl Limit {
    pub const ALL: [Limit; 4] = [Limit::L1, Limit::L2, Limit::L3, Limit::ProdId];

    pub fn id(self) -> &'static str {
        match self {
            Limit::L1 => "L1",
            Limit::L2 => "L2",
            Limit::L3 => "L3",
            Limit::ProdId => "PRODID",
        }
    }

    /// Step `d` and the exponent of `q` in the k-th term of the finite sum.
    fn summand(self) -> Option<(i64, Exponent)> {
        match self {
            Limit::L1 => Some((2, |k| 2 * k * k)),
            Limit::L2 => Some((2, |k| 2 * k * k - k)),
            Limit::L3 => Some((3, |k| (9 * k * k + 3 * k) / 2)),
            Limit::ProdId => None,
        }
    }
}

type Exponent = fn(i64) -> i64;

impl fmt::Display for Limit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Limit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Limit::ALL
            .into_iter()
            .find(|l| l.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownCase(s.to_string()))
    }
}

fn prod(sign: i8, base: i64, step: u32, order: usize) -> Result<TruncSeries> {
    trunc_pochhammer_inf(&PochhammerSpec::infinite(sign, base, step), order)
}

/// The infinite-product side of a limit, truncated at `order`.
pub fn product_side(which: Limit, order: usize) -> Result<TruncSeries> {
    let euler_inv = || trunc_inverse(&prod(1, 1, 1, order)?);
    Ok(match which {
        Limit::L1 => {
            let odd = prod(1, 2, 4, order)?;
            &(&(&odd * &odd) * &prod(1, 4, 4, order)?) * &euler_inv()?
        }
        Limit::L2 => trunc_inverse(&prod(1, 2, 4, order)?)?,
        Limit::L3 => &prod(1, 3, 3, order)? * &euler_inv()?,
        Limit::ProdId => &prod(-1, 1, 1, order)? * &prod(1, 2, 4, order)?,
    })
}

/// The finite sum at `(n, m)` truncated at `order`. PRODID has no finite
/// sum; its left side is the L1 product.
pub fn finite_sum_series(which: Limit, n: u32, m: u32, order: usize) -> Result<TruncSeries> {
    let Some((d, exp)) = which.summand() else {
        return product_side(Limit::L1, order);
    };
    let (n, m) = (i64::from(n), i64::from(m));
    let rows = qbinom_row_series((2 * n + m) as u32, order);
    let mut acc = TruncSeries::zero(order);
    for k in -n.div_euclid(d)..=(n + m).div_euclid(d) {
        let term = rows[(n + d * k) as usize].shift(exp(k) as usize);
        acc = if k.rem_euclid(2) == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    Ok(acc)
}

/// Both sides to `order`. The finite sum is taken at `n = m = order + 2`
/// and recomputed at `order + 3`; a change signals that the parameters
/// have not stabilized.
pub fn limit_case(which: Limit, order: usize) -> Result<(TruncSeries, TruncSeries)> {
    if order > MAX_ORDER {
        return Err(Error::OrderTooLarge {
            order,
            max: MAX_ORDER,
        });
    }
    let rhs = product_side(which, order)?;
    let lhs = match which {
        Limit::ProdId => product_side(Limit::L1, order)?,
        _ => {
            let base = order as u32 + 2;
            let lhs = finite_sum_series(which, base, base, order)?;
            if finite_sum_series(which, base + 1, base + 1, order)? != lhs {
                return Err(Error::Unstable {
                    case: which.id(),
                    order,
                });
            }
            lhs
        }
    };
    Ok((lhs, rhs))
}
