//! Laurent polynomials in `q^{1/2}` with big-integer coefficients.
//!
//! Exponents are stored doubled: the key `e` stands for `q^{e/2}`. This makes
//! ground sets with half-integer weights such as `{+-1/2, +-3/2, ...}` exact
//! without rational exponents. A polynomial is *integral* when every stored
//! exponent is even.

mod series;

pub use series::TruncSeries;

use std::collections::BTreeMap;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::exact::Integer;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    terms: BTreeMap<i64, Integer>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c * q^{half_exp/2}`.
    pub fn monomial(half_exp: i64, c: impl Into<Integer>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(half_exp, c);
        }
        Self { terms }
    }

    /// `q^e` for an integer exponent `e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(2 * e, 1)
    }

    /// Builds a polynomial from `(half_exp, coefficient)` pairs, summing
    /// repeated exponents.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<Integer>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Dense integer-exponent coefficients `coeffs[i]` of `q^{start + i}`.
    pub fn from_dense(start: i64, coeffs: impl IntoIterator<Item = Integer>) -> Self {
        Self::from_terms(
            coeffs
                .into_iter()
                .enumerate()
                .map(|(i, c)| (2 * (start + i as i64), c)),
        )
    }

    pub fn add_term(&mut self, half_exp: i64, c: Integer) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(half_exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, half_exp: i64) -> Integer {
        self.terms.get(&half_exp).cloned().unwrap_or_default()
    }

    /// Lowest and highest stored half-exponent.
    pub fn support(&self) -> Option<(i64, i64)> {
        let lo = *self.terms.keys().next()?;
        let hi = *self.terms.keys().next_back()?;
        Some((lo, hi))
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Integer)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_integral(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    /// Multiplies by `q^{half_shift/2}`.
    pub fn shift(&self, half_shift: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + half_shift, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Integer) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Keeps only terms whose half-exponent lies in `[lo, hi]`.
    pub fn restrict(&self, lo: i64, hi: i64) -> Self {
        if lo > hi {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .range(lo..=hi)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> Integer {
        self.terms.values().sum()
    }

    /// Returns `t` with `t * divisor == self`, or an error when no such
    /// Laurent polynomial exists.
    pub fn exact_div(&self, divisor: &QPoly) -> Result<QPoly> {
        let (d_lo, d_hi) = divisor.support().ok_or(Error::DivisionByZero)?;
        let Some((p_lo, _)) = self.support() else {
            return Ok(Self::zero());
        };
        let lead = &divisor.terms[&d_hi];
        let floor = p_lo - d_lo;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((&top, c)) = rem.terms.iter().next_back() {
            let e = top - d_hi;
            if e < floor {
                return Err(Error::InexactDivision);
            }
            let (q, r) = c.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            rem -= &divisor.shift(e).scale(&q);
            quot.add_term(e, q);
        }
        Ok(quot)
    }

    /// Copies the coefficients of `q^0 .. q^order` into a truncated series.
    pub fn to_series(&self, order: usize) -> Result<TruncSeries> {
        if let Some(e) = self.terms.keys().find(|e| **e < 0 || *e % 2 != 0) {
            return Err(Error::NotASeries(*e));
        }
        let mut s = TruncSeries::zero(order);
        for (e, c) in self.terms.range(0..=2 * order as i64) {
            s.set(*e as usize / 2, c.clone());
        }
        Ok(s)
    }

    /// Sorted `(half_exp, decimal coefficient)` pairs, the report encoding.
    pub fn to_pairs(&self) -> Vec<(i64, String)> {
        self.terms
            .iter()
            .map(|(e, c)| (*e, c.to_string()))
            .collect()
    }
}

fn fmt_power(f: &mut fmt::Formatter<'_>, half_exp: i64) -> fmt::Result {
    match half_exp {
        2 => write!(f, "q"),
        e if e % 2 != 0 => write!(f, "q^({}/2)", e),
        e if e < 0 => write!(f, "q^({})", e / 2),
        e => write!(f, "q^{}", e / 2),
    }
}

impl fmt::Display for QPoly {
    /// Sorted-term text such as `1 + q + 2*q^2 - q^(3/2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if *e == 0 {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                fmt_power(f, *e)?;
            }
        }
        Ok(())
    }
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            seq.serialize_element(&(e, c.to_string()))?;
        }
        seq.end()
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &QPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(mut self, rhs: QPoly) -> QPoly {
        self += &rhs;
        self
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(mut self, rhs: QPoly) -> QPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut acc: BTreeMap<i64, Integer> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                *acc.entry(e1 + e2).or_default() += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        QPoly { terms: acc }
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::zero(), |acc, p| acc + p)
    }
}

impl Product for QPoly {
    fn product<I: Iterator<Item = QPoly>>(iter: I) -> QPoly {
        iter.fold(QPoly::one(), |acc, p| &acc * &p)
    }
}
