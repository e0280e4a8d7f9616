use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::exact::Integer;

/// Power series in `q` known through `q^order`.
///
/// Binary operations on series of different orders truncate to the smaller
/// order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    coeffs: Vec<Integer>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Integer::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Integer::one();
        s
    }

    /// Takes `coeffs[0..=order]`, padding with zeros.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = Integer>) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    /// `1 + c q^e`, truncated.
    pub fn binomial_factor(order: usize, c: Integer, e: usize) -> Self {
        let mut s = Self::one(order);
        if e <= order {
            s.coeffs[e] += c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn coefficient(&self, e: usize) -> Integer {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, e: usize, c: Integer) {
        if e <= self.order() {
            self.coeffs[e] = c;
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs.iter().take(order + 1).cloned())
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: usize) -> Self {
        let order = self.order();
        let mut s = Self::zero(order);
        for (i, c) in self
            .coeffs
            .iter()
            .enumerate()
            .take((order + 1).saturating_sub(e))
        {
            s.coeffs[i + e] = c.clone();
        }
        s
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if !c0.abs().is_one() {
            return Err(Error::NonUnitConstant(c0.to_string()));
        }
        let order = self.order();
        let mut inv = Self::zero(order);
        inv.coeffs[0] = c0.clone();
        for k in 1..=order {
            let acc: Integer = (1..=k).map(|i| &self.coeffs[i] * &inv.coeffs[k - i]).sum();
            // c0 is +-1, so dividing by it is multiplying by it
            inv.coeffs[k] = -(acc * c0);
        }
        Ok(inv)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.order()), |acc, _| &acc * self)
    }
}

impl fmt::Display for TruncSeries {
    /// Space-separated coefficients of `q^0 .. q^order`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Serialize for TruncSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        TruncSeries::from_coeffs(
            order,
            self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b),
        )
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        TruncSeries::from_coeffs(
            order,
            self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b),
        )
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries::from_coeffs(self.order(), self.coeffs.iter().map(|c| -c))
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        let mut out = TruncSeries::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(order: usize, c: &[i64]) -> TruncSeries {
        TruncSeries::from_coeffs(order, c.iter().map(|&v| Integer::from(v)))
    }

    #[test]
    fn geometric_inverse() {
        let one_minus_q = series(3, &[1, -1]);
        assert_eq!(one_minus_q.inverse().unwrap(), series(3, &[1, 1, 1, 1]));
    }

    #[test]
    fn inverse_with_negative_unit() {
        let s = series(5, &[-1, 2, 0, 3]);
        let inv = s.inverse().unwrap();
        assert_eq!(&s * &inv, TruncSeries::one(5));
    }

    #[test]
    fn non_unit_constant_is_rejected() {
        assert_eq!(
            series(2, &[2, 1]).inverse(),
            Err(Error::NonUnitConstant("2".into()))
        );
        assert!(series(2, &[0, 1]).inverse().is_err());
    }

    #[test]
    fn mixed_orders_truncate() {
        let a = series(5, &[1, 1, 1, 1, 1, 1]);
        let b = series(2, &[1, -1]);
        assert_eq!((&a * &b).order(), 2);
        assert_eq!(&a * &b, series(2, &[1, 0, 0]));
    }

    #[test]
    fn shift_drops_overflow() {
        assert_eq!(series(3, &[1, 2, 3, 4]).shift(2), series(3, &[0, 0, 1, 2]));
        assert_eq!(series(3, &[1]).shift(7), TruncSeries::zero(3));
    }

    #[test]
    fn display_lists_coefficients() {
        assert_eq!(series(4, &[1, 1, 2, 2, 4]).to_string(), "1 1 2 2 4");
    }
}
