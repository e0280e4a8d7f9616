//! Exact integers, rationals and the two cyclotomic rings used by the
//! roots-of-unity filters.
//!
//! Closed forms such as `2^{m/2} cos(m pi/4)` are never evaluated in floating
//! point. They are the real parts of `(1+i)^m` and `(1+zeta)^m` with
//! `zeta = e^{i pi/3}`, and are produced by the integer recurrences with
//! characteristic polynomials `x^2 - 2x + 2` and `x^2 - 3x + 3`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
pub type Rational = BigRational;

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> Result<Integer> {
    if n < 0 {
        return Err(Error::NegativeBinomialTop(n));
    }
    if k < 0 || k > n {
        return Ok(Integer::zero());
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    Ok(acc)
}

/// Evaluates `t_m / 2` for `t_m = c1 t_{m-1} - c2 t_{m-2}` with the given
/// seeds, running the recurrence backwards for negative `m`.
fn half_recurrence(c1: i64, c2: i64, t0: i64, t1: i64, m: i64) -> Rational {
    let value = if m >= 0 {
        let (mut prev, mut cur) = (Integer::from(t0), Integer::from(t1));
        if m == 0 {
            return Rational::new(prev, Integer::from(2));
        }
        for _ in 1..m {
            let next = &cur * c1 - &prev * c2;
            prev = std::mem::replace(&mut cur, next);
        }
        Rational::from_integer(cur)
    } else {
        // t_{j-2} = (c1 t_{j-1} - t_j) / c2
        let c1 = Rational::from_integer(c1.into());
        let c2 = Rational::from_integer(c2.into());
        let (mut hi, mut lo) = (
            Rational::from_integer(t1.into()),
            Rational::from_integer(t0.into()),
        );
        for _ in 0..(-m) {
            let below = (&c1 * &lo - &hi) / &c2;
            hi = std::mem::replace(&mut lo, below);
        }
        lo
    };
    value / Rational::from_integer(Integer::from(2))
}

/// `2^{m/2} cos(m pi / 4)`, i.e. `Re((1+i)^m)`, for any integer `m`.
pub fn cc4(m: i64) -> Rational {
    half_recurrence(2, 2, 2, 2, m)
}

/// `3^{m/2} cos(m pi / 6)`, i.e. `Re((1+zeta)^m)`, for any integer `m`.
pub fn cc6(m: i64) -> Rational {
    half_recurrence(3, 3, 2, 3, m)
}

/// `Re((1+i)^m)` evaluated in the Gaussian integers.
pub fn cc4_gauss(m: u32) -> Integer {
    GaussInt::from_parts(1, 1).pow(m).re
}

/// `Re((1+zeta)^m)` evaluated in the Eisenstein integers.
pub fn cc6_eisen(m: u32) -> Rational {
    EisenInt::from_parts(1, 1).pow(m).real_part()
}

/// Gaussian integer `re + im * i`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GaussInt {
    pub re: Integer,
    pub im: Integer,
}

impl GaussInt {
    pub fn new(re: Integer, im: Integer) -> Self {
        Self { re, im }
    }

    pub fn from_parts(re: i64, im: i64) -> Self {
        Self::new(re.into(), im.into())
    }

    pub fn one() -> Self {
        Self::from_parts(1, 0)
    }

    /// `i^j`.
    pub fn root_of_unity(j: u32) -> Self {
        match j % 4 {
            0 => Self::from_parts(1, 0),
            1 => Self::from_parts(0, 1),
            2 => Self::from_parts(-1, 0),
            _ => Self::from_parts(0, -1),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for GaussInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_negative() {
            write!(f, "{} - {}i", self.re, -&self.im)
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}

impl Add for &GaussInt {
    type Output = GaussInt;
    fn add(self, rhs: &GaussInt) -> GaussInt {
        GaussInt::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussInt {
    type Output = GaussInt;
    fn sub(self, rhs: &GaussInt) -> GaussInt {
        GaussInt::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussInt {
    type Output = GaussInt;
    fn mul(self, rhs: &GaussInt) -> GaussInt {
        GaussInt::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt::new(-&self.re, -&self.im)
    }
}

/// Eisenstein-type integer `a + b * zeta` with `zeta = e^{i pi/3}`, so that
/// `zeta^2 = zeta - 1` and `zeta^6 = 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EisenInt {
    pub a: Integer,
    pub b: Integer,
}

impl EisenInt {
    pub fn new(a: Integer, b: Integer) -> Self {
        Self { a, b }
    }

    pub fn from_parts(a: i64, b: i64) -> Self {
        Self::new(a.into(), b.into())
    }

    pub fn one() -> Self {
        Self::from_parts(1, 0)
    }

    /// `zeta^j`.
    pub fn root_of_unity(j: u32) -> Self {
        match j % 6 {
            0 => Self::from_parts(1, 0),
            1 => Self::from_parts(0, 1),
            2 => Self::from_parts(-1, 1),
            3 => Self::from_parts(-1, 0),
            4 => Self::from_parts(0, -1),
            _ => Self::from_parts(1, -1),
        }
    }

    /// `Re(a + b zeta) = a + b/2`.
    pub fn real_part(&self) -> Rational {
        Rational::new(&self.a * 2 + &self.b, Integer::from(2))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for EisenInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{} - {}z", self.a, -&self.b)
        } else {
            write!(f, "{} + {}z", self.a, self.b)
        }
    }
}

impl Add for &EisenInt {
    type Output = EisenInt;
    fn add(self, rhs: &EisenInt) -> EisenInt {
        EisenInt::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &EisenInt {
    type Output = EisenInt;
    fn sub(self, rhs: &EisenInt) -> EisenInt {
        EisenInt::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &EisenInt {
    type Output = EisenInt;
    fn mul(self, rhs: &EisenInt) -> EisenInt {
        // (a + b z)(c + d z) = ac + (ad + bc) z + bd (z - 1)
        let bd = &self.b * &rhs.b;
        EisenInt::new(
            &self.a * &rhs.a - &bd,
            &self.a * &rhs.b + &self.b * &rhs.a + bd,
        )
    }
}

impl Neg for &EisenInt {
    type Output = EisenInt;
    fn neg(self) -> EisenInt {
        EisenInt::new(-&self.a, -&self.b)
    }
}

/// Ring of integers adjoined a primitive `r`-th root of unity, as far as the
/// filter needs it.
trait RootRing: Sized + Clone
where
    for<'a> &'a Self: Add<&'a Self, Output = Self> + Mul<&'a Self, Output = Self>,
{
    const ORDER: u32;
    fn zero() -> Self;
    fn one() -> Self;
    fn root(j: u32) -> Self;
    fn pow(&self, e: u32) -> Self;
    /// The element as a rational integer, if it lies in `Z`.
    fn as_integer(&self) -> Option<Integer>;
}

impl RootRing for GaussInt {
    const ORDER: u32 = 4;
    fn zero() -> Self {
        GaussInt::default()
    }
    fn one() -> Self {
        GaussInt::one()
    }
    fn root(j: u32) -> Self {
        GaussInt::root_of_unity(j)
    }
    fn pow(&self, e: u32) -> Self {
        GaussInt::pow(self, e)
    }
    fn as_integer(&self) -> Option<Integer> {
        self.im.is_zero().then(|| self.re.clone())
    }
}

impl RootRing for EisenInt {
    const ORDER: u32 = 6;
    fn zero() -> Self {
        EisenInt::default()
    }
    fn one() -> Self {
        EisenInt::one()
    }
    fn root(j: u32) -> Self {
        EisenInt::root_of_unity(j)
    }
    fn pow(&self, e: u32) -> Self {
        EisenInt::pow(self, e)
    }
    fn as_integer(&self) -> Option<Integer> {
        self.b.is_zero().then(|| self.a.clone())
    }
}

/// `r * sum_l C(top, residue + r l)` as `sum_j w^{-j residue} (1 + w^j)^top`.
fn filter_numerator<R: RootRing>(top: u32, residue: u32) -> R
where
    for<'a> &'a R: Add<&'a R, Output = R> + Mul<&'a R, Output = R>,
{
    let r = R::ORDER;
    (0..r).fold(R::zero(), |acc, j| {
        let twist = R::root((r - (j * residue) % r) % r);
        let base = &R::one() + &R::root(j);
        &acc + &(&twist * &base.pow(top))
    })
}

fn direct_filter_sum(top: u32, residue: u32, modulus: u32) -> Integer {
    (residue..=top)
        .step_by(modulus as usize)
        .map(|k| binomial(top.into(), k.into()).expect("top is nonnegative"))
        .sum()
}

/// `sum_{l >= 0} C(top, residue + modulus * l)` for `modulus` in {4, 6}.
///
/// The value is computed twice, by direct summation and by the
/// roots-of-unity filter in `Z[i]` or `Z[zeta]`; a disagreement is reported
/// as [`Error::FilterMismatch`].
pub fn filter_sum(top: u32, residue: u32, modulus: u32) -> Result<Integer> {
    if modulus != 4 && modulus != 6 {
        return Err(Error::FilterModulus(modulus));
    }
    if residue >= modulus {
        return Err(Error::FilterResidue { residue, modulus });
    }
    let direct = direct_filter_sum(top, residue, modulus);
    let numerator = match modulus {
        4 => filter_numerator::<GaussInt>(top, residue).as_integer(),
        _ => filter_numerator::<EisenInt>(top, residue).as_integer(),
    };
    let filtered = numerator.and_then(|num| {
        let (q, r) = num.div_rem(&Integer::from(modulus));
        r.is_zero().then_some(q)
    });
    match filtered {
        Some(value) if value == direct => Ok(value),
        other => Err(Error::FilterMismatch {
            top,
            residue,
            modulus,
            direct: direct.to_string(),
            filter: other.map_or_else(|| "non-integral".to_string(), |v| v.to_string()),
        }),
    }
}

/// `filter_sum(top, a1, modulus) - filter_sum(top, a2, modulus)`.
pub fn filter_difference(top: u32, modulus: u32, a1: u32, a2: u32) -> Result<Integer> {
    Ok(filter_sum(top, a1, modulus)? - filter_sum(top, a2, modulus)?)
}

/// `base^e` for a possibly negative exponent.
pub fn rational_pow(base: i64, e: i64) -> Rational {
    let p = Integer::from(base).pow(e.unsigned_abs() as u32);
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(Integer::one(), p)
    }
}
