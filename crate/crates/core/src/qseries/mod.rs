//! Truncated formal power series in `q`, and in `(z, q)`, over the integers.
//!
//! A [`QSeries`] of order `N` stores `c_0..=c_N`; every product is cut at
//! `q^N`. Binary operations require matching orders.

mod bivariate;
mod formulas;

pub use bivariate::ZQSeries;
pub use formulas::{
    durfee_terms, euler_product, final_formula_sides, fixed_point_polynomial, gauss_binomial,
    pochhammer_q, pochhammer_zq, rhs_fixed_points, rhs_general, sylvester_sides,
};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QSeries {
    coeffs: Vec<BigInt>,
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        QSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, 1)
    }

    /// `coeff * q^exponent`, or zero when `exponent > order`.
    pub fn monomial(order: usize, exponent: usize, coeff: impl Into<BigInt>) -> Self {
        let mut s = Self::zero(order);
        if exponent <= order {
            s.coeffs[exponent] = coeff.into();
        }
        s
    }

    /// Series whose order is `coeffs.len() - 1`. An empty vector gives the zero series of order 0.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        QSeries { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^k`; `None` past the truncation order.
    pub fn coeff(&self, k: usize) -> Option<&BigInt> {
        self.coeffs.get(k)
    }

    pub fn set_coeff(&mut self, k: usize, value: BigInt) {
        self.coeffs[k] = value;
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Truncates or zero-extends to `order`.
    pub fn with_order(&self, order: usize) -> QSeries {
        let mut coeffs: Vec<BigInt> = self.coeffs.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, BigInt::zero());
        QSeries { coeffs }
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> QSeries {
        let order = self.order();
        let mut out = Self::zero(order);
        for (i, c) in self.coeffs.iter().enumerate().take((order + 1).saturating_sub(k)) {
            out.coeffs[i + k] = c.clone();
        }
        out
    }

    pub fn scale(&self, factor: &BigInt) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Value at `q = 1` of the retained coefficients.
    pub fn sum_coeffs(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    fn check_order(&self, other: &QSeries) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::TruncationMismatch {
                left: (self.order(), 0),
                right: (other.order(), 0),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &QSeries) -> Result<QSeries> {
        self.check_order(other)?;
        Ok(QSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &QSeries) -> Result<QSeries> {
        self.check_order(other)?;
        Ok(QSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    /// Truncated product. Zero coefficients of the sparser factor are skipped,
    /// so multiplying by a binomial like `1 - q^n` is linear in the order.
    pub fn try_mul(&self, other: &QSeries) -> Result<QSeries> {
        self.check_order(other)?;
        let nonzeros = |s: &QSeries| s.coeffs.iter().filter(|c| !c.is_zero()).count();
        let (sparse, dense) = if nonzeros(self) <= nonzeros(other) {
            (self, other)
        } else {
            (other, self)
        };
        let order = self.order();
        let mut out = Self::zero(order);
        for (i, a) in sparse.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in dense.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse up to the truncation order. The constant term must be `±1`.
    pub fn invert(&self) -> Result<QSeries> {
        let c0 = &self.coeffs[0];
        if !c0.abs().is_one() {
            return Err(Error::NonUnitConstantTerm(c0.to_string()));
        }
        let order = self.order();
        let mut inv = Self::zero(order);
        inv.coeffs[0] = c0.clone();
        for k in 1..=order {
            let mut acc = BigInt::zero();
            for i in 1..=k {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    acc += a * &inv.coeffs[k - i];
                }
            }
            // c0 is its own inverse.
            inv.coeffs[k] = -(acc * c0);
        }
        Ok(inv)
    }

    /// First exponent where the two series differ, with both coefficients.
    pub fn first_difference(&self, other: &QSeries) -> Option<(usize, BigInt, BigInt)> {
        let order = self.order().max(other.order());
        let zero = BigInt::zero();
        (0..=order).find_map(|k| {
            let a = self.coeff(k).unwrap_or(&zero);
            let b = other.coeff(k).unwrap_or(&zero);
            (a != b).then(|| (k, a.clone(), b.clone()))
        })
    }

    /// Coefficients as decimal strings, `c_0` first.
    pub fn raw(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }
}

pub(crate) fn write_terms<I>(f: &mut fmt::Formatter<'_>, terms: I, variable: &str) -> fmt::Result
where
    I: IntoIterator<Item = (usize, BigInt)>,
{
    let mut first = true;
    for (k, c) in terms {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        let magnitude = c.abs();
        match (first, negative) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        let unit = magnitude.is_one();
        match k {
            0 => write!(f, "{magnitude}")?,
            1 if unit => write!(f, "{variable}")?,
            1 => write!(f, "{magnitude}*{variable}")?,
            _ if unit => write!(f, "{variable}^{k}")?,
            _ => write!(f, "{magnitude}*{variable}^{k}")?,
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// `c0 + c1*q + c2*q^2 + ...`, zero terms omitted.
impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coeffs.iter().cloned().enumerate(), "q")
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&QSeries> for &QSeries {
            type Output = QSeries;

            fn $method(self, rhs: &QSeries) -> QSeries {
                self.$checked(rhs).expect("series orders must match")
            }
        }

        impl $trait<QSeries> for QSeries {
            type Output = QSeries;

            fn $method(self, rhs: QSeries) -> QSeries {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &QSeries {
    type Output = QSeries;

    fn neg(self) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for QSeries {
    type Output = QSeries;

    fn neg(self) -> QSeries {
        -&self
    }
}
