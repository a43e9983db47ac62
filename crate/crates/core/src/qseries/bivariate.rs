use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{write_terms, QSeries};
use crate::error::{Error, Result};

/// Series in `z` and `q`, truncated at `q^N` and `z^D`.
///
/// Stored by `z` degree: row `k` holds the coefficients of `z^k q^0..q^N`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZQSeries {
    q_order: usize,
    rows: Vec<Vec<BigInt>>,
}

impl ZQSeries {
    pub fn zero(q_order: usize, z_degree: usize) -> Self {
        ZQSeries {
            q_order,
            rows: vec![vec![BigInt::zero(); q_order + 1]; z_degree + 1],
        }
    }

    pub fn one(q_order: usize, z_degree: usize) -> Self {
        Self::monomial(q_order, z_degree, 0, 0, 1)
    }

    /// `coeff * q^q_exp * z^z_exp`, dropped if outside the truncation window.
    pub fn monomial(
        q_order: usize,
        z_degree: usize,
        q_exp: usize,
        z_exp: usize,
        coeff: impl Into<BigInt>,
    ) -> Self {
        let mut s = Self::zero(q_order, z_degree);
        if q_exp <= q_order && z_exp <= z_degree {
            s.rows[z_exp][q_exp] = coeff.into();
        }
        s
    }

    /// Embeds a `q`-series as the `z^0` row.
    pub fn from_q(series: &QSeries, z_degree: usize) -> Self {
        let mut s = Self::zero(series.order(), z_degree);
        s.rows[0] = series.coeffs().to_vec();
        s
    }

    pub fn q_order(&self) -> usize {
        self.q_order
    }

    pub fn z_degree(&self) -> usize {
        self.rows.len() - 1
    }

    /// Coefficient of `q^q_exp z^z_exp`.
    pub fn coeff(&self, q_exp: usize, z_exp: usize) -> Option<&BigInt> {
        self.rows.get(z_exp)?.get(q_exp)
    }

    pub fn set_coeff(&mut self, q_exp: usize, z_exp: usize, value: BigInt) {
        self.rows[z_exp][q_exp] = value;
    }

    /// The coefficient of `z^k` as a `q`-series.
    pub fn z_slice(&self, k: usize) -> QSeries {
        QSeries::from_coeffs(self.rows[k].clone())
    }

    fn shape(&self) -> (usize, usize) {
        (self.q_order, self.z_degree())
    }

    fn check_shape(&self, other: &ZQSeries) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::TruncationMismatch {
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(())
    }

    fn zip_rows(&self, other: &ZQSeries, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> ZQSeries {
        ZQSeries {
            q_order: self.q_order,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| f(x, y)).collect())
                .collect(),
        }
    }

    pub fn try_add(&self, other: &ZQSeries) -> Result<ZQSeries> {
        self.check_shape(other)?;
        Ok(self.zip_rows(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &ZQSeries) -> Result<ZQSeries> {
        self.check_shape(other)?;
        Ok(self.zip_rows(other, |a, b| a - b))
    }

    fn nonzero_terms(&self) -> Vec<(usize, usize, &BigInt)> {
        let mut out = Vec::new();
        for (k, row) in self.rows.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    out.push((k, j, c));
                }
            }
        }
        out
    }

    /// Truncated product in both variables, iterating over the sparser factor.
    pub fn try_mul(&self, other: &ZQSeries) -> Result<ZQSeries> {
        self.check_shape(other)?;
        let a_terms = self.nonzero_terms();
        let b_terms = other.nonzero_terms();
        let (sparse, dense) = if a_terms.len() <= b_terms.len() {
            (a_terms, other)
        } else {
            (b_terms, self)
        };
        let (n, d) = self.shape();
        let mut out = Self::zero(n, d);
        for (k, j, a) in sparse {
            for (dk, row) in dense.rows[..=d - k].iter().enumerate() {
                let target = &mut out.rows[k + dk];
                for (dj, b) in row[..=n - j].iter().enumerate() {
                    if !b.is_zero() {
                        target[j + dj] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Multiplies every `z` row by a `q`-series of the same order.
    pub fn mul_q(&self, factor: &QSeries) -> Result<ZQSeries> {
        if factor.order() != self.q_order {
            return Err(Error::TruncationMismatch {
                left: self.shape(),
                right: (factor.order(), 0),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let s = QSeries::from_coeffs(row.clone());
                s.try_mul(factor).map(QSeries::into_coeffs)
            })
            .collect::<Result<_>>()?;
        Ok(ZQSeries {
            q_order: self.q_order,
            rows,
        })
    }

    /// Multiplies by `z^z_shift q^q_shift`.
    pub fn shift(&self, q_shift: usize, z_shift: usize) -> ZQSeries {
        let (n, d) = self.shape();
        let mut out = Self::zero(n, d);
        for k in 0..=d {
            for j in 0..=n {
                if k + z_shift <= d && j + q_shift <= n {
                    out.rows[k + z_shift][j + q_shift] = self.rows[k][j].clone();
                }
            }
        }
        out
    }

    /// Inverse up to truncation; the constant term must be `±1`.
    pub fn invert(&self) -> Result<ZQSeries> {
        let c0 = self.rows[0][0].clone();
        if !c0.abs().is_one() {
            return Err(Error::NonUnitConstantTerm(c0.to_string()));
        }
        let (n, d) = self.shape();
        let terms: Vec<(usize, usize, BigInt)> = self
            .nonzero_terms()
            .into_iter()
            .filter(|&(k, j, _)| (k, j) != (0, 0))
            .map(|(k, j, c)| (k, j, c.clone()))
            .collect();
        let mut inv = Self::zero(n, d);
        for k in 0..=d {
            for j in 0..=n {
                if (k, j) == (0, 0) {
                    inv.rows[0][0] = c0.clone();
                    continue;
                }
                let mut acc = BigInt::zero();
                for (tk, tj, c) in &terms {
                    if *tk <= k && *tj <= j {
                        acc += c * &inv.rows[k - tk][j - tj];
                    }
                }
                inv.rows[k][j] = -(acc * &c0);
            }
        }
        Ok(inv)
    }

    /// First `(q_exp, z_exp)` in z-major order where the two series differ.
    pub fn first_difference(&self, other: &ZQSeries) -> Option<(usize, usize, BigInt, BigInt)> {
        let zero = BigInt::zero();
        let d = self.z_degree().max(other.z_degree());
        let n = self.q_order.max(other.q_order);
        for k in 0..=d {
            for j in 0..=n {
                let a = self.coeff(j, k).unwrap_or(&zero);
                let b = other.coeff(j, k).unwrap_or(&zero);
                if a != b {
                    return Some((j, k, a.clone(), b.clone()));
                }
            }
        }
        None
    }
}

/// Sum of `z^k*(...)` groups, lowest `z` power first.
impl fmt::Display for ZQSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, row) in self.rows.iter().enumerate() {
            if row.iter().all(Zero::is_zero) {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let q = QSeries::from_coeffs(row.clone());
            match k {
                0 => write!(f, "({q})")?,
                1 => write!(f, "z*({q})")?,
                _ => write!(f, "z^{k}*({q})")?,
            }
        }
        if first {
            write_terms(f, std::iter::empty(), "q")?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&ZQSeries> for &ZQSeries {
            type Output = ZQSeries;

            fn $method(self, rhs: &ZQSeries) -> ZQSeries {
                self.$checked(rhs).expect("series truncations must match")
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn zq(q_order: usize, z_degree: usize) -> impl Strategy<Value = ZQSeries> {
        prop::collection::vec(-20i64..20, (q_order + 1) * (z_degree + 1)).prop_map(move |c| {
            let mut s = ZQSeries::zero(q_order, z_degree);
            for (i, v) in c.into_iter().enumerate() {
                s.set_coeff(i % (q_order + 1), i / (q_order + 1), BigInt::from(v));
            }
            s
        })
    }

    #[test]
    fn one_plus_zq_squared() {
        let f = &ZQSeries::one(4, 4) + &ZQSeries::monomial(4, 4, 1, 1, 1);
        let sq = &f * &f;
        assert_eq!(sq.coeff(0, 0), Some(&BigInt::from(1)));
        assert_eq!(sq.coeff(1, 1), Some(&BigInt::from(2)));
        assert_eq!(sq.coeff(2, 2), Some(&BigInt::from(1)));
        assert_eq!(sq.coeff(1, 2), Some(&BigInt::from(0)));
    }

    #[test]
    fn shape_mismatch() {
        let a = ZQSeries::zero(3, 2);
        let b = ZQSeries::zero(3, 3);
        assert!(matches!(a.try_mul(&b), Err(Error::TruncationMismatch { .. })));
        assert!(a.mul_q(&QSeries::zero(2)).is_err());
    }

    #[test]
    fn display() {
        let f = &ZQSeries::one(3, 2) + &ZQSeries::monomial(3, 2, 2, 1, -1);
        assert_eq!(f.to_string(), "(1) + z*(-q^2)");
        assert_eq!(ZQSeries::zero(1, 1).to_string(), "0");
    }

    proptest! {
        #[test]
        fn ring_laws(a in zq(8, 5), b in zq(8, 5), c in zq(8, 5)) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn inverse(mut a in zq(8, 5)) {
            a.set_coeff(0, 0, BigInt::one());
            let inv = a.invert().unwrap();
            prop_assert_eq!(&a * &inv, ZQSeries::one(8, 5));
        }

        #[test]
        fn mul_q_matches_embedding(a in zq(10, 3), q in prop::collection::vec(-9i64..9, 11)) {
            let q = QSeries::from_i64s(&q);
            prop_assert_eq!(a.mul_q(&q).unwrap(), &a * &ZQSeries::from_q(&q, 3));
        }
    }
}
