//! Products, q-Pochhammer symbols, Gaussian binomials and the closed-form
//! sums for `∏_{n>m} (1 - q^n)`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{QSeries, ZQSeries};
use crate::error::{Error, Result};
use crate::partition::base_size;

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `∏_{m < n <= N} (1 - q^n)` truncated at `q^N`.
pub fn euler_product(m: usize, order: usize) -> QSeries {
    let mut acc = QSeries::one(order);
    for n in (m + 1)..=order {
        let factor = &QSeries::one(order) - &QSeries::monomial(order, n, 1);
        acc = &acc * &factor;
    }
    acc
}

/// `(q; q)_n = (1 - q)(1 - q^2)...(1 - q^n)` truncated at `q^N`.
pub fn pochhammer_q(n: usize, order: usize) -> QSeries {
    let mut acc = QSeries::one(order);
    for k in 1..=n {
        let factor = &QSeries::one(order) - &QSeries::monomial(order, k, 1);
        acc = &acc * &factor;
    }
    acc
}

/// `(a)_n` for `a = coeff * z * q^q_shift`, i.e.
/// `∏_{k<n} (1 - coeff * z * q^{q_shift + k})`.
///
/// `pochhammer_zq(-1, 1, n, ..)` is `(-zq)_n`.
pub fn pochhammer_zq(
    coeff: i64,
    q_shift: usize,
    n: usize,
    q_order: usize,
    z_degree: usize,
) -> ZQSeries {
    let one = ZQSeries::one(q_order, z_degree);
    let mut acc = one.clone();
    for k in 0..n {
        let term = ZQSeries::monomial(q_order, z_degree, q_shift + k, 1, coeff);
        acc = &acc * &(&one - &term);
    }
    acc
}

fn gauss_coeffs(a: usize, b: usize) -> Vec<BigInt> {
    // row[j] holds [a' choose j] for the current a'.
    let mut row: Vec<Vec<BigInt>> = vec![vec![BigInt::from(1)]];
    for top in 1..=a {
        let width = b.min(top);
        let mut next = Vec::with_capacity(width + 1);
        for j in 0..=width {
            if j == 0 || j == top {
                next.push(vec![BigInt::from(1)]);
                continue;
            }
            // [top, j] = [top-1, j-1] + q^j [top-1, j]
            let left = &row[j - 1];
            let right = &row[j];
            let mut poly = vec![BigInt::zero(); j * (top - j) + 1];
            for (i, c) in left.iter().enumerate() {
                poly[i] += c;
            }
            for (i, c) in right.iter().enumerate() {
                poly[i + j] += c;
            }
            next.push(poly);
        }
        row = next;
    }
    row.swap_remove(b)
}

/// The Gaussian binomial `[a choose b]_q` as an exact polynomial of degree `b(a-b)`.
pub fn gauss_binomial(a: usize, b: usize) -> Result<QSeries> {
    if b > a {
        return Err(Error::BinomialRange { a, b });
    }
    Ok(QSeries::from_coeffs(gauss_coeffs(a, b)))
}

/// `[a choose b]_q` with negative or out-of-range arguments read as zero.
fn gauss_or_zero(a: isize, b: isize) -> QSeries {
    if a < 0 || b < 0 || b > a {
        QSeries::zero(0)
    } else {
        QSeries::from_coeffs(gauss_coeffs(a as usize, b as usize))
    }
}

/// Adds `factor * q^shift * poly` into `acc`, dropping exponents above its order.
fn accumulate(acc: &mut QSeries, poly: &QSeries, shift: usize, factor: i64) {
    let order = acc.order();
    for (i, c) in poly.coeffs().iter().enumerate() {
        let k = i + shift;
        if k > order {
            break;
        }
        if !c.is_zero() {
            let updated = acc.coeff(k).unwrap() + c * factor;
            acc.set_coeff(k, updated);
        }
    }
}

/// `Σ_{n>=0} (-1)^n [n+m choose m]_q q^{(3n^2+n)/2 + nm} (1 - q^{2n+m+1})`.
pub fn rhs_general(m: usize, order: usize) -> QSeries {
    let mut acc = QSeries::zero(order);
    let mut n = 0;
    loop {
        let lead = (3 * n * n + n) / 2 + n * m;
        if lead > order {
            break;
        }
        let binom = gauss_or_zero((n + m) as isize, m as isize);
        let s = sign(n);
        accumulate(&mut acc, &binom, lead, s);
        accumulate(&mut acc, &binom, lead + 2 * n + m + 1, -s);
        n += 1;
    }
    acc
}

/// Signed weight polynomial of the fixed points with `n` parts:
/// `(-1)^n q^{(3n^2-n)/2 + nm} ([n+m choose m]_q + q^{n+m} [n+m-1 choose m]_q)`.
pub fn fixed_point_polynomial(n: usize, m: usize) -> QSeries {
    let base = base_size(n, m);
    let inner = gauss_or_zero((n + m) as isize, m as isize);
    let tilde = gauss_or_zero(n as isize + m as isize - 1, m as isize);
    let degree = base + if n > 0 { n * m + n } else { 0 };
    let mut out = QSeries::zero(degree);
    accumulate(&mut out, &inner, base, sign(n));
    accumulate(&mut out, &tilde, base + n + m, sign(n));
    out
}

/// Sum of [`fixed_point_polynomial`] over `n`, truncated at `q^N`.
pub fn rhs_fixed_points(m: usize, order: usize) -> QSeries {
    let mut acc = QSeries::zero(order);
    let mut n = 0;
    while base_size(n, m) <= order {
        let poly = fixed_point_polynomial(n, m);
        acc = &acc + &poly.with_order(order);
        n += 1;
    }
    acc
}

/// Both sides of the fixed-point expansion with the `1 - q^m` denominator
/// cleared, for `m >= 1`:
///
/// `(1 - q^m) ∏_{n>m} (1 - q^n)` and
/// `Σ_n (-1)^n q^{(3n^2-n)/2 + nm} [n+m-1 choose m-1]_q (1 - q^{2n+m})`.
pub fn final_formula_sides(m: usize, order: usize) -> Result<(QSeries, QSeries)> {
    if m == 0 {
        return Err(Error::PreconditionViolated {
            op: "final_formula_sides",
            reason: "the cleared denominator 1 - q^m vanishes at m = 0".into(),
        });
    }
    let clear = &QSeries::one(order) - &QSeries::monomial(order, m, 1);
    let lhs = &clear * &euler_product(m, order);
    let mut rhs = QSeries::zero(order);
    let mut n = 0;
    while base_size(n, m) <= order {
        let lead = base_size(n, m);
        let binom = gauss_or_zero((n + m - 1) as isize, (m - 1) as isize);
        accumulate(&mut rhs, &binom, lead, sign(n));
        accumulate(&mut rhs, &binom, lead + 2 * n + m, -sign(n));
        n += 1;
    }
    Ok((lhs, rhs))
}

/// Both sides of Sylvester's identity truncated at `q^N`, `z^D`:
///
/// `∏_{n>=1} (1 + z q^n)` and
/// `1 + Σ_{n>=1} z^n q^{(3n^2-n)/2} (1 + z q^{2n}) (-zq)_{n-1} / (q)_n`.
pub fn sylvester_sides(q_order: usize, z_degree: usize) -> (ZQSeries, ZQSeries) {
    let one = ZQSeries::one(q_order, z_degree);
    let mut lhs = one.clone();
    for n in 1..=q_order {
        lhs = &lhs * &(&one + &ZQSeries::monomial(q_order, z_degree, n, 1, 1));
    }

    let mut rhs = one.clone();
    let mut n = 1;
    while n <= z_degree && (3 * n * n - n) / 2 <= q_order {
        let denominator = pochhammer_q(n, q_order)
            .invert()
            .expect("(q)_n has constant term 1");
        let head = ZQSeries::monomial(q_order, z_degree, (3 * n * n - n) / 2, n, 1);
        let tail = &one + &ZQSeries::monomial(q_order, z_degree, 2 * n, 1, 1);
        let body = &(&head * &tail) * &pochhammer_zq(-1, 1, n - 1, q_order, z_degree);
        let term = body.mul_q(&denominator).expect("orders agree");
        rhs = &rhs + &term;
        n += 1;
    }
    (lhs, rhs)
}

/// The two Durfee-square terms for dimension `d >= 1`:
///
/// `z^d q^{d^2 + C(d,2)} (-zq)_{d-1} / (q)_d` (no part above the square equals `d`) and
/// `z^{d+1} q^{d^2 + C(d,2) + 2d} (-zq)_{d-1} / (q)_d` (the part above the square equals `d`).
pub fn durfee_terms(d: usize, q_order: usize, z_degree: usize) -> Result<(ZQSeries, ZQSeries)> {
    if d == 0 {
        return Err(Error::PreconditionViolated {
            op: "durfee_terms",
            reason: "Durfee dimension must be at least 1".into(),
        });
    }
    let common = pochhammer_zq(-1, 1, d - 1, q_order, z_degree)
        .mul_q(&pochhammer_q(d, q_order).invert()?)?;
    let lead = d * d + d * (d - 1) / 2;
    Ok((common.shift(lead, d), common.shift(lead + 2 * d, d + 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{count_distinct_signed, enumerate_distinct};

    fn q(coeffs: &[i64]) -> QSeries {
        QSeries::from_i64s(coeffs)
    }

    /// Ordinary binomial coefficients by Pascal's rule on machine integers.
    fn binomial(a: usize, b: usize) -> i64 {
        let mut row = vec![1i64];
        for _ in 0..a {
            let mut next = vec![1i64; row.len() + 1];
            for i in 1..row.len() {
                next[i] = row[i - 1] + row[i];
            }
            row = next;
        }
        row[b]
    }

    #[test]
    fn euler_product_examples() {
        assert_eq!(euler_product(0, 12), q(&[1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1]));
        let dp = count_distinct_signed(1, 7);
        assert_eq!(euler_product(1, 7).coeffs(), dp.signed_sum.as_slice());
        assert_eq!(euler_product(9, 9), QSeries::one(9));
        assert_eq!(euler_product(20, 5), QSeries::one(5));
    }

    #[test]
    fn gauss_binomial_examples() {
        assert_eq!(gauss_binomial(2, 1).unwrap(), q(&[1, 1]));
        assert_eq!(gauss_binomial(4, 2).unwrap(), q(&[1, 1, 2, 1, 1]));
        assert_eq!(gauss_binomial(0, 0).unwrap(), q(&[1]));
        assert_eq!(gauss_binomial(3, 4), Err(Error::BinomialRange { a: 3, b: 4 }));
    }

    #[test]
    fn gauss_binomial_by_quotient() {
        // (q)_a / ((q)_b (q)_{a-b}) computed with series inversion.
        for a in 0..=9 {
            for b in 0..=a {
                let order = b * (a - b) + 3;
                let quotient = &(&pochhammer_q(a, order) * &pochhammer_q(b, order).invert().unwrap())
                    * &pochhammer_q(a - b, order).invert().unwrap();
                assert_eq!(gauss_binomial(a, b).unwrap().with_order(order), quotient);
            }
        }
    }

    #[test]
    fn gauss_binomial_shape() {
        for a in 0..=12 {
            for b in 0..=a {
                let g = gauss_binomial(a, b).unwrap();
                assert_eq!(g.order(), b * (a - b));
                assert_eq!(g.sum_coeffs(), BigInt::from(binomial(a, b)));
                assert_eq!(g, gauss_binomial(a, a - b).unwrap());
                let mut reversed = g.coeffs().to_vec();
                reversed.reverse();
                assert_eq!(reversed.as_slice(), g.coeffs());
                assert!(g.coeffs().iter().all(|c| c > &BigInt::zero()));
            }
        }
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer_q(2, 4), q(&[1, -1, -1, 1, 0]));
        assert_eq!(pochhammer_q(0, 3), QSeries::one(3));
        for n in 0..8 {
            assert_eq!(pochhammer_q(n, 10).coeff(0), Some(&BigInt::from(1)));
        }
        let p = pochhammer_zq(-1, 1, 1, 3, 3);
        assert_eq!(p, &ZQSeries::one(3, 3) + &ZQSeries::monomial(3, 3, 1, 1, 1));
    }

    #[test]
    fn rhs_general_examples() {
        assert_eq!(rhs_general(0, 12), euler_product(0, 12));
        let pentagonal = rhs_general(0, 7);
        let geometric = q(&[1, -1, 0, 0, 0, 0, 0, 0]).invert().unwrap();
        assert_eq!(rhs_general(1, 7), &pentagonal * &geometric);
        for m in 0..6 {
            assert_eq!(rhs_general(m, 10).coeff(0), Some(&BigInt::from(1)));
        }
    }

    #[test]
    fn fixed_point_polynomial_examples() {
        assert_eq!(fixed_point_polynomial(2, 1), q(&[0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1]));
        assert_eq!(fixed_point_polynomial(0, 4), q(&[1]));
        assert_eq!(fixed_point_polynomial(0, 0), q(&[1]));
        assert_eq!(fixed_point_polynomial(1, 0), q(&[0, -1, -1]));
        for m in 0..=6 {
            assert_eq!(rhs_fixed_points(m, 120), euler_product(m, 120), "m = {m}");
        }
    }

    #[test]
    fn final_formula_cross_multiplied() {
        for m in 1..=6 {
            let (lhs, rhs) = final_formula_sides(m, 150).unwrap();
            assert_eq!(lhs, rhs, "m = {m}");
        }
        assert!(final_formula_sides(0, 10).is_err());
    }

    #[test]
    fn sylvester_small() {
        let (lhs, rhs) = sylvester_sides(20, 20);
        assert_eq!(lhs, rhs);
        // z^1: one single-part partition of every positive size.
        for j in 1..=20 {
            assert_eq!(lhs.coeff(j, 1), Some(&BigInt::from(1)));
        }
        assert_eq!(lhs.coeff(5, 2), Some(&BigInt::from(2)));
        assert_eq!(lhs.z_slice(0), QSeries::one(20));
        let (lhs, rhs) = sylvester_sides(10, 0);
        assert_eq!(lhs, ZQSeries::one(10, 0));
        assert_eq!(rhs, ZQSeries::one(10, 0));
    }

    #[test]
    fn sylvester_lhs_counts_partitions_by_length() {
        let (lhs, _) = sylvester_sides(30, 30);
        for j in 0..=30 {
            let mut by_len = vec![0i64; 31];
            for lambda in enumerate_distinct(j, 0) {
                by_len[lambda.len()] += 1;
            }
            for (k, &c) in by_len.iter().enumerate() {
                assert_eq!(lhs.coeff(j, k), Some(&BigInt::from(c)), "q^{j} z^{k}");
            }
        }
    }

    #[test]
    fn durfee_terms_dimension_one() {
        let (one, two) = durfee_terms(1, 12, 4).unwrap();
        for j in 0..=12 {
            let expect_one = if j >= 1 { 1 } else { 0 };
            let expect_two = if j >= 3 { 1 } else { 0 };
            assert_eq!(one.coeff(j, 1), Some(&BigInt::from(expect_one)));
            assert_eq!(two.coeff(j, 2), Some(&BigInt::from(expect_two)));
        }
        assert!(durfee_terms(0, 5, 5).is_err());
    }
}
