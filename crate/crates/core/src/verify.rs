//! Executable identity checks.
//!
//! Each check compares independently computed routes: series products,
//! closed-form sums, the counting table and explicit enumeration. A
//! mismatch is reported with the first offending exponent, never as an error.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::involution::{enumerate_fixed_points, orbit_audit};
use crate::partition::{base_size, count_distinct_signed, enumerate_distinct, DurfeeCategory, Sign};
use crate::qseries::{
    durfee_terms, euler_product, final_formula_sides, fixed_point_polynomial, rhs_fixed_points,
    rhs_general, sylvester_sides, QSeries, ZQSeries,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_dimension: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_size: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Mismatch {
    /// Which two routes disagreed.
    pub route: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_exponent: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z_exponent: Option<usize>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub identity: String,
    pub params: Params,
    pub verdict: Verdict,
    pub first_mismatch: Option<Mismatch>,
    pub elapsed_ms: f64,
}

impl VerificationReport {
    fn finish(identity: &str, params: Params, mismatch: Option<Mismatch>, started: Instant) -> Self {
        VerificationReport {
            identity: identity.to_string(),
            params,
            verdict: if mismatch.is_none() {
                Verdict::Pass
            } else {
                Verdict::Fail
            },
            first_mismatch: mismatch,
            elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}", self.identity)?;
        let p = &self.params;
        let fields = [
            ("m", p.m),
            ("order", p.order),
            ("zDegree", p.z_degree),
            ("maxDimension", p.max_dimension),
            ("maxSize", p.max_size),
        ];
        for (name, value) in fields {
            if let Some(v) = value {
                write!(f, " {name}={v}")?;
            }
        }
        if let Some(mm) = &self.first_mismatch {
            write!(f, " [{}", mm.route)?;
            if let Some(j) = mm.q_exponent {
                write!(f, " at q^{j}")?;
            }
            if let Some(k) = mm.z_exponent {
                write!(f, " z^{k}")?;
            }
            write!(f, ": {} != {}]", mm.lhs, mm.rhs)?;
        }
        Ok(())
    }
}

/// Coefficient-wise comparison of two `q`-series.
pub fn compare_q(route: &str, lhs: &QSeries, rhs: &QSeries) -> Option<Mismatch> {
    lhs.first_difference(rhs).map(|(k, a, b)| Mismatch {
        route: route.to_string(),
        q_exponent: Some(k),
        z_exponent: None,
        lhs: a.to_string(),
        rhs: b.to_string(),
    })
}

/// Coefficient-wise comparison of two `(z, q)`-series.
pub fn compare_zq(route: &str, lhs: &ZQSeries, rhs: &ZQSeries) -> Option<Mismatch> {
    lhs.first_difference(rhs).map(|(j, k, a, b)| Mismatch {
        route: route.to_string(),
        q_exponent: Some(j),
        z_exponent: Some(k),
        lhs: a.to_string(),
        rhs: b.to_string(),
    })
}

/// Product, closed form and counting table for `∏_{n>m} (1 - q^n)`.
pub fn check_general_formula(m: usize, order: usize) -> VerificationReport {
    let started = Instant::now();
    let product = euler_product(m, order);
    let closed = rhs_general(m, order);
    let counted = QSeries::from_coeffs(count_distinct_signed(m, order).signed_sum);
    let mismatch = compare_q("product vs closed form", &product, &closed)
        .or_else(|| compare_q("product vs counting table", &product, &counted));
    let params = Params {
        m: Some(m),
        order: Some(order),
        ..Params::default()
    };
    VerificationReport::finish("general-formula", params, mismatch, started)
}

/// Signed size tally of the enumerated fixed points, optionally restricted
/// to partitions with `parts` parts.
fn fixed_point_tally(m: usize, max_size: usize, parts: Option<usize>) -> QSeries {
    let mut tally = QSeries::zero(max_size);
    for fp in enumerate_fixed_points(m, max_size) {
        if parts.is_some_and(|n| fp.partition.len() != n) {
            continue;
        }
        let k = fp.weight.exponent;
        let delta = match fp.weight.sign {
            Sign::Plus => 1,
            Sign::Minus => -1,
        };
        let updated = tally.coeff(k).unwrap() + BigInt::from(delta);
        tally.set_coeff(k, updated);
    }
    tally
}

/// The fixed-point generating function against the product, the
/// enumerated fixed points against both, and (for `m >= 1`) the expansion
/// with its `1 - q^m` denominator cleared.
pub fn check_fixed_point_formula(m: usize, order: usize) -> VerificationReport {
    let started = Instant::now();
    let product = euler_product(m, order);
    let generating = rhs_fixed_points(m, order);
    let tally = fixed_point_tally(m, order, None);
    let mut mismatch = compare_q("fixed-point sum vs product", &generating, &product)
        .or_else(|| compare_q("enumerated fixed points vs product", &tally, &product));
    let mut n = 0;
    while mismatch.is_none() && base_size(n, m) <= order {
        let poly = fixed_point_polynomial(n, m);
        let counted = fixed_point_tally(m, poly.order(), Some(n));
        mismatch = compare_q(
            &format!("fixed points with {n} parts vs polynomial"),
            &counted,
            &poly,
        );
        n += 1;
    }
    if mismatch.is_none() && m >= 1 {
        let (lhs, rhs) = final_formula_sides(m, order).expect("m >= 1");
        mismatch = compare_q("cleared-denominator expansion", &lhs, &rhs);
    }
    let params = Params {
        m: Some(m),
        order: Some(order),
        ..Params::default()
    };
    VerificationReport::finish("fixed-point-formula", params, mismatch, started)
}

pub fn check_sylvester(order: usize, z_degree: usize) -> VerificationReport {
    let started = Instant::now();
    let (lhs, rhs) = sylvester_sides(order, z_degree);
    let mismatch = compare_zq("product vs Durfee sum", &lhs, &rhs);
    let params = Params {
        order: Some(order),
        z_degree: Some(z_degree),
        ..Params::default()
    };
    VerificationReport::finish("sylvester", params, mismatch, started)
}

/// Graded enumeration counts per Durfee dimension and category against the
/// two expanded terms, for all sizes `<= order` and dimensions `<= max_dimension`.
pub fn check_durfee_decomposition(order: usize, max_dimension: usize) -> VerificationReport {
    let started = Instant::now();
    // Partitions of size <= order have fewer than this many parts.
    let mut z_degree = 1;
    while z_degree * (z_degree + 1) / 2 <= order {
        z_degree += 1;
    }
    let mut counts: BTreeMap<(usize, DurfeeCategory), ZQSeries> = BTreeMap::new();
    for size in 0..=order {
        for lambda in enumerate_distinct(size, 0) {
            let info = lambda.durfee();
            if info.dimension == 0 || info.dimension > max_dimension {
                continue;
            }
            let grid = counts
                .entry((info.dimension, info.category))
                .or_insert_with(|| ZQSeries::zero(order, z_degree));
            let updated = grid.coeff(size, lambda.len()).unwrap() + 1;
            grid.set_coeff(size, lambda.len(), updated);
        }
    }
    let mut mismatch = None;
    for d in 1..=max_dimension {
        let (one, two) = durfee_terms(d, order, z_degree).expect("d >= 1");
        for (category, term) in [(DurfeeCategory::One, one), (DurfeeCategory::Two, two)] {
            let empty = ZQSeries::zero(order, z_degree);
            let counted = counts.get(&(d, category)).unwrap_or(&empty);
            let route = format!("dimension {d} category {category:?}");
            if let Some(mm) = compare_zq(&route, counted, &term) {
                mismatch = Some(mm);
                break;
            }
        }
        if mismatch.is_some() {
            break;
        }
    }
    let params = Params {
        order: Some(order),
        z_degree: Some(z_degree),
        max_dimension: Some(max_dimension),
        ..Params::default()
    };
    VerificationReport::finish("durfee-decomposition", params, mismatch, started)
}

/// Runs the exhaustive involution audit and reports its first violation.
pub fn check_involution(m: usize, max_size: usize) -> VerificationReport {
    let started = Instant::now();
    let report = orbit_audit(m, max_size);
    let mismatch = report.violations.first().map(|v| Mismatch {
        route: format!("{:?}", v.law),
        q_exponent: Some(v.witness.size()),
        z_exponent: None,
        lhs: format!("({})", v.witness),
        rhs: "law violated".into(),
    });
    let params = Params {
        m: Some(m),
        max_size: Some(max_size),
        ..Params::default()
    };
    VerificationReport::finish("involution", params, mismatch, started)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    General,
    Sylvester,
    Durfee,
    Involution,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteParams {
    pub m: usize,
    pub order: usize,
    pub max_size: usize,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            m: 1,
            order: 60,
            max_size: 30,
        }
    }
}

/// Runs the checks of a suite concurrently; reports come back in a fixed order.
pub fn run_suite(suite: Suite, params: SuiteParams) -> Vec<VerificationReport> {
    let SuiteParams { m, order, max_size } = params;
    type Job = Box<dyn Fn() -> VerificationReport + Send + Sync>;
    let mut jobs: Vec<Job> = Vec::new();
    if matches!(suite, Suite::All | Suite::General) {
        jobs.push(Box::new(move || check_general_formula(m, order)));
    }
    if matches!(suite, Suite::All | Suite::Sylvester) {
        jobs.push(Box::new(move || check_sylvester(order, order)));
    }
    if matches!(suite, Suite::All | Suite::Durfee) {
        // Enumeration cost grows quickly; the Durfee check is bounded by max_size.
        jobs.push(Box::new(move || check_durfee_decomposition(max_size, max_size)));
    }
    if matches!(suite, Suite::All | Suite::Involution) {
        jobs.push(Box::new(move || check_fixed_point_formula(m, order)));
        jobs.push(Box::new(move || check_involution(m, max_size)));
    }
    jobs.par_iter().map(|job| job()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn general_formula_passes() {
        for m in 0..=2 {
            assert!(check_general_formula(m, 80).passed());
        }
    }

    #[test]
    fn corrupted_coefficient_fails() {
        let product = euler_product(2, 30);
        let mut corrupted = product.clone();
        let bumped = corrupted.coeff(17).unwrap() + 1;
        corrupted.set_coeff(17, bumped);
        let mm = compare_q("product vs corrupted", &product, &corrupted).unwrap();
        assert_eq!(mm.q_exponent, Some(17));
        assert_ne!(mm.lhs, mm.rhs);
        assert!(compare_q("same", &product, &product).is_none());
    }

    #[test]
    fn fixed_point_formula_passes() {
        assert!(check_fixed_point_formula(0, 60).passed());
        assert!(check_fixed_point_formula(2, 60).passed());
    }

    #[test]
    fn sylvester_edge_cases() {
        assert!(check_sylvester(10, 1).passed());
        assert!(check_sylvester(10, 0).passed());
        assert!(check_sylvester(25, 25).passed());
    }

    #[test]
    fn durfee_passes() {
        let r = check_durfee_decomposition(20, 4);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn suite_order_is_canonical() {
        let reports = run_suite(
            Suite::All,
            SuiteParams {
                m: 1,
                order: 20,
                max_size: 15,
            },
        );
        let names: Vec<_> = reports.iter().map(|r| r.identity.as_str()).collect();
        assert_eq!(
            names,
            vec![
                "general-formula",
                "sylvester",
                "durfee-decomposition",
                "fixed-point-formula",
                "involution"
            ]
        );
        assert!(reports.iter().all(VerificationReport::passed));
    }
}
