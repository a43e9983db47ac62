//! The extended Franklin involution `I` on partitions into distinct parts `> m`.
//!
//! `τ` moves the top row onto the outside of the `m`-landing staircase and
//! `σ` lifts the staircase into a new top row. `I` applies whichever move is
//! allowed and fixes everything else. Fixed points are exactly `λ* + μ`
//! with `μ₁ <= m`, or `μ₁ = m + 1` and `μ_n >= 1`.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json::decimal;
use crate::partition::{
    base_size, count_distinct_signed, enumerate_distinct, for_each_box, lift_parts, mu_decompose,
    DistinctPartition, Sign, SignedMonomial,
};
use crate::staircase::{staircase, Staircase};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MoveCase {
    TauMoved,
    SigmaMoved,
    Fixed,
}

impl fmt::Display for MoveCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveCase::TauMoved => "TauMoved",
            MoveCase::SigmaMoved => "SigmaMoved",
            MoveCase::Fixed => "Fixed",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvolutionResult {
    pub image: DistinctPartition,
    pub case: MoveCase,
}

/// `t(λ) <= s_m(λ)` and `t(λ) < m + n`.
fn tau_guard(lambda: &DistinctPartition, m: usize, s: &Staircase) -> bool {
    let t = lambda.top();
    t <= s.len() && t < m + lambda.len()
}

/// `t(λ) - |T(λ) ∩ S_m(λ)| > s_m(λ)`.
fn sigma_guard(lambda: &DistinctPartition, s: &Staircase) -> bool {
    lambda.top() - s.top_overlap() > s.len()
}

fn apply_sigma(lambda: &DistinctPartition, s: &Staircase) -> Result<DistinctPartition> {
    let mut parts = lambda.parts().to_vec();
    for cell in s.cells() {
        parts[cell.row - 1] -= 1;
    }
    parts.push(s.len());
    DistinctPartition::new(parts).map_err(|e| Error::PreconditionViolated {
        op: "sigma",
        reason: format!("image of {lambda} is not a distinct partition: {e}"),
    })
}

fn apply_tau(lambda: &DistinctPartition, m: usize, s: &Staircase) -> Result<DistinctPartition> {
    let n = lambda.len();
    let t = lambda.top();
    let mut parts = lambda.parts()[..n - 1].to_vec();
    // Landings in the t-m-1 lowest rows each get a cell placed on top of them.
    let covered: Vec<usize> = s
        .landing_rows()
        .iter()
        .copied()
        .filter(|&r| r + m < t)
        .collect();
    for &r in &covered {
        parts[r] += 1;
    }
    parts[0] += m - covered.len();
    for part in parts.iter_mut().take(t - m) {
        *part += 1;
    }
    DistinctPartition::new(parts).map_err(|e| Error::PreconditionViolated {
        op: "tau",
        reason: format!("image of {lambda} is not a distinct partition: {e}"),
    })
}

fn checked_staircase(lambda: &DistinctPartition, m: usize, op: &'static str) -> Result<Staircase> {
    if lambda.is_empty() {
        return Err(Error::PreconditionViolated {
            op,
            reason: "the empty partition has no top row".into(),
        });
    }
    staircase(lambda, m)
}

/// Moves the staircase into a new top row.
pub fn sigma(lambda: &DistinctPartition, m: usize) -> Result<DistinctPartition> {
    let s = checked_staircase(lambda, m, "sigma")?;
    if !sigma_guard(lambda, &s) {
        return Err(Error::PreconditionViolated {
            op: "sigma",
            reason: format!(
                "t - |T ∩ S| = {} does not exceed s_m = {}",
                lambda.top() - s.top_overlap(),
                s.len()
            ),
        });
    }
    apply_sigma(lambda, &s)
}

/// Spreads the top row over the outside of the staircase.
pub fn tau(lambda: &DistinctPartition, m: usize) -> Result<DistinctPartition> {
    let s = checked_staircase(lambda, m, "tau")?;
    if !tau_guard(lambda, m, &s) {
        return Err(Error::PreconditionViolated {
            op: "tau",
            reason: format!(
                "needs t <= s_m and t < m + n, got t = {}, s_m = {}, m + n = {}",
                lambda.top(),
                s.len(),
                m + lambda.len()
            ),
        });
    }
    apply_tau(lambda, m, &s)
}

pub fn involute(lambda: &DistinctPartition, m: usize) -> Result<InvolutionResult> {
    if lambda.is_empty() {
        return Ok(InvolutionResult {
            image: lambda.clone(),
            case: MoveCase::Fixed,
        });
    }
    let s = staircase(lambda, m)?;
    let tau_ok = tau_guard(lambda, m, &s);
    let sigma_ok = sigma_guard(lambda, &s);
    assert!(
        !(tau_ok && sigma_ok),
        "tau and sigma guards both hold for {lambda} (m = {m})"
    );
    let (image, case) = if tau_ok {
        (apply_tau(lambda, m, &s)?, MoveCase::TauMoved)
    } else if sigma_ok {
        (apply_sigma(lambda, &s)?, MoveCase::SigmaMoved)
    } else {
        (lambda.clone(), MoveCase::Fixed)
    };
    Ok(InvolutionResult { image, case })
}

/// Decides fixedness from the shape of `λ - λ*` alone.
pub fn is_fixed_criterion(lambda: &DistinctPartition, m: usize) -> bool {
    if lambda.is_empty() {
        return true;
    }
    match mu_decompose(lambda, m) {
        Ok(mu) => mu.first() <= m || (mu.first() == m + 1 && mu.last() >= 1),
        Err(_) => false,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPoint {
    pub partition: DistinctPartition,
    pub weight: SignedMonomial,
}

/// Visits the offset vector `μ` of every fixed point with size `<= max_size`,
/// together with its part count and size.
///
/// For each `n` the `μ` inside an `n x m` box come first, then the `μ` with
/// `μ₁ = m + 1` and `μ_n >= 1`.
pub fn for_each_fixed_offset<F: FnMut(usize, &[usize], usize)>(m: usize, max_size: usize, mut f: F) {
    let mut n = 0;
    loop {
        let base = base_size(n, m);
        if base > max_size {
            break;
        }
        let budget = max_size - base;
        for_each_box(n, m, budget, |mu| {
            f(n, mu, base + mu.iter().sum::<usize>());
        });
        if n >= 1 && n + m <= budget {
            let mut tilde = vec![0; n];
            tilde[0] = m + 1;
            for_each_box(n - 1, m, budget - n - m, |nu| {
                for (slot, &x) in tilde[1..].iter_mut().zip(nu) {
                    *slot = x + 1;
                }
                f(n, &tilde, base + n + m + nu.iter().sum::<usize>());
            });
        }
        n += 1;
    }
}

pub fn enumerate_fixed_points(m: usize, max_size: usize) -> Vec<FixedPoint> {
    let mut out = Vec::new();
    for_each_fixed_offset(m, max_size, |_, mu, _| {
        let partition = DistinctPartition::from_parts_unchecked(lift_parts(mu, m));
        let weight = partition.weight();
        out.push(FixedPoint { partition, weight });
    });
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Law {
    /// `I(I(λ)) != λ`.
    NotInvolutive,
    /// A moved partition kept its sign.
    WeightNotReversed,
    SizeChanged,
    /// The image has a part `<= m`.
    PartTooSmall,
    /// `I` fixes `λ` but the `μ` criterion disagrees, or vice versa.
    FixedCriterionMismatch,
    /// `σ(τ(λ)) != λ`.
    SigmaTauNotInverse,
    /// `τ(σ(λ)) != λ`.
    TauSigmaNotInverse,
    /// `s_m(τ(λ)) != t(λ)`.
    TauStaircaseLength,
    /// `t(σ(λ)) != s_m(λ)`.
    SigmaTopLength,
    /// `s_m` outside `[m+1, m+n]`.
    StaircaseBounds,
    GuardsOverlap,
    /// A fixed point without `t >= m+n` and `s_m = m+n`.
    FixedPointShape,
    /// `t - |T ∩ S| != μ₁ + n - 1` although `s_m = m+n`.
    TopExcessFormula,
    MoveFailed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub law: Law,
    pub witness: DistinctPartition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AuditReport {
    pub m: usize,
    pub max_size: usize,
    pub total_partitions: u64,
    pub paired_count: u64,
    pub fixed_count: u64,
    pub violations: Vec<Violation>,
}

impl AuditReport {
    fn empty(m: usize, max_size: usize) -> Self {
        AuditReport {
            m,
            max_size,
            total_partitions: 0,
            paired_count: 0,
            fixed_count: 0,
            violations: Vec::new(),
        }
    }

    /// Combines reports over disjoint size ranges.
    pub fn merge(mut self, other: AuditReport) -> AuditReport {
        self.max_size = self.max_size.max(other.max_size);
        self.total_partitions += other.total_partitions;
        self.paired_count += other.paired_count;
        self.fixed_count += other.fixed_count;
        self.violations.extend(other.violations);
        self
    }

    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

fn audit_one(lambda: &DistinctPartition, m: usize, report: &mut AuditReport) {
    let mut flag = |law| {
        report.violations.push(Violation {
            law,
            witness: lambda.clone(),
        })
    };
    report.total_partitions += 1;
    let result = match involute(lambda, m) {
        Ok(r) => r,
        Err(_) => {
            flag(Law::MoveFailed);
            return;
        }
    };
    let fixed = result.case == MoveCase::Fixed;
    if fixed {
        report.fixed_count += 1;
    } else {
        report.paired_count += 1;
    }
    if fixed != is_fixed_criterion(lambda, m) {
        flag(Law::FixedCriterionMismatch);
    }
    let image = &result.image;
    if image.size() != lambda.size() {
        flag(Law::SizeChanged);
    }
    if image.check_parts_exceed(m).is_err() {
        flag(Law::PartTooSmall);
    }
    if !fixed && image.weight() != -lambda.weight() {
        flag(Law::WeightNotReversed);
    }
    match involute(image, m) {
        Ok(back) if &back.image == lambda => {}
        _ => flag(Law::NotInvolutive),
    }
    if lambda.is_empty() {
        return;
    }

    let n = lambda.len();
    let t = lambda.top();
    let s = match staircase(lambda, m) {
        Ok(s) => s,
        Err(_) => {
            flag(Law::MoveFailed);
            return;
        }
    };
    if !(m < s.len() && s.len() <= m + n) {
        flag(Law::StaircaseBounds);
    }
    let tau_ok = tau_guard(lambda, m, &s);
    let sigma_ok = sigma_guard(lambda, &s);
    if tau_ok && sigma_ok {
        flag(Law::GuardsOverlap);
    }
    if tau_ok {
        match tau(lambda, m) {
            Ok(mu) => {
                if staircase(&mu, m).map(|s| s.len()).ok() != Some(t) {
                    flag(Law::TauStaircaseLength);
                }
                if sigma(&mu, m).ok().as_ref() != Some(lambda) {
                    flag(Law::SigmaTauNotInverse);
                }
            }
            Err(_) => flag(Law::MoveFailed),
        }
    }
    if sigma_ok {
        match sigma(lambda, m) {
            Ok(mu) => {
                if mu.top() != s.len() {
                    flag(Law::SigmaTopLength);
                }
                if tau(&mu, m).ok().as_ref() != Some(lambda) {
                    flag(Law::TauSigmaNotInverse);
                }
            }
            Err(_) => flag(Law::MoveFailed),
        }
    }
    if fixed && !(t >= m + n && s.len() == m + n) {
        flag(Law::FixedPointShape);
    }
    if s.len() == m + n {
        if let Ok(mu) = mu_decompose(lambda, m) {
            if t - s.top_overlap() != mu.first() + n - 1 {
                flag(Law::TopExcessFormula);
            }
        }
    }
}

/// Exhaustively checks the involution laws on every partition of size
/// `<= max_size` into distinct parts `> m`. Sizes are audited in parallel.
pub fn orbit_audit(m: usize, max_size: usize) -> AuditReport {
    (0..=max_size)
        .into_par_iter()
        .map(|size| {
            let mut report = AuditReport::empty(m, max_size);
            for lambda in enumerate_distinct(size, m) {
                audit_one(&lambda, m, &mut report);
            }
            report
        })
        .reduce(|| AuditReport::empty(m, max_size), AuditReport::merge)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SizeStats {
    pub size: usize,
    #[serde(with = "decimal")]
    pub partitions: BigUint,
    pub fixed: u64,
    pub fixed_positive: u64,
    pub fixed_negative: u64,
    /// Fixed points of opposite sign at this size that `I` leaves unpaired.
    pub residual: u64,
    #[serde(with = "decimal")]
    pub product_coefficient: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CancellationTable {
    pub m: usize,
    pub max_size: usize,
    pub per_size: Vec<SizeStats>,
}

impl CancellationTable {
    pub fn at(&self, size: usize) -> Option<&SizeStats> {
        self.per_size.get(size)
    }
}

/// Totals come from the counting table, fixed points from box enumeration.
pub fn cancellation_stats(m: usize, max_size: usize) -> CancellationTable {
    let table = count_distinct_signed(m, max_size);
    let mut positive = vec![0u64; max_size + 1];
    let mut negative = vec![0u64; max_size + 1];
    for_each_fixed_offset(m, max_size, |n, _, size| match Sign::from_parity(n) {
        Sign::Plus => positive[size] += 1,
        Sign::Minus => negative[size] += 1,
    });
    let per_size = table
        .count
        .into_iter()
        .enumerate()
        .map(|(size, partitions)| {
            let (pos, neg) = (positive[size], negative[size]);
            SizeStats {
                size,
                partitions,
                fixed: pos + neg,
                fixed_positive: pos,
                fixed_negative: neg,
                residual: pos.min(neg),
                product_coefficient: BigInt::from(pos) - BigInt::from(neg),
            }
        })
        .collect();
    CancellationTable {
        m,
        max_size,
        per_size,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::base_partition;

    fn p(parts: &[usize]) -> DistinctPartition {
        DistinctPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma(&p(&[11, 10, 8, 5]), 1).unwrap(), p(&[10, 8, 7, 5, 4]));
        assert_eq!(sigma(&p(&[11, 10, 9, 7]), 1).unwrap(), p(&[10, 9, 7, 6, 5]));
        assert_eq!(sigma(&p(&[3]), 0).unwrap(), p(&[2, 1]));
        assert!(matches!(
            sigma(&p(&[9, 7, 6, 5]), 1),
            Err(Error::PreconditionViolated { op: "sigma", .. })
        ));
    }

    #[test]
    fn tau_examples() {
        assert_eq!(tau(&p(&[10, 8, 7, 5, 4]), 1).unwrap(), p(&[11, 10, 8, 5]));
        assert_eq!(tau(&p(&[9, 8, 7, 5, 4]), 1).unwrap(), p(&[11, 9, 8, 5]));
        assert!(matches!(
            tau(&p(&[11, 10, 8, 5]), 1),
            Err(Error::PreconditionViolated { op: "tau", .. })
        ));
    }

    /// Searches every partition of the same size for a `σ`-preimage.
    fn sigma_preimages(lambda: &DistinctPartition, m: usize) -> Vec<DistinctPartition> {
        enumerate_distinct(lambda.size(), m)
            .filter(|nu| sigma(nu, m).ok().as_ref() == Some(lambda))
            .collect()
    }

    #[test]
    fn tau_guard_boundary_probe() {
        let lambda = p(&[10, 8, 7, 6, 5]);
        let preimages = sigma_preimages(&lambda, 1);
        assert_eq!(preimages, vec![p(&[11, 10, 8, 7])]);
        assert_eq!(tau(&lambda, 1).unwrap(), preimages[0]);
    }

    #[test]
    fn tau_matches_sigma_preimage_search() {
        for m in 0..=3 {
            for size in 1..=28 {
                for lambda in enumerate_distinct(size, m) {
                    let s = staircase(&lambda, m).unwrap();
                    if tau_guard(&lambda, m, &s) {
                        assert_eq!(vec![tau(&lambda, m).unwrap()], sigma_preimages(&lambda, m));
                    }
                }
            }
        }
    }

    #[test]
    fn involute_examples() {
        let r = involute(&p(&[9, 7, 6, 5]), 1).unwrap();
        assert_eq!(r.case, MoveCase::Fixed);
        assert_eq!(r.image, p(&[9, 7, 6, 5]));
        assert_eq!(involute(&p(&[10, 9, 7, 6]), 1).unwrap().case, MoveCase::Fixed);
        let r = involute(&p(&[11, 10, 8, 5]), 1).unwrap();
        assert_eq!(r.case, MoveCase::SigmaMoved);
        assert_eq!(r.image, p(&[10, 8, 7, 5, 4]));
        let r = involute(&DistinctPartition::empty(), 4).unwrap();
        assert_eq!(r.case, MoveCase::Fixed);
        assert!(involute(&p(&[5, 2]), 2).is_err());
    }

    #[test]
    fn fixed_criterion_examples() {
        assert!(is_fixed_criterion(&p(&[14, 13, 12, 11]), 3));
        for n in 0..6 {
            assert!(is_fixed_criterion(&base_partition(n, 2), 2));
        }
        assert!(!is_fixed_criterion(&p(&[11, 10, 8, 5]), 1));
        assert!(is_fixed_criterion(&DistinctPartition::empty(), 1));
    }

    #[test]
    fn fixed_points_for_m_one_two_parts() {
        let mut sizes: Vec<_> = enumerate_fixed_points(1, 40)
            .into_iter()
            .filter(|f| f.partition.len() == 2)
            .map(|f| f.partition.size())
            .collect();
        sizes.sort();
        assert_eq!(sizes, vec![7, 8, 9, 10, 11]);
    }

    #[test]
    fn fixed_points_for_m_zero_are_pentagonal() {
        let mut got: Vec<_> = enumerate_fixed_points(0, 100)
            .into_iter()
            .map(|f| f.partition)
            .collect();
        got.sort();
        let mut expected = Vec::new();
        for n in 0..10usize {
            let a: Vec<usize> = (n..2 * n).rev().collect();
            let b: Vec<usize> = (n + 1..=2 * n).rev().collect();
            for parts in [a, b] {
                if parts.iter().sum::<usize>() <= 100 {
                    expected.push(p(&parts));
                }
            }
        }
        expected.sort();
        expected.dedup();
        assert_eq!(got, expected);
    }

    #[test]
    fn fixed_points_size_fifty_witnesses() {
        let fixed = enumerate_fixed_points(3, 50);
        let find = |parts: &[usize]| fixed.iter().find(|f| f.partition.parts() == parts).cloned();
        let a = find(&[14, 13, 12, 11]).unwrap();
        let b = find(&[12, 11, 10, 9, 8]).unwrap();
        assert_eq!(a.weight.sign, Sign::Plus);
        assert_eq!(b.weight.sign, Sign::Minus);
        assert_eq!(a.weight.exponent, 50);
        assert_eq!(b.weight.exponent, 50);
    }

    #[test]
    fn fixed_points_unique_and_really_fixed() {
        for m in 0..=4 {
            let fixed = enumerate_fixed_points(m, 45);
            let mut seen = std::collections::HashSet::new();
            for f in &fixed {
                assert!(seen.insert(f.partition.clone()));
                assert_eq!(involute(&f.partition, m).unwrap().case, MoveCase::Fixed);
            }
            let brute: usize = (0..=45)
                .map(|size| {
                    enumerate_distinct(size, m)
                        .filter(|l| involute(l, m).unwrap().case == MoveCase::Fixed)
                        .count()
                })
                .sum();
            assert_eq!(brute, fixed.len());
        }
    }

    #[test]
    fn audit_is_clean() {
        for m in 0..=3 {
            let report = orbit_audit(m, 30);
            assert!(report.is_clean(), "{:?}", &report.violations[..report.violations.len().min(5)]);
            assert_eq!(report.paired_count % 2, 0);
            assert_eq!(report.total_partitions, report.paired_count + report.fixed_count);
        }
    }

    #[test]
    fn stats_small_cases() {
        let stats = cancellation_stats(3, 50);
        let at50 = stats.at(50).unwrap();
        assert!(at50.fixed_positive >= 1 && at50.fixed_negative >= 1);
        let table = count_distinct_signed(3, 50);
        for s in &stats.per_size {
            assert_eq!(s.product_coefficient, table.signed_sum[s.size]);
        }
        let franklin = cancellation_stats(0, 120);
        assert!(franklin.per_size.iter().all(|s| s.residual == 0 && s.fixed <= 1));
    }
}
