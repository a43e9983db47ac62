//! Partitions into distinct parts, Durfee statistics and signed counting.
//!
//! A [`DistinctPartition`] stores its parts largest first. Row 1 is the
//! longest row of the Ferrers diagram (drawn at the bottom) and row `n` is
//! the shortest, "top" row.

use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A strictly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct DistinctPartition {
    parts: Vec<usize>,
}

impl DistinctPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(&p) = parts.iter().find(|&&p| p == 0) {
            return Err(Error::NonPositivePart(p));
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] <= w[1]) {
            return Err(Error::NotStrictlyDecreasing {
                prev: w[0],
                next: w[1],
            });
        }
        Ok(DistinctPartition { parts })
    }

    /// Builds a partition from parts already known to be strictly decreasing and positive.
    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] > w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        DistinctPartition { parts }
    }

    pub fn empty() -> Self {
        DistinctPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    /// Number of parts, `n`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`, the sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length of row `i` (1-based, row 1 is the largest part).
    pub fn row(&self, i: usize) -> usize {
        self.parts[i - 1]
    }

    /// Length of the top row, `t(λ) = λ_n`. Zero for the empty partition.
    pub fn top(&self) -> usize {
        self.parts.last().copied().unwrap_or(0)
    }

    pub fn smallest(&self) -> Option<usize> {
        self.parts.last().copied()
    }

    pub fn largest(&self) -> Option<usize> {
        self.parts.first().copied()
    }

    /// Returns an error naming the first part that is `<= m`.
    pub fn check_parts_exceed(&self, m: usize) -> Result<()> {
        match self.parts.iter().rev().find(|&&p| p <= m) {
            Some(&part) => Err(Error::PartTooSmall { part, m }),
            None => Ok(()),
        }
    }

    /// `w(λ) = (-1)^n q^{|λ|}`.
    pub fn weight(&self) -> SignedMonomial {
        SignedMonomial {
            sign: Sign::from_parity(self.len()),
            exponent: self.size(),
        }
    }

    pub fn durfee(&self) -> DurfeeInfo {
        // Parts strictly decrease, so `λ_i >= i` holds on a prefix.
        let dimension = self
            .parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count();
        let category = match self.parts.get(dimension) {
            Some(&p) if p == dimension && dimension > 0 => DurfeeCategory::Two,
            _ => DurfeeCategory::One,
        };
        DurfeeInfo {
            dimension,
            category,
        }
    }
}

impl fmt::Display for DistinctPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for DistinctPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

impl TryFrom<Vec<usize>> for DistinctPartition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        DistinctPartition::new(parts)
    }
}

impl From<DistinctPartition> for Vec<usize> {
    fn from(p: DistinctPartition) -> Self {
        p.parts
    }
}

/// Parses comma-separated parts, largest first. Whitespace is ignored and
/// the empty string is the empty partition.
pub fn parse_partition(text: &str) -> Result<DistinctPartition> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Ok(DistinctPartition::empty());
    }
    let mut parts = Vec::new();
    for token in compact.split(',') {
        let value: usize = token.parse().map_err(|_| Error::InvalidToken {
            token: token.to_string(),
        })?;
        parts.push(value);
    }
    DistinctPartition::new(parts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^k`.
    pub fn from_parity(k: usize) -> Self {
        if k.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// `sign * q^exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedMonomial {
    pub sign: Sign,
    pub exponent: usize,
}

impl Neg for SignedMonomial {
    type Output = SignedMonomial;

    fn neg(self) -> SignedMonomial {
        SignedMonomial {
            sign: -self.sign,
            exponent: self.exponent,
        }
    }
}

impl fmt::Display for SignedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.sign == Sign::Plus { '+' } else { '-' };
        write!(f, "{s}q^{}", self.exponent)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DurfeeCategory {
    /// No part directly above the square has length `d`.
    One,
    /// `λ_{d+1} = d`.
    Two,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DurfeeInfo {
    pub dimension: usize,
    pub category: DurfeeCategory,
}

/// A weakly decreasing sequence of nonnegative integers that fits in a
/// `rows x width` box.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoxPartition {
    parts: Vec<usize>,
    width: usize,
}

impl BoxPartition {
    pub fn new(parts: Vec<usize>, width: usize) -> Result<Self> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing || parts.first().is_some_and(|&p| p > width) {
            return Err(Error::InvalidBox { parts, width });
        }
        Ok(BoxPartition { parts, width })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn first(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn last(&self) -> usize {
        self.parts.last().copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `λ* + μ`: adds the box row-wise onto `base_partition(rows, m)`.
    pub fn lift(&self, m: usize) -> DistinctPartition {
        DistinctPartition::from_parts_unchecked(lift_parts(&self.parts, m))
    }
}

pub(crate) fn lift_parts(mu: &[usize], m: usize) -> Vec<usize> {
    let n = mu.len();
    mu.iter()
        .enumerate()
        .map(|(i, &x)| x + 2 * n - (i + 1) + m)
        .collect()
}

/// `λ* = (2n-1+m, 2n-2+m, ..., n+m)`, the smallest fixed point with `n` parts.
pub fn base_partition(n: usize, m: usize) -> DistinctPartition {
    DistinctPartition::from_parts_unchecked((1..=n).map(|i| 2 * n - i + m).collect())
}

/// `|λ*| = (3n^2 - n)/2 + nm`.
pub fn base_size(n: usize, m: usize) -> usize {
    (3 * n * n - n) / 2 + n * m
}

/// Writes `λ` as `λ* + μ` with `μ_i = λ_i - (2n - i) - m`.
pub fn mu_decompose(lambda: &DistinctPartition, m: usize) -> Result<BoxPartition> {
    let n = lambda.len();
    if n == 0 {
        return Err(Error::EmptyPartition);
    }
    let mut mu = Vec::with_capacity(n);
    for (i, &p) in lambda.parts().iter().enumerate() {
        let offset = 2 * n - (i + 1) + m;
        if p < offset {
            return Err(Error::NotInStaircaseForm(format!(
                "row {} has length {p} < {offset}",
                i + 1
            )));
        }
        mu.push(p - offset);
    }
    if mu.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotInStaircaseForm(format!(
            "offsets {mu:?} are not weakly decreasing"
        )));
    }
    let width = mu[0];
    Ok(BoxPartition { parts: mu, width })
}

/// Visits every weakly decreasing `rows`-tuple with entries `<= width` and
/// sum `<= max_sum`, in decreasing lexicographic order.
pub fn for_each_box<F: FnMut(&[usize])>(rows: usize, width: usize, max_sum: usize, mut f: F) {
    fn go<F: FnMut(&[usize])>(
        buf: &mut Vec<usize>,
        rows: usize,
        cap: usize,
        budget: usize,
        f: &mut F,
    ) {
        if buf.len() == rows {
            f(buf);
            return;
        }
        for x in (0..=cap.min(budget)).rev() {
            buf.push(x);
            go(buf, rows, x, budget - x, f);
            buf.pop();
        }
    }
    let mut buf = Vec::with_capacity(rows);
    go(&mut buf, rows, width, max_sum, &mut f);
}

/// Whether `r` is a sum of distinct integers from `(m, cap]`.
///
/// `k`-subsets of a run of consecutive integers attain every sum between
/// the `k` smallest and the `k` largest, so it suffices to scan `k`.
fn representable(r: usize, m: usize, cap: usize) -> bool {
    if r == 0 {
        return true;
    }
    if cap <= m {
        return false;
    }
    let available = cap - m;
    let mut k = 1;
    while k <= available {
        let tri = k * (k - 1) / 2;
        let lo = k * (m + 1) + tri;
        if lo > r {
            return false;
        }
        let hi = k * cap - tri;
        if r <= hi {
            return true;
        }
        k += 1;
    }
    false
}

/// Streams partitions of `size` into distinct parts `> m` in decreasing
/// lexicographic order.
#[derive(Clone, Debug)]
pub struct DistinctPartitions {
    m: usize,
    parts: Vec<usize>,
    started: bool,
    done: bool,
}

impl DistinctPartitions {
    /// Appends the lexicographically largest completion of `rem` using parts `< cap`.
    fn fill(&mut self, mut rem: usize, mut cap: usize) {
        while rem > 0 {
            let start = rem.min(cap.saturating_sub(1));
            let next = (self.m + 1..=start)
                .rev()
                .find(|&x| representable(rem - x, self.m, x - 1))
                .expect("fill called on a representable remainder");
            self.parts.push(next);
            rem -= next;
            cap = next;
        }
    }

    fn advance(&mut self) -> bool {
        let mut rem = 0;
        while let Some(p) = self.parts.pop() {
            rem += p;
            for c in (self.m + 1..p).rev() {
                if c <= rem && representable(rem - c, self.m, c - 1) {
                    self.parts.push(c);
                    self.fill(rem - c, c);
                    return true;
                }
            }
        }
        false
    }
}

impl Iterator for DistinctPartitions {
    type Item = DistinctPartition;

    fn next(&mut self) -> Option<DistinctPartition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
        } else if self.parts.is_empty() || !self.advance() {
            self.done = true;
            return None;
        }
        Some(DistinctPartition::from_parts_unchecked(self.parts.clone()))
    }
}

/// Every partition of `size` into distinct parts greater than `m`.
pub fn enumerate_distinct(size: usize, m: usize) -> DistinctPartitions {
    let mut it = DistinctPartitions {
        m,
        parts: Vec::new(),
        started: false,
        done: false,
    };
    if representable(size, m, size) {
        it.fill(size, size + 1);
    } else {
        it.done = true;
    }
    it
}

/// Per-size counts of partitions into distinct parts `> m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinctCountTable {
    pub m: usize,
    /// `count[N]`: number of partitions of `N`.
    pub count: Vec<BigUint>,
    /// `signed_sum[N]`: sum of `(-1)^{#parts}` over those partitions.
    pub signed_sum: Vec<BigInt>,
}

impl DistinctCountTable {
    pub fn max_size(&self) -> usize {
        self.count.len() - 1
    }
}

/// 0/1 knapsack over the allowed parts; no enumeration.
pub fn count_distinct_signed(m: usize, max_size: usize) -> DistinctCountTable {
    let mut count = vec![BigUint::zero(); max_size + 1];
    let mut signed_sum = vec![BigInt::zero(); max_size + 1];
    count[0] = BigUint::one();
    signed_sum[0] = BigInt::one();
    for part in (m + 1)..=max_size {
        for total in (part..=max_size).rev() {
            let (lo, hi) = count.split_at_mut(total);
            hi[0] += &lo[total - part];
            let (lo, hi) = signed_sum.split_at_mut(total);
            hi[0] -= &lo[total - part];
        }
    }
    DistinctCountTable {
        m,
        count,
        signed_sum,
    }
}
