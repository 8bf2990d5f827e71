//! Integer partitions and the combinatorial operations built on them:
//! conjugation, dominance order, hook lengths, p-cores via beta-numbers,
//! and the difference-multiset operator used by the tensor-cube argument.
//!
//! Parts are stored as machine integers (`u32`); parts and sizes up to
//! `2^32 - 1` are representable, far beyond any verifier workload here.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty sequence
/// is the (unique) partition of 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, rejecting non-positive parts and increases.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        for (i, &p) in parts.iter().enumerate() {
            if p == 0 {
                return Err(Error::NonPositivePart { index: i });
            }
            if i > 0 && parts[i - 1] < p {
                return Err(Error::NotWeaklyDecreasing { index: i });
            }
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Caller guarantees the parts are positive and weakly decreasing.
    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The part at `index`, reading 0 beyond the last row.
    pub fn part(&self, index: usize) -> u32 {
        self.parts.get(index).copied().unwrap_or(0)
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Cell-wise containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// The conjugate partition: row lengths become column lengths.
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut conj = vec![0u32; cols];
        for &p in &self.parts {
            conj[(p - 1) as usize] += 1;
        }
        for j in (0..cols - 1).rev() {
            conj[j] += conj[j + 1];
        }
        Partition::from_sorted_unchecked(conj)
    }

    /// Dominance order: true iff every prefix sum of `self` is at least
    /// the corresponding prefix sum of `other`. Only defined for equal
    /// sizes.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        let mut a = 0u64;
        let mut b = 0u64;
        for i in 0..self.len().max(other.len()) {
            a += u64::from(self.part(i));
            b += u64::from(other.part(i));
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Hook lengths, row by row. The hook of cell (i, j) counts the cells
    /// to its right, the cells below it, and itself.
    pub fn hook_lengths(&self) -> Vec<Vec<u32>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| {
                (0..row as usize)
                    .map(|j| row - j as u32 + conj.part(j) - i as u32 - 1)
                    .collect()
            })
            .collect()
    }

    /// The p-core: what remains after all rim hooks of size `p` are
    /// removed. Computed on the abacus (beta-numbers), where removing a
    /// rim hook is sliding a bead down its runner; pushing every bead as
    /// far down as possible lands on the core no matter the order.
    pub fn p_core(&self, p: u32) -> Partition {
        assert!(p >= 2, "p-core requires p >= 2");
        let beads = self.parts.len();
        let beta = beta_set(self, beads);
        let mut runner_counts = vec![0u64; p as usize];
        for &b in &beta {
            runner_counts[(b % u64::from(p)) as usize] += 1;
        }
        let mut packed: Vec<u64> = Vec::with_capacity(beads);
        for (r, &count) in runner_counts.iter().enumerate() {
            for j in 0..count {
                packed.push(r as u64 + j * u64::from(p));
            }
        }
        packed.sort_unstable_by(|a, b| b.cmp(a));
        partition_from_beta(&packed)
    }

    /// True iff no part value occurs `p` or more times.
    pub fn is_p_regular(&self, p: u32) -> bool {
        assert!(p >= 2, "p-regularity requires p >= 2");
        let mut run = 1u32;
        for w in self.parts.windows(2) {
            if w[0] == w[1] {
                run += 1;
                if run >= p {
                    return false;
                }
            } else {
                run = 1;
            }
        }
        true
    }

    /// True iff all parts are pairwise distinct (2-regularity).
    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// The difference-multiset operator: for each i >= 1 (1-indexed),
    /// take i parts of size `self[i] - self[i+1]` (reading 0 past the
    /// last row), discard zero differences, and sort. The result is a
    /// partition of the same size.
    pub fn cee(&self) -> Partition {
        let mut out: Vec<u32> = Vec::new();
        for i in 0..self.parts.len() {
            let next = self.part(i + 1);
            let diff = self.parts[i] - next;
            if diff > 0 {
                for _ in 0..=i {
                    out.push(diff);
                }
            }
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        Partition::from_sorted_unchecked(out)
    }
}

/// The staircase partition (n, n-1, ..., 1) of size n(n+1)/2.
pub fn staircase(n: u32) -> Result<Partition> {
    if n == 0 {
        return Err(Error::StaircaseIndexZero);
    }
    Ok(Partition::from_sorted_unchecked((1..=n).rev().collect()))
}

/// All partitions of `n` in canonical order: descending lexicographic,
/// so (n) comes first and (1^n) last.
pub fn enumerate_partitions(n: u64) -> Vec<Partition> {
    fn go(remaining: u64, max_part: u64, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_sorted_unchecked(current.clone()));
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            current.push(part as u32);
            go(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `n` with pairwise distinct parts, canonical order.
pub fn enumerate_distinct_partitions(n: u64) -> Vec<Partition> {
    fn go(remaining: u64, max_part: u64, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_sorted_unchecked(current.clone()));
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            current.push(part as u32);
            go(remaining - part, part - 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All subpartitions of `lambda` (cell-wise contained) of size `target`.
pub(crate) fn subpartitions_of_size(lambda: &Partition, target: u64) -> Vec<Partition> {
    fn go(
        lambda: &Partition,
        row: usize,
        remaining: u64,
        cap: u32,
        current: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition::from_sorted_unchecked(current.clone()));
            return;
        }
        if row >= lambda.len() {
            return;
        }
        let hi = lambda.part(row).min(cap).min(remaining.min(u64::from(u32::MAX)) as u32);
        for k in (1..=hi).rev() {
            current.push(k);
            go(lambda, row + 1, remaining - u64::from(k), k, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 0, target, u32::MAX, &mut Vec::new(), &mut out);
    out
}

/// p(n) by the pentagonal-number recurrence; independent of the
/// enumeration above.
pub fn partition_count(n: u64) -> BigUint {
    let n = usize::try_from(n).expect("partition_count argument too large");
    let mut table: Vec<BigInt> = vec![BigInt::zero(); n + 1];
    table[0] = BigInt::one();
    for i in 1..=n {
        let mut sum = BigInt::zero();
        let mut k: usize = 1;
        loop {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let term1 = table[i - g1].clone();
            let g2 = k * (3 * k + 1) / 2;
            let term2 = if g2 <= i {
                table[i - g2].clone()
            } else {
                BigInt::zero()
            };
            if k % 2 == 1 {
                sum += term1 + term2;
            } else {
                sum -= term1 + term2;
            }
            k += 1;
        }
        table[i] = sum;
    }
    let value = std::mem::take(&mut table[n]);
    debug_assert!(!value.is_negative());
    value.to_biguint().expect("partition count is nonnegative")
}

/// First-column hook lengths padded to `beads` beads: the strictly
/// decreasing sequence `part(i) + beads - 1 - i`.
pub(crate) fn beta_set(partition: &Partition, beads: usize) -> Vec<u64> {
    debug_assert!(beads >= partition.len());
    (0..beads)
        .map(|i| u64::from(partition.part(i)) + (beads - 1 - i) as u64)
        .collect()
}

/// Inverse of `beta_set` for a strictly decreasing sequence.
pub(crate) fn partition_from_beta(beta: &[u64]) -> Partition {
    debug_assert!(beta.windows(2).all(|w| w[0] > w[1]));
    let beads = beta.len();
    let parts: Vec<u32> = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| (b - (beads - 1 - i) as u64) as u32)
        .take_while(|&p| p > 0)
        .collect();
    Partition::from_sorted_unchecked(parts)
}

impl Ord for Partition {
    /// Canonical order: descending lexicographic with missing parts read
    /// as 0, so for a fixed size (n) sorts first and (1^n) last.
    fn cmp(&self, other: &Self) -> Ordering {
        for i in 0..self.len().max(other.len()) {
            match other.part(i).cmp(&self.part(i)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the bracket literal, e.g. `[3,2,1]` or `[]`, with optional
    /// whitespace around parts.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::InvalidLiteral {
            literal: s.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = s.trim();
        let inner = trimmed
            .strip_prefix('[')
            .and_then(|rest| rest.strip_suffix(']'))
            .ok_or_else(|| bad("expected a bracketed list like [3,2,1]"))?
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for (i, piece) in inner.split(',').enumerate() {
            let value: i64 = piece
                .trim()
                .parse()
                .map_err(|_| bad(&format!("part {i} is not an integer")))?;
            if value <= 0 {
                return Err(Error::NonPositivePart { index: i });
            }
            let value = u32::try_from(value)
                .map_err(|_| bad(&format!("part {i} exceeds the representable bound")))?;
            parts.push(value);
        }
        Partition::new(parts)
    }
}

impl serde::Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> serde::Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}
