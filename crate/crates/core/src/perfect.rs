//! Perfect partitions: partitions of `n` whose parts contain exactly one
//! partition of every `m ≤ n`.
//!
//! They are in bijection with ordered factorizations of `n + 1`:
//!
//! ```text
//! a_1·a_2···a_r  ↦  (1^{a_1−1}, a_1^{a_2−1}, (a_1a_2)^{a_3−1}, ..., (a_1···a_{r−1})^{a_r−1})
//! ```

use crate::count::Count;
use crate::error::{Error, Result};
use crate::factorize::{
    enumerate_ordered_factorizations, f_nk, f_total, OrderedFactorization, OrderedFactorizations,
};
use crate::partition::{sub_weight_counts, Partition, Selectable};

/// A partition produced by (or checked against) the perfect-partition
/// bijection.
pub type PerfectPartition = Partition;

/// Outcome of a definition-level perfectness check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Perfectness {
    Perfect,
    /// The smallest weight not represented exactly once, with its number of
    /// representations (saturating at `u64::MAX`).
    Imperfect {
        weight: u64,
        count: u64,
    },
}

impl Perfectness {
    pub fn is_perfect(&self) -> bool {
        matches!(self, Perfectness::Perfect)
    }

    pub(crate) fn from_counts(counts: &[u64], upto: u64) -> Self {
        (1..=upto)
            .find(|&m| counts[m as usize] != 1)
            .map_or(Perfectness::Perfect, |m| Perfectness::Imperfect {
                weight: m,
                count: counts[m as usize],
            })
    }
}

pub fn factorization_to_perfect_partition(of: &OrderedFactorization) -> PerfectPartition {
    let mut prefix = 1u64;
    let mut groups = Vec::with_capacity(of.len());
    for &a in of.factors() {
        groups.push((prefix, a - 1));
        prefix *= a;
    }
    // prefix products strictly increase, so the groups are already ascending
    Partition::from_groups_unchecked(groups)
}

/// Inverse of [`factorization_to_perfect_partition`].
///
/// The smallest part must be 1 and every later part must equal the product
/// of the factors read so far; the first group that breaks the chain is
/// reported.
pub fn perfect_partition_to_factorization(pp: &Partition) -> Result<OrderedFactorization> {
    let mut prefix = 1u64;
    let mut factors = Vec::with_capacity(pp.groups().len());
    for (i, &(part, mult)) in pp.groups().iter().enumerate() {
        if part != prefix {
            return Err(Error::NotBijectionImage(format!(
                "group {i} has part {part}, expected {prefix}"
            )));
        }
        let factor = mult + 1;
        factors.push(factor);
        prefix = prefix
            .checked_mul(factor)
            .ok_or_else(|| Error::NotBijectionImage("prefix product overflows u64".into()))?;
    }
    OrderedFactorization::new(factors)
}

/// Checks that every `m` in `1..=weight` has exactly one sub-multiset of
/// parts summing to it. Copies of a part are interchangeable.
pub fn is_perfect_partition(pp: &Partition) -> Perfectness {
    let n = pp.weight();
    let items = pp.groups().iter().map(|&(part, mult)| Selectable {
        part,
        plain: mult,
        marked: false,
    });
    Perfectness::from_counts(&sub_weight_counts(items, n), n)
}

/// Perfect partitions of `n`, in the order of the factorizations of `n + 1`.
pub fn enumerate_perfect_partitions(n: u64) -> PerfectPartitions {
    PerfectPartitions {
        inner: enumerate_ordered_factorizations(n + 1).expect("n + 1 > 0"),
    }
}

#[derive(Debug, Clone)]
pub struct PerfectPartitions {
    inner: OrderedFactorizations,
}

impl Iterator for PerfectPartitions {
    type Item = PerfectPartition;

    fn next(&mut self) -> Option<PerfectPartition> {
        self.inner
            .next()
            .map(|of| factorization_to_perfect_partition(&of))
    }
}

/// Number of perfect partitions of `n`: `f(n + 1)`.
pub fn count_perfect_partitions(n: u64) -> Count {
    f_total(n + 1)
}

/// Perfect partitions of `n` with exactly `k` distinct part sizes: `f(n+1, k)`.
pub fn count_perfect_partitions_by_blocks(n: u64, k: u32) -> Result<Count> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    f_nk(n + 1, k)
}
