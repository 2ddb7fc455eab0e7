//! Integer partitions in grouped (part, multiplicity) form, and the
//! sub-multiset weight counting shared by the perfectness checks.

use std::fmt;

use crate::error::{Error, Result};

/// A partition stored as ascending `(part, multiplicity)` groups.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    groups: Vec<(u64, u64)>,
}

impl Partition {
    pub fn from_groups(groups: Vec<(u64, u64)>) -> Result<Self> {
        for (i, &(part, mult)) in groups.iter().enumerate() {
            if part == 0 || mult == 0 {
                return Err(Error::InvalidPartition(format!(
                    "group {i} has part {part} with multiplicity {mult}"
                )));
            }
            if i > 0 && groups[i - 1].0 >= part {
                return Err(Error::InvalidPartition(
                    "part sizes must be strictly increasing".into(),
                ));
            }
        }
        if groups.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        Ok(Partition { groups })
    }

    /// Groups any multiset of positive parts.
    pub fn from_parts(parts: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut parts: Vec<u64> = parts.into_iter().collect();
        parts.sort_unstable();
        let mut groups: Vec<(u64, u64)> = Vec::new();
        for p in parts {
            match groups.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => groups.push((p, 1)),
            }
        }
        Self::from_groups(groups)
    }

    pub(crate) fn from_groups_unchecked(groups: Vec<(u64, u64)>) -> Self {
        Partition { groups }
    }

    pub fn groups(&self) -> &[(u64, u64)] {
        &self.groups
    }

    pub fn weight(&self) -> u64 {
        self.groups.iter().map(|&(p, m)| p * m).sum()
    }

    /// Number of parts counted with multiplicity.
    pub fn len(&self) -> u64 {
        self.groups.iter().map(|&(_, m)| m).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    /// Parts in ascending order, with repetition.
    pub fn parts(&self) -> impl Iterator<Item = u64> + '_ {
        self.groups
            .iter()
            .flat_map(|&(p, m)| std::iter::repeat_n(p, m as usize))
    }

    /// Part sizes that occur exactly once.
    pub fn singleton_parts(&self) -> impl Iterator<Item = u64> + '_ {
        self.groups.iter().filter(|g| g.1 == 1).map(|g| g.0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, &(p, m)) in self.groups.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            if m == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{m}")?;
            }
        }
        f.write_str(")")
    }
}

/// Every partition of `n`, in reverse lexicographic order of the
/// nonincreasing part sequence: `(n)`, `(n−1, 1)`, ..., `(1^n)`.
#[derive(Debug, Clone)]
pub struct Partitions {
    // nonincreasing parts of the partition to emit next
    current: Option<Vec<u64>>,
}

pub fn partitions(n: u64) -> Partitions {
    Partitions {
        current: (n > 0).then(|| vec![n]),
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.take()?;
        let out = Partition::from_parts(parts.iter().copied()).expect("positive parts");
        self.current = successor(parts);
        Some(out)
    }
}

fn successor(mut parts: Vec<u64>) -> Option<Vec<u64>> {
    let mut freed = 0;
    while parts.last() == Some(&1) {
        parts.pop();
        freed += 1;
    }
    let last = parts.pop()?;
    let smaller = last - 1;
    freed += 1;
    parts.push(smaller);
    while freed > 0 {
        let take = freed.min(smaller);
        parts.push(take);
        freed -= take;
    }
    Some(parts)
}

/// One part size as seen by a sub-multiset count: `plain` interchangeable
/// copies, plus optionally one distinguishable (overlined) copy.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Selectable {
    pub part: u64,
    pub plain: u64,
    pub marked: bool,
}

/// `counts[w]` = number of distinct sub-multisets of weight `w`, `0 ≤ w ≤ n`,
/// saturating at `u64::MAX`.
pub(crate) fn sub_weight_counts(items: impl IntoIterator<Item = Selectable>, n: u64) -> Vec<u64> {
    let len = n as usize + 1;
    let mut counts = vec![0u64; len];
    counts[0] = 1;
    for item in items {
        let p = item.part as usize;
        counts = window_sum(&counts, p, item.plain as usize + 1);
        if item.marked {
            counts = window_sum(&counts, p, 2);
        }
    }
    counts
}

// out[w] = Σ_{k=0}^{width−1} inp[w − k·step], saturating. Running sums over
// each residue class; min(Σx, C) is preserved when every x is capped at C.
fn window_sum(inp: &[u64], step: usize, width: usize) -> Vec<u64> {
    let mut out = vec![0u64; inp.len()];
    if step >= inp.len() {
        out.copy_from_slice(inp);
        return out;
    }
    for residue in 0..step {
        let mut running: u128 = 0;
        let mut w = residue;
        let mut k = 0usize;
        while w < inp.len() {
            running += u128::from(inp[w]);
            if k >= width {
                running -= u128::from(inp[w - width * step]);
            }
            out[w] = running.min(u128::from(u64::MAX)) as u64;
            w += step;
            k += 1;
        }
    }
    out
}

/// Which weights in `0..=n` are reachable by some sub-multiset.
pub(crate) fn reachable_weights(items: impl IntoIterator<Item = Selectable>, n: u64) -> Vec<bool> {
    let len = n as usize + 1;
    let mut reach = vec![false; len];
    reach[0] = true;
    for item in items {
        let copies = item.plain + u64::from(item.marked);
        let p = item.part as usize;
        let mut next = reach.clone();
        for k in 1..=copies as usize {
            let shift = k * p;
            if shift >= len {
                break;
            }
            for w in shift..len {
                next[w] |= reach[w - shift];
            }
        }
        reach = next;
    }
    reach
}

#[cfg(test)]
mod tests {
    use super::*;

    fn partition_count(n: u64) -> u64 {
        // Euler's pentagonal recurrence, independent of the generator
        let n = n as i64;
        let mut p = vec![0i64; n as usize + 1];
        p[0] = 1;
        for i in 1..=n {
            let mut k = 1i64;
            let mut acc = 0i64;
            loop {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > i {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                acc += sign * p[(i - g1) as usize];
                let g2 = k * (3 * k + 1) / 2;
                if g2 <= i {
                    acc += sign * p[(i - g2) as usize];
                }
                k += 1;
            }
            p[i as usize] = acc;
        }
        p[n as usize] as u64
    }

    #[test]
    fn generator_counts_and_order() {
        let four: Vec<String> = partitions(4).map(|p| p.to_string()).collect();
        assert_eq!(four, vec!["(4)", "(1, 3)", "(2^2)", "(1^2, 2)", "(1^4)"]);
        for n in 1..=30 {
            let all: Vec<_> = partitions(n).collect();
            assert_eq!(all.len() as u64, partition_count(n), "n = {n}");
            assert!(all.iter().all(|p| p.weight() == n));
            let mut dedup = all.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), all.len());
        }
        assert_eq!(partitions(0).count(), 0);
    }

    #[test]
    fn validation() {
        assert!(Partition::from_groups(vec![(2, 1), (1, 1)]).is_err());
        assert!(Partition::from_groups(vec![(1, 0)]).is_err());
        assert!(Partition::from_groups(vec![]).is_err());
        let p = Partition::from_parts([6, 1, 3, 1]).unwrap();
        assert_eq!(p.groups(), &[(1, 2), (3, 1), (6, 1)]);
        assert_eq!(p.to_string(), "(1^2, 3, 6)");
        assert_eq!(p.singleton_parts().collect::<Vec<_>>(), vec![3, 6]);
    }

    #[test]
    fn window_counts_match_naive_expansion() {
        let items = [
            Selectable {
                part: 1,
                plain: 2,
                marked: true,
            },
            Selectable {
                part: 3,
                plain: 1,
                marked: false,
            },
            Selectable {
                part: 4,
                plain: 0,
                marked: true,
            },
        ];
        let n = 2 + 1 + 3 + 4;
        let mut naive = vec![0u64; n as usize + 1];
        for a in 0..=2 {
            for b in 0..=1 {
                for c in 0..=1 {
                    for d in 0..=1 {
                        naive[a + b + 3 * c + 4 * d] += 1;
                    }
                }
            }
        }
        assert_eq!(sub_weight_counts(items, n), naive);
        let reach = reachable_weights(items, n);
        assert_eq!(reach, naive.iter().map(|&c| c > 0).collect::<Vec<_>>());
    }

    #[test]
    fn counts_saturate() {
        let items = [Selectable {
            part: 1,
            plain: 1,
            marked: false,
        }; 70];
        let counts = sub_weight_counts(items, 70);
        assert_eq!(counts[35], u64::MAX);
        assert_eq!(counts[1], 70);
    }
}
