//! Perfect overpartitions.
//!
//! An overpartition may overline the last occurrence of each part size. It
//! is perfect when it contains exactly one sub-overpartition of every
//! smaller positive weight. Per part size, plain copies are interchangeable
//! and the overlined copy is a separate object, so `(1, 1̅)` contains two
//! overpartitions of 1.
//!
//! Perfect overpartitions of `n` come from perfect partitions of `n` by
//! overlining any subset of the part sizes that occur once. A factor 2 in
//! the ordered factorization of `n + 1` is exactly what creates such a part
//! size, which gives
//!
//! ```text
//! p̄(n, r) = Σ_{v=r}^{s} C(v, r)·f_v(n + 1),    s = ν₂(n + 1).
//! ```

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::count::Count;
use crate::error::{Error, Result};
use crate::factorize::{f_nk_of, f_total, f_v_formula, FactorCounter};
use crate::numkit::{binomial, prime_factorize, two_adic_split};
use crate::partition::{partitions, reachable_weights, sub_weight_counts, Partition, Selectable};
use crate::perfect::{
    enumerate_perfect_partitions, PerfectPartition, PerfectPartitions, Perfectness,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OverGroup {
    pub part: u64,
    /// Total copies of the part, the overlined one included.
    pub multiplicity: u64,
    /// Whether the last copy is overlined.
    pub overlined: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Overpartition {
    groups: Vec<OverGroup>,
}

impl Overpartition {
    pub fn from_groups(groups: Vec<OverGroup>) -> Result<Self> {
        if groups.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        for (i, g) in groups.iter().enumerate() {
            if g.part == 0 || g.multiplicity == 0 {
                return Err(Error::InvalidPartition(format!(
                    "group {i} has part {} with multiplicity {}",
                    g.part, g.multiplicity
                )));
            }
            if i > 0 && groups[i - 1].part >= g.part {
                return Err(Error::InvalidPartition(
                    "part sizes must be strictly increasing".into(),
                ));
            }
        }
        Ok(Overpartition { groups })
    }

    /// Overlines the groups of `base` selected by the bits of `mask`
    /// (bit `i` ↔ group `i`).
    pub fn from_partition(base: &Partition, mask: u64) -> Self {
        let groups = base
            .groups()
            .iter()
            .enumerate()
            .map(|(i, &(part, multiplicity))| OverGroup {
                part,
                multiplicity,
                overlined: mask >> i & 1 == 1,
            })
            .collect();
        Overpartition { groups }
    }

    pub fn groups(&self) -> &[OverGroup] {
        &self.groups
    }

    pub fn weight(&self) -> u64 {
        self.groups.iter().map(|g| g.part * g.multiplicity).sum()
    }

    /// Number of overlined parts.
    pub fn overlined_count(&self) -> u32 {
        self.groups.iter().filter(|g| g.overlined).count() as u32
    }

    /// The underlying partition with overlines dropped.
    pub fn underlying(&self) -> Partition {
        Partition::from_groups_unchecked(
            self.groups
                .iter()
                .map(|g| (g.part, g.multiplicity))
                .collect(),
        )
    }

    /// Renders overlined parts with a combining overline (U+0305) on each digit.
    pub fn display_unicode(&self) -> String {
        self.render(|p| {
            p.to_string()
                .chars()
                .flat_map(|c| [c, '\u{0305}'])
                .collect()
        })
    }

    fn render(&self, overline: impl Fn(u64) -> String) -> String {
        let mut items = Vec::new();
        for g in &self.groups {
            let plain = g.multiplicity - u64::from(g.overlined);
            match plain {
                0 => {}
                1 => items.push(g.part.to_string()),
                k => items.push(format!("{}^{k}", g.part)),
            }
            if g.overlined {
                items.push(overline(g.part));
            }
        }
        format!("({})", items.join(", "))
    }

    fn selectables(&self) -> impl Iterator<Item = Selectable> + '_ {
        self.groups.iter().map(|g| Selectable {
            part: g.part,
            plain: g.multiplicity - u64::from(g.overlined),
            marked: g.overlined,
        })
    }
}

/// ASCII form: an overlined part carries a trailing `~`, e.g. `(1^2, 3~, 6)`.
impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(|p| format!("{p}~")))
    }
}

impl FromStr for Overpartition {
    type Err = Error;

    /// Parses the ASCII form; tokens may appear in any order.
    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidPartition(format!("expected parentheses: {s}")))?;
        let bad = |tok: &str| Error::InvalidPartition(format!("bad token `{tok}`"));
        // part -> (plain copies, overlined copies)
        let mut tally = std::collections::BTreeMap::<u64, (u64, u64)>::new();
        for tok in body.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            if let Some(p) = tok.strip_suffix('~') {
                let p: u64 = p.parse().map_err(|_| bad(tok))?;
                tally.entry(p).or_default().1 += 1;
            } else {
                let (p, k) = match tok.split_once('^') {
                    Some((p, k)) => (p, k.parse::<u64>().map_err(|_| bad(tok))?),
                    None => (tok, 1),
                };
                let p: u64 = p.parse().map_err(|_| bad(tok))?;
                tally.entry(p).or_default().0 += k;
            }
        }
        let mut groups = Vec::new();
        for (part, (plain, over)) in tally {
            if over > 1 {
                return Err(Error::InvalidPartition(format!(
                    "part {part} is overlined more than once"
                )));
            }
            groups.push(OverGroup {
                part,
                multiplicity: plain + over,
                overlined: over == 1,
            });
        }
        Overpartition::from_groups(groups)
    }
}

/// Which overline counts a stream should produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Overlines {
    Exactly(u32),
    All,
}

impl Overlines {
    fn admits(self, r: u32) -> bool {
        match self {
            Overlines::Exactly(want) => want == r,
            Overlines::All => true,
        }
    }
}

/// Every overpartition of `n`: partitions in the order of
/// [`partitions`](crate::partition::partitions), each followed by its
/// overline masks in increasing binary order over its groups.
pub fn enumerate_all_overpartitions(n: u64) -> impl Iterator<Item = Overpartition> {
    partitions(n).flat_map(|p| {
        let masks = 1u64 << p.groups().len();
        (0..masks).map(move |mask| Overpartition::from_partition(&p, mask))
    })
}

/// Overpartitions obtained by overlining part sizes of multiplicity 1.
///
/// Masks run in increasing binary order over the singleton part sizes,
/// ascending by size.
pub fn overline_variants(pp: &PerfectPartition, which: Overlines) -> Result<OverlineVariants> {
    let singles: Vec<usize> = pp
        .groups()
        .iter()
        .enumerate()
        .filter(|(_, g)| g.1 == 1)
        .map(|(i, _)| i)
        .collect();
    if let Overlines::Exactly(r) = which {
        if r as usize > singles.len() {
            return Err(Error::TooManyOverlines {
                requested: r,
                available: singles.len() as u32,
            });
        }
    }
    Ok(OverlineVariants {
        base: pp.clone(),
        end: 1u64 << singles.len(),
        singles,
        mask: 0,
        which,
    })
}

#[derive(Debug, Clone)]
pub struct OverlineVariants {
    base: Partition,
    singles: Vec<usize>,
    mask: u64,
    end: u64,
    which: Overlines,
}

impl Iterator for OverlineVariants {
    type Item = Overpartition;

    fn next(&mut self) -> Option<Overpartition> {
        while self.mask < self.end {
            let mask = self.mask;
            self.mask += 1;
            if !self.which.admits(mask.count_ones()) {
                continue;
            }
            let group_mask = self
                .singles
                .iter()
                .enumerate()
                .filter(|&(bit, _)| mask >> bit & 1 == 1)
                .fold(0u64, |acc, (_, &g)| acc | 1 << g);
            return Some(Overpartition::from_partition(&self.base, group_mask));
        }
        None
    }
}

/// Checks that every weight `1..weight` is hit by exactly one distinct
/// sub-overpartition. The full object is the only one of its own weight.
pub fn is_perfect_overpartition(op: &Overpartition) -> Perfectness {
    let n = op.weight();
    let counts = sub_weight_counts(op.selectables(), n);
    Perfectness::from_counts(&counts, n.saturating_sub(1))
}

/// Perfectness by counting rather than per-weight tallies: the number of
/// distinct sub-overpartitions (the empty one included) is `weight + 1` and
/// every weight `0..=weight` is reachable.
pub fn is_perfect_overpartition_by_size(op: &Overpartition) -> bool {
    let n = op.weight();
    let total = op.selectables().try_fold(1u64, |acc, it| {
        acc.checked_mul((it.plain + 1) * (1 + u64::from(it.marked)))
    });
    total == Some(n + 1) && reachable_weights(op.selectables(), n).iter().all(|&r| r)
}

/// Perfect overpartitions of `n`, built from the factorizations of `n + 1`.
pub fn enumerate_perfect_overpartitions(n: u64, which: Overlines) -> PerfectOverpartitions {
    PerfectOverpartitions {
        bases: enumerate_perfect_partitions(n),
        current: None,
        which,
    }
}

#[derive(Debug, Clone)]
pub struct PerfectOverpartitions {
    bases: PerfectPartitions,
    current: Option<OverlineVariants>,
    which: Overlines,
}

impl Iterator for PerfectOverpartitions {
    type Item = Overpartition;

    fn next(&mut self) -> Option<Overpartition> {
        loop {
            if let Some(op) = self.current.as_mut().and_then(Iterator::next) {
                return Some(op);
            }
            let base = self.bases.next()?;
            // a request for more overlines than the base has yields nothing
            let which = match self.which {
                Overlines::Exactly(r) if r as usize > base.singleton_parts().count() => continue,
                w => w,
            };
            self.current = Some(overline_variants(&base, which).expect("checked above"));
        }
    }
}

/// `Σ_{v=r}^{s} C(v, r)·f_v` for a distribution `[f_0, ..., f_s]`.
pub fn pop_from_twos(twos: &[Count], r: u32) -> Count {
    twos.iter()
        .enumerate()
        .skip(r as usize)
        .map(|(v, fv)| binomial(v as i64, i64::from(r)) * fv)
        .sum()
}

/// `p̄(n, r)`, with `f_v` from the divisor recurrences.
pub fn count_pop(n: u64, r: u32) -> Count {
    count_pop_with(&mut FactorCounter::new(), n, r)
}

pub fn count_pop_with(counter: &mut FactorCounter, n: u64, r: u32) -> Count {
    pop_from_twos(&counter.twos_distribution(n + 1), r)
}

/// `p̄(n) = Σ_r p̄(n, r)`.
pub fn count_pop_total(n: u64) -> Count {
    count_pop_total_with(&mut FactorCounter::new(), n)
}

pub fn count_pop_total_with(counter: &mut FactorCounter, n: u64) -> Count {
    let twos = counter.twos_distribution(n + 1);
    (0..twos.len() as u32)
        .map(|r| pop_from_twos(&twos, r))
        .sum()
}

/// `p̄(n, r)` with `f_v` taken from the closed forms only.
pub fn count_pop_closed(n: u64, r: u32) -> Count {
    let (s, _) = two_adic_split(n + 1);
    let twos: Vec<Count> = (0..=s).map(|v| f_v_formula(n + 1, v)).collect();
    pop_from_twos(&twos, r)
}

pub fn count_pop_total_closed(n: u64) -> Count {
    let (s, _) = two_adic_split(n + 1);
    (0..=s).map(|r| count_pop_closed(n, r)).sum()
}

fn odd_part_for(n: u64, s_required: u32, what: &'static str) -> Result<u64> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let (s, m) = two_adic_split(n + 1);
    if s != s_required || m == 1 {
        return Err(Error::domain(
            what,
            format!("requires n + 1 = 2^{s_required}·m with m odd, m > 1; got n + 1 = 2^{s}·{m}"),
        ));
    }
    Ok(m)
}

fn weighted_odd_sum(m: u64, weight: impl Fn(i64) -> BigInt) -> BigInt {
    let pf = prime_factorize(m).expect("m > 1");
    (1..=pf.big_omega())
        .map(|j| weight(i64::from(j)) * f_nk_of(&pf, j).to_signed())
        .sum()
}

/// `p̄(n) = f(n+1) + Σ_j (j+1)·f(m, j)` for `n + 1 = 2m`, `m` odd, `m > 1`.
pub fn count_pop_s1(n: u64) -> Result<Count> {
    let m = odd_part_for(n, 1, "p̄(n) with ν₂(n+1) = 1")?;
    let tail = weighted_odd_sum(m, |j| BigInt::from(j + 1));
    Ok(Count::from_signed(f_total(n + 1).to_signed() + tail))
}

/// `p̄(n) = 2f(n+1) + Σ_j C(j+2, 2)·f(m, j)` for `n + 1 = 4m`.
pub fn count_pop_s2(n: u64) -> Result<Count> {
    let m = odd_part_for(n, 2, "p̄(n) with ν₂(n+1) = 2")?;
    let tail = weighted_odd_sum(m, |j| binomial(j + 2, 2).to_signed());
    Ok(Count::from_signed(f_total(n + 1).to_signed() * 2 + tail))
}

/// `p̄(n) = 4f(n+1) + Σ_j [C(j+2, 3) − (j+1)²(j+3)]·f(m, j)` for `n + 1 = 8m`.
pub fn count_pop_s3(n: u64) -> Result<Count> {
    let m = odd_part_for(n, 3, "p̄(n) with ν₂(n+1) = 3")?;
    let tail = weighted_odd_sum(m, |j| {
        binomial(j + 2, 3).to_signed() - BigInt::from((j + 1) * (j + 1) * (j + 3))
    });
    Ok(Count::from_signed(f_total(n + 1).to_signed() * 4 + tail))
}

fn pow2_inner(s: i64, v: i64) -> Count {
    (1..=(s - v) / 2)
        .map(|i| binomial(v + i, v) * binomial(s - v - i - 1, i - 1))
        .sum()
}

/// `p̄(2^s − 1, r) = C(s, r) + Σ_{v=r}^{s} C(v, r) Σ_{i≥1} C(v+i, v)·C(s−v−i−1, i−1)`.
pub fn count_pop_pow2_r(s: u32, r: u32) -> Count {
    let (s, r) = (i64::from(s), i64::from(r));
    binomial(s, r)
        + (r..=s)
            .map(|v| binomial(v, r) * pow2_inner(s, v))
            .sum::<Count>()
}

/// `p̄(2^s − 1) = 2^s + Σ_{r=0}^{s} Σ_{v=r}^{s} C(v, r) Σ_{i=1}^{⌊(s−v)/2⌋} C(v+i, v)·C(s−v−i−1, i−1)`.
pub fn count_pop_pow2_total(s: u32) -> Count {
    let si = i64::from(s);
    let mut acc = Count::pow2(s);
    for r in 0..=si {
        for v in r..=si {
            acc += binomial(v, r) * pow2_inner(si, v);
        }
    }
    acc
}

/// One row of the `p̄(n, r)` table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PopRow {
    pub n: u64,
    /// `p̄(n, r)` for `r = 0..=ν₂(n+1)`.
    pub counts_by_r: Vec<Count>,
    pub total: Count,
}

impl PopRow {
    /// `p̄(n, r)` for any `r`, zero past `ν₂(n+1)`.
    pub fn get(&self, r: u32) -> Count {
        self.counts_by_r
            .get(r as usize)
            .cloned()
            .unwrap_or_default()
    }
}

pub fn pop_row(n: u64) -> PopRow {
    pop_row_with(&mut FactorCounter::new(), n)
}

pub fn pop_row_with(counter: &mut FactorCounter, n: u64) -> PopRow {
    let twos = counter.twos_distribution(n + 1);
    let counts_by_r: Vec<Count> = (0..twos.len() as u32)
        .map(|r| pop_from_twos(&twos, r))
        .collect();
    let total = counts_by_r.iter().sum();
    PopRow {
        n,
        counts_by_r,
        total,
    }
}
