//! The `verify` suites: exhaustive cross-validation of every counting path
//! against the enumeration oracles, the closed-form identities, the bijection,
//! and the published tables.
//!
//! Per-value work fans out over rayon; results are merged back in input order,
//! so the emitted records are identical from run to run.

use std::collections::BTreeSet;
use std::fmt::Display;

use perfover::factorize::{
    enumerate_ordered_factorizations, f_pow2_v, f_sm1_closed, f_sm2_closed, f_total,
    f_total_by_parts, f_v1_closed, f_v2_closed, f_v3_closed, f_v_closed, f_v_formula, g_s_closed,
    twos_distribution_oracle,
};
use perfover::numkit::two_adic_split;
use perfover::overperfect::{
    count_pop_pow2_r, count_pop_pow2_total, count_pop_s1, count_pop_s2, count_pop_s3,
    count_pop_total_with, count_pop_with, enumerate_all_overpartitions,
    enumerate_perfect_overpartitions, is_perfect_overpartition, is_perfect_overpartition_by_size,
};
use perfover::partition::partitions;
use perfover::perfect::{
    enumerate_perfect_partitions, factorization_to_perfect_partition, is_perfect_partition,
    perfect_partition_to_factorization,
};
use perfover::{Count, FactorCounter, Overlines, Overpartition, PowerMix};
use rayon::prelude::*;

use crate::commands::{self, SequenceKind, TableKind, TableOptions};
use crate::record::{Cell, OutputRecord};
use crate::reference;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    /// every suite below
    All,
    /// f_v(N) by enumeration, recurrence and closed forms; f(N) by every route
    Fv,
    /// identities between f_v values and the special-form overpartition counts
    Identities,
    /// factorization ↔ perfect partition bijection
    Bijection,
    /// definition-level perfect overpartition filter against the counts
    Oracle,
    /// the published tables, sequences and worked example
    Tables,
}

/// Upper bounds for each suite. `--nmax` overrides the primary bound of every
/// selected suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// `N` range of the `fv` suite.
    pub fv: u64,
    /// `N` / `n` range of the `identities` suite.
    pub identities: u64,
    /// Largest `s` for the `2^s − 1` overpartition formulas.
    pub pow2_s: u32,
    /// Largest `s` for the `2^s·m` formulas checked against enumeration.
    pub prop_s: u32,
    /// `N` range of the bijection round trip.
    pub bijection: u64,
    /// `n` range of the brute-force perfect partition search.
    pub brute_force: u64,
    /// `n` range of the exhaustive overpartition filter.
    pub oracle: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            fv: 2000,
            identities: 5000,
            pow2_s: 12,
            prop_s: 16,
            bijection: 1000,
            brute_force: 20,
            oracle: 31,
        }
    }
}

impl Limits {
    pub fn with_nmax(nmax: u64) -> Self {
        Limits {
            fv: nmax,
            identities: nmax,
            bijection: nmax,
            brute_force: nmax,
            oracle: nmax,
            ..Limits::default()
        }
    }
}

/// Outcome of one property over its whole range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub suite: &'static str,
    pub check: &'static str,
    pub cases: u64,
    pub counterexample: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn record(&self) -> OutputRecord {
        OutputRecord::CheckResult {
            suite: self.suite.into(),
            check: self.check.into(),
            passed: self.passed(),
            cases: self.cases,
            counterexample: self.counterexample.clone(),
        }
    }
}

/// Case counter keeping the first failure.
#[derive(Debug, Default, Clone)]
struct Tally {
    cases: u64,
    first: Option<String>,
}

impl Tally {
    fn eq<T: PartialEq + Display>(&mut self, got: T, want: T, what: impl FnOnce() -> String) {
        self.cases += 1;
        if got != want && self.first.is_none() {
            self.first = Some(format!("{}: got {got}, expected {want}", what()));
        }
    }

    fn holds(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.first.is_none() {
            self.first = Some(what());
        }
    }

    /// Folds per-value tallies in input order so the reported counterexample
    /// is the smallest failing value.
    fn merge(tallies: impl IntoIterator<Item = Tally>) -> Tally {
        tallies.into_iter().fold(Tally::default(), |mut acc, t| {
            acc.cases += t.cases;
            if acc.first.is_none() {
                acc.first = t.first;
            }
            acc
        })
    }

    fn finish(self, suite: &'static str, check: &'static str) -> CheckResult {
        CheckResult {
            suite,
            check,
            cases: self.cases,
            counterexample: self.first,
        }
    }
}

/// Runs `per_value` over `values` in parallel, one tally per named check, and
/// merges in order.
fn fan_out<const K: usize>(
    suite: &'static str,
    names: [&'static str; K],
    values: Vec<u64>,
    per_value: impl Fn(&mut FactorCounter, u64) -> [Tally; K] + Sync,
) -> Vec<CheckResult> {
    let rows: Vec<[Tally; K]> = values
        .into_par_iter()
        .map_init(FactorCounter::new, |counter, n| per_value(counter, n))
        .collect();
    let mut merged: [Vec<Tally>; K] = std::array::from_fn(|_| Vec::with_capacity(rows.len()));
    for row in rows {
        for (slot, t) in merged.iter_mut().zip(row) {
            slot.push(t);
        }
    }
    names
        .into_iter()
        .zip(merged)
        .map(|(name, ts)| Tally::merge(ts).finish(suite, name))
        .collect()
}

pub fn run(suite: Suite, limits: Limits) -> Vec<CheckResult> {
    match suite {
        Suite::All => [
            Suite::Fv,
            Suite::Identities,
            Suite::Bijection,
            Suite::Oracle,
            Suite::Tables,
        ]
        .into_iter()
        .flat_map(|s| run(s, limits))
        .collect(),
        Suite::Fv => fv_suite(limits.fv),
        Suite::Identities => identities_suite(limits),
        Suite::Bijection => bijection_suite(limits.bijection, limits.brute_force),
        Suite::Oracle => oracle_suite(limits.oracle),
        Suite::Tables => tables_suite(),
    }
}

fn fv_suite(nmax: u64) -> Vec<CheckResult> {
    fan_out(
        "fv",
        [
            "f_v recurrence = enumeration",
            "f_v closed form = enumeration",
            "f_v family split = enumeration",
            "g_s, f_(s-1), f_(s-2) = enumeration",
            "sum_v f_v = f(N) by every route",
        ],
        (2..=nmax).collect(),
        |counter, n| {
            let mut t: [Tally; 5] = Default::default();
            let (s, m) = two_adic_split(n);
            let stream: Vec<_> = enumerate_ordered_factorizations(n)
                .expect("n >= 2")
                .collect();
            let mut oracle = vec![0u64; s as usize + 1];
            let mut mix = vec![[0u64; 3]; s as usize + 1];
            for of in &stream {
                let v = of.twos() as usize;
                oracle[v] += 1;
                let slot = match of.power_mix() {
                    PowerMix::NoHigherPowers => 0,
                    PowerMix::HigherPowersOnly => 1,
                    PowerMix::Mixed => 2,
                };
                mix[v][slot] += 1;
            }
            let split = s >= 1 && m > 1;
            for v in 0..=s {
                let want = Count::from(oracle[v as usize]);
                t[0].eq(counter.twos(n, v), want.clone(), || format!("f_{v}({n})"));
                t[1].eq(f_v_formula(n, v), want.clone(), || format!("f_{v}({n})"));
                if split {
                    let thm = f_v_closed(n, v).expect("even, not a power of 2");
                    t[1].eq(thm, want.clone(), || format!("f_{v}({n}) three-family sum"));
                }
                if m == 1 {
                    let p3 = f_pow2_v(s, v).expect("v <= s");
                    t[1].eq(p3, want, || format!("f_{v}(2^{s})"));
                }
                if split && v < s {
                    let fam = [
                        f_v1_closed(n, v).expect("even"),
                        f_v2_closed(n, v).expect("even"),
                        f_v3_closed(n, v).expect("even"),
                    ];
                    for (i, (got, want)) in fam.into_iter().zip(mix[v as usize]).enumerate() {
                        t[2].eq(got, Count::from(want), || format!("f_{v}({n})_{}", i + 1));
                    }
                }
            }
            if m > 1 {
                let last = |k: u32| Count::from(oracle[(s - k) as usize]);
                t[3].eq(g_s_closed(n).expect("m > 1"), last(0), || {
                    format!("g_s({n})")
                });
                if s >= 1 {
                    t[3].eq(f_sm1_closed(n).expect("s >= 1"), last(1), || {
                        format!("f_(s-1)({n})")
                    });
                }
                if s >= 2 {
                    t[3].eq(f_sm2_closed(n).expect("s >= 2"), last(2), || {
                        format!("f_(s-2)({n})")
                    });
                }
            }
            let total = Count::from(stream.len());
            let by_twos: Count = counter.twos_distribution(n).into_iter().sum();
            t[4].eq(by_twos, total.clone(), || format!("sum_v f_v({n})"));
            t[4].eq(f_total(n), total.clone(), || format!("f({n}) recurrence"));
            t[4].eq(counter.total(n), total.clone(), || {
                format!("f({n}) memoized")
            });
            t[4].eq(f_total_by_parts(n), total, || {
                format!("f({n}) by number of factors")
            });
            t
        },
    )
}

fn identities_suite(limits: Limits) -> Vec<CheckResult> {
    let nmax = limits.identities;
    let mut out = fan_out(
        "identities",
        [
            "f_1 - f_0 = f(N/2) when 2 || N",
            "f_0 = f_2 when 4 || N",
            "f(N) = 2f_0 + f_1 = f_1 + 2f_2 when 4 || N",
            "order-1 overpartition formula",
            "order-2 overpartition formula",
            "order-3 overpartition formula",
        ],
        (1..=nmax).collect(),
        |counter, n| {
            let mut t: [Tally; 6] = Default::default();
            let s = two_adic_split(n).0;
            if n >= 2 && s == 1 {
                let got = counter.twos(n, 1).to_signed() - counter.twos(n, 0).to_signed();
                t[0].eq(got, counter.total(n / 2).to_signed(), || format!("N = {n}"));
            }
            if s == 2 {
                let (f0, f1, f2) = (counter.twos(n, 0), counter.twos(n, 1), counter.twos(n, 2));
                t[1].eq(f0.clone(), f2.clone(), || format!("N = {n}"));
                let total = counter.total(n);
                t[2].eq(f0 * 2u64 + &f1, total.clone(), || {
                    format!("2f_0 + f_1, N = {n}")
                });
                t[2].eq(f1 + f2 * 2u64, total, || format!("f_1 + 2f_2, N = {n}"));
            }
            // The overpartition formulas are indexed by the weight n, with n + 1 = 2^s·m.
            let (s1, m1) = two_adic_split(n + 1);
            if m1 > 1 && (1..=3).contains(&s1) {
                let by_twos = count_pop_total_with(counter, n);
                let special = match s1 {
                    1 => count_pop_s1(n),
                    2 => count_pop_s2(n),
                    _ => count_pop_s3(n),
                }
                .expect("domain checked");
                t[s1 as usize + 2].eq(special, by_twos, || format!("pop({n})"));
            }
            t
        },
    );

    let mut counter = FactorCounter::new();
    let mut pow2 = Tally::default();
    for s in 1..=limits.pow2_s {
        let n = (1u64 << s) - 1;
        for r in 0..=s + 1 {
            pow2.eq(
                count_pop_pow2_r(s, r),
                count_pop_with(&mut counter, n, r),
                || format!("pop(2^{s}-1, {r})"),
            );
        }
        pow2.eq(
            count_pop_pow2_total(s),
            count_pop_total_with(&mut counter, n),
            || format!("pop(2^{s}-1)"),
        );
    }
    out.push(pow2.finish("identities", "power-of-2 overpartition formulas"));

    let mut cases: Vec<(u32, u64)> = (1..=limits.prop_s).map(|s| (s, 1)).collect();
    for m in [3u64, 9, 15] {
        cases.extend((1..=limits.prop_s).map(|s| (s, m)));
    }
    let rows: Vec<(Tally, Tally)> = cases
        .into_par_iter()
        .map(|(s, m)| {
            let n = m << s;
            let oracle = twos_distribution_oracle(n).expect("n >= 2");
            let at = |v: u32| oracle.get(v as usize).cloned().unwrap_or_default();
            let (mut p2, mut p3) = (Tally::default(), Tally::default());
            if m == 1 {
                for v in 0..=s {
                    p3.eq(f_pow2_v(s, v).expect("v <= s"), at(v), || {
                        format!("f_{v}(2^{s})")
                    });
                }
            } else {
                p2.eq(f_sm1_closed(n).expect("even"), at(s - 1), || {
                    format!("f_(s-1)({m}·2^{s})")
                });
                if s >= 2 {
                    p2.eq(f_sm2_closed(n).expect("s >= 2"), at(s - 2), || {
                        format!("f_(s-2)({m}·2^{s})")
                    });
                }
            }
            (p2, p3)
        })
        .collect();
    let (p2, p3): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
    out.push(Tally::merge(p2).finish("identities", "f_(s-1), f_(s-2) closed forms = enumeration"));
    out.push(Tally::merge(p3).finish("identities", "power-of-2 f_v formula = enumeration"));
    out
}

fn bijection_suite(nmax: u64, brute_max: u64) -> Vec<CheckResult> {
    let mut out = fan_out(
        "bijection",
        [
            "factorization -> partition -> factorization",
            "images are perfect partitions of N - 1",
        ],
        (2..=nmax).collect(),
        |_, n| {
            let mut t: [Tally; 2] = Default::default();
            for of in enumerate_ordered_factorizations(n).expect("n >= 2") {
                let pp = factorization_to_perfect_partition(&of);
                let back = perfect_partition_to_factorization(&pp);
                t[0].holds(back.as_ref() == Ok(&of), || {
                    format!("{of} -> {pp} -> {back:?}")
                });
                let ok = pp.weight() == n - 1 && is_perfect_partition(&pp).is_perfect();
                t[1].holds(ok, || format!("{of} -> {pp}"));
            }
            t
        },
    );
    out.extend(fan_out(
        "bijection",
        ["every perfect partition is an image"],
        (1..=brute_max).collect(),
        |counter, n| {
            let mut t = Tally::default();
            let mut found = 0u64;
            for p in partitions(n) {
                if is_perfect_partition(&p).is_perfect() {
                    found += 1;
                    let inv = perfect_partition_to_factorization(&p);
                    t.holds(inv.is_ok(), || format!("{p} has no preimage"));
                }
            }
            t.eq(Count::from(found), counter.total(n + 1), || {
                format!("perfect partitions of {n}")
            });
            let stream = enumerate_perfect_partitions(n).count();
            t.eq(stream as u64, found, || format!("bijection stream for {n}"));
            [t]
        },
    ));
    out
}

fn oracle_suite(nmax: u64) -> Vec<CheckResult> {
    fan_out(
        "oracle",
        [
            "exhaustive filter count = binomial sum over f_v, every r",
            "exhaustive filter = constructive stream as a set",
            "size criterion = per-weight criterion",
        ],
        (1..=nmax).collect(),
        |counter, n| {
            let mut t: [Tally; 3] = Default::default();
            let s = two_adic_split(n + 1).0;
            let mut found: BTreeSet<Overpartition> = BTreeSet::new();
            for op in enumerate_all_overpartitions(n) {
                let perfect = is_perfect_overpartition(&op).is_perfect();
                t[2].holds(perfect == is_perfect_overpartition_by_size(&op), || {
                    op.to_string()
                });
                if perfect {
                    found.insert(op);
                }
            }
            for r in 0..=s + 1 {
                let got = found.iter().filter(|o| o.overlined_count() == r).count();
                t[0].eq(Count::from(got), count_pop_with(counter, n, r), || {
                    format!("pop({n}, {r})")
                });
            }
            let built: BTreeSet<Overpartition> =
                enumerate_perfect_overpartitions(n, Overlines::All).collect();
            t[1].holds(built == found, || {
                let extra = built.symmetric_difference(&found).next();
                format!(
                    "n = {n}, first difference {}",
                    extra.map(|o| o.to_string()).unwrap_or_default()
                )
            });
            t
        },
    )
}

fn table_cells(rec: &OutputRecord) -> Option<(String, Vec<String>)> {
    match rec {
        OutputRecord::TableRow(row) => Some((
            row.row.clone(),
            row.values
                .iter()
                .map(|c| match c {
                    Cell::Number(n) => n.to_string(),
                    Cell::Text(t) => t.clone(),
                })
                .collect(),
        )),
        _ => None,
    }
}

fn tables_suite() -> Vec<CheckResult> {
    const SUITE: &str = "tables";
    let mut out = Vec::new();

    let mut t1 = Tally::default();
    let rows = commands::table(TableKind::T1, TableOptions::default()).expect("defaults");
    t1.eq(rows.len(), reference::TABLE1.len(), || "row count".into());
    for (rec, (fact, part)) in rows.iter().zip(reference::TABLE1) {
        let (_, cells) = table_cells(rec).expect("table row");
        t1.eq(cells.join(" "), format!("{fact} {part}"), || {
            "table t1 row".into()
        });
    }
    out.push(t1.finish(SUITE, "table t1"));

    let mut t2 = Tally::default();
    let rows = commands::table(TableKind::T2, TableOptions::default()).expect("defaults");
    let cells: Vec<(String, Vec<String>)> = rows.iter().filter_map(table_cells).collect();
    let mut want: Vec<(String, Vec<String>)> = reference::TABLE2_FV
        .iter()
        .enumerate()
        .map(|(v, row)| (format!("v={v}"), row.iter().map(u64::to_string).collect()))
        .collect();
    let dash = || "-".to_string();
    want.push((
        "f(480)".into(),
        vec![dash(), dash(), dash(), reference::TABLE2_F480.to_string()],
    ));
    want.extend(
        reference::TABLE2_POP
            .iter()
            .enumerate()
            .map(|(r, c)| (format!("r={r}"), vec![c.to_string()])),
    );
    want.push((
        "pop(479)".into(),
        vec![reference::TABLE2_POP_TOTAL.to_string()],
    ));
    t2.eq(cells.len(), want.len(), || "row count".into());
    for (got, want) in cells.iter().zip(&want) {
        t2.eq(format!("{got:?}"), format!("{want:?}"), || {
            "table t2 row".into()
        });
    }
    out.push(t2.finish(SUITE, "table t2"));

    let mut t3 = Tally::default();
    let rows = commands::table(TableKind::T3, TableOptions::default()).expect("defaults");
    t3.eq(rows.len(), reference::TABLE3.len(), || "row count".into());
    for (rec, (n, by_r, total)) in rows.iter().zip(reference::TABLE3) {
        let (label, cells) = table_cells(rec).expect("table row");
        let mut want: Vec<String> = by_r.iter().map(u64::to_string).collect();
        want.push(total.to_string());
        t3.eq(label, n.to_string(), || "row label".into());
        t3.eq(cells.join(","), want.join(","), || format!("n = {n}"));
    }
    out.push(t3.finish(SUITE, "table t3"));

    let mut seq = Tally::default();
    let published: [(SequenceKind, &[u64]); 3] = [
        (SequenceKind::Pop, &reference::SEQ_POP),
        (SequenceKind::PopEven, &reference::SEQ_POP_EVEN),
        (SequenceKind::PopOdd, &reference::SEQ_POP_ODD),
    ];
    for (kind, want) in published {
        let got = commands::sequence(kind, want.len() as u64).expect("terms >= 1");
        for (i, (g, w)) in got.iter().zip(want).enumerate() {
            seq.eq(g.clone(), Count::from(*w), || {
                format!("{kind:?} term {}", i + 1)
            });
        }
    }
    out.push(seq.finish(SUITE, "sequence prefixes"));

    let mut ex = Tally::default();
    for (r, want) in reference::POP11.iter().enumerate() {
        let got: BTreeSet<String> =
            enumerate_perfect_overpartitions(11, Overlines::Exactly(r as u32))
                .map(|o| o.to_string())
                .collect();
        let want: BTreeSet<String> = want.iter().map(|s| s.to_string()).collect();
        ex.holds(got == want, || format!("r = {r}: {got:?}"));
    }
    out.push(ex.finish(SUITE, "perfect overpartitions of 11"));
    out
}
