//! The `count`, `enumerate`, `table` and `sequence` subcommands as record
//! producers. `verify` lives in [`crate::checks`].

use perfover::factorize::{
    enumerate_ordered_factorizations, f_nk, f_prime_power, f_squarefree, f_total, f_total_by_parts,
    f_v1_closed, f_v2_closed, f_v3_closed, f_v_formula, f_v_oracle,
};
use perfover::numkit::{divisors, prime_factorize, two_adic_split};
use perfover::overperfect::{
    count_pop_closed, count_pop_pow2_r, count_pop_pow2_total, count_pop_s1, count_pop_s2,
    count_pop_s3, count_pop_total_closed, count_pop_total_with, count_pop_with,
    enumerate_all_overpartitions, enumerate_perfect_overpartitions, is_perfect_overpartition,
    pop_row_with,
};
use perfover::partition::partitions;
use perfover::perfect::{
    enumerate_perfect_partitions, factorization_to_perfect_partition, is_perfect_partition,
};
use perfover::{Count, FactorCounter, Overlines};

use crate::record::{Cell, CountRecord, OutputRecord, TableRow};
use crate::CliError;

/// Largest `N` for which `--xcheck` also enumerates factorizations.
pub const XCHECK_ENUMERATION_LIMIT: u64 = 20_000;
/// Largest `n` for which `--xcheck` also runs the exhaustive definition-level
/// overpartition filter.
pub const XCHECK_EXHAUSTIVE_LIMIT: u64 = 25;
/// Largest `n` for which `--xcheck` brute-forces perfect partitions.
pub const XCHECK_PARTITION_LIMIT: u64 = 40;
/// Default size guard for enumeration streams.
pub const DEFAULT_STREAM_LIMIT: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CountKind {
    /// f(N): ordered factorizations of N
    F,
    /// f(N, k): ordered factorizations of N into k factors
    Fnk,
    /// f_v(N): ordered factorizations of N with exactly v factors equal to 2
    Fv,
    /// number of perfect partitions of n
    Pp,
    /// number of perfect overpartitions of n (with exactly r overlines if --r)
    Pop,
    /// number of perfect overpartitions of n with exactly r overlines
    #[value(name = "pop_r")]
    PopR,
}

#[derive(Debug, Clone, Copy)]
pub struct CountQuery {
    pub kind: CountKind,
    pub value: u64,
    pub k: Option<u32>,
    pub v: Option<u32>,
    pub r: Option<u32>,
}

fn need<T>(x: Option<T>, flag: &str, kind: &str) -> Result<T, CliError> {
    x.ok_or_else(|| CliError::Usage(format!("`count {kind}` requires {flag}")))
}

fn positive(x: u64, what: &str) -> Result<u64, CliError> {
    if x == 0 {
        Err(CliError::Usage(format!(
            "{what} must be a positive integer"
        )))
    } else {
        Ok(x)
    }
}

/// Computes the requested count. The first record is the primary path; with
/// `xcheck` every other applicable path follows.
pub fn count(q: CountQuery, xcheck: bool) -> Result<Vec<CountRecord>, CliError> {
    let mut out = Vec::new();
    let mut push = |quantity: &str, n, k, v, r, value: Count, path: &str| {
        out.push(CountRecord {
            quantity: quantity.into(),
            n: Some(n),
            k,
            v,
            r,
            value,
            path: path.into(),
        })
    };
    match q.kind {
        CountKind::F => {
            let n = positive(q.value, "N")?;
            push("f", n, None, None, None, f_total(n), "divisor-recurrence");
            if xcheck {
                push("f", n, None, None, None, f_total_by_parts(n), "f(N,k)-sum");
                if (2..=XCHECK_ENUMERATION_LIMIT).contains(&n) {
                    let c = enumerate_ordered_factorizations(n)?.count();
                    push("f", n, None, None, None, Count::from(c), "enumeration");
                }
            }
        }
        CountKind::Fnk => {
            let n = q.value;
            let k = need(q.k, "--k", "fnk")?;
            if n < 2 || k == 0 {
                return Err(CliError::Usage(
                    "`count fnk` requires N >= 2 and k >= 1".into(),
                ));
            }
            push(
                "fnk",
                n,
                Some(k),
                None,
                None,
                f_nk(n, k)?,
                "inclusion-exclusion",
            );
            if xcheck {
                if n <= XCHECK_ENUMERATION_LIMIT {
                    let c = enumerate_ordered_factorizations(n)?
                        .filter(|of| of.len() == k as usize)
                        .count();
                    push("fnk", n, Some(k), None, None, Count::from(c), "enumeration");
                }
                let pf = prime_factorize(n)?;
                if let [(p, alpha)] = pf.entries() {
                    if *p % 2 == 1 {
                        push(
                            "fnk",
                            n,
                            Some(k),
                            None,
                            None,
                            f_prime_power(*p, *alpha, k)?,
                            "prime-power",
                        );
                    }
                }
                if pf.is_squarefree() {
                    let t = pf.distinct() as u32;
                    push(
                        "fnk",
                        n,
                        Some(k),
                        None,
                        None,
                        f_squarefree(t, k),
                        "squarefree-stirling",
                    );
                }
            }
        }
        CountKind::Fv => {
            let n = positive(q.value, "N")?;
            let v = need(q.v, "--v", "fv")?;
            let mut counter = FactorCounter::new();
            push(
                "fv",
                n,
                None,
                Some(v),
                None,
                counter.twos(n, v),
                "divisor-recurrence",
            );
            if xcheck {
                push(
                    "fv",
                    n,
                    None,
                    Some(v),
                    None,
                    f_v_formula(n, v),
                    "closed-form",
                );
                let (s, m) = two_adic_split(n);
                if s >= 1 && m > 1 && v < s {
                    let parts = f_v1_closed(n, v)? + f_v2_closed(n, v)? + f_v3_closed(n, v)?;
                    push("fv", n, None, Some(v), None, parts, "three-family-sum");
                }
                if (2..=XCHECK_ENUMERATION_LIMIT).contains(&n) {
                    push(
                        "fv",
                        n,
                        None,
                        Some(v),
                        None,
                        f_v_oracle(n, v)?,
                        "enumeration",
                    );
                }
            }
        }
        CountKind::Pp => {
            let n = positive(q.value, "n")?;
            push(
                "pp",
                n,
                None,
                None,
                None,
                f_total(n + 1),
                "f(n+1)-recurrence",
            );
            if xcheck {
                push(
                    "pp",
                    n,
                    None,
                    None,
                    None,
                    f_total_by_parts(n + 1),
                    "f(n+1,k)-sum",
                );
                if n < XCHECK_ENUMERATION_LIMIT {
                    let c = enumerate_perfect_partitions(n).count();
                    push(
                        "pp",
                        n,
                        None,
                        None,
                        None,
                        Count::from(c),
                        "bijection-enumeration",
                    );
                }
                if n <= XCHECK_PARTITION_LIMIT {
                    let c = partitions(n)
                        .filter(|p| is_perfect_partition(p).is_perfect())
                        .count();
                    push("pp", n, None, None, None, Count::from(c), "brute-force");
                }
            }
        }
        CountKind::Pop | CountKind::PopR => {
            let n = positive(q.value, "n")?;
            if q.kind == CountKind::PopR {
                need(q.r, "--r", "pop_r")?;
            }
            let mut counter = FactorCounter::new();
            let (s, m) = two_adic_split(n + 1);
            match q.r {
                Some(r) => {
                    let rr = Some(r);
                    push(
                        "pop",
                        n,
                        None,
                        None,
                        rr,
                        count_pop_with(&mut counter, n, r),
                        "binomial-sum-recursive",
                    );
                    if xcheck {
                        push(
                            "pop",
                            n,
                            None,
                            None,
                            rr,
                            count_pop_closed(n, r),
                            "binomial-sum-closed",
                        );
                        if m == 1 {
                            push(
                                "pop",
                                n,
                                None,
                                None,
                                rr,
                                count_pop_pow2_r(s, r),
                                "power-of-2-formula",
                            );
                        }
                        if n < XCHECK_ENUMERATION_LIMIT {
                            let c =
                                enumerate_perfect_overpartitions(n, Overlines::Exactly(r)).count();
                            push("pop", n, None, None, rr, Count::from(c), "construction");
                        }
                        if n <= XCHECK_EXHAUSTIVE_LIMIT {
                            let c = enumerate_all_overpartitions(n)
                                .filter(|o| o.overlined_count() == r)
                                .filter(|o| is_perfect_overpartition(o).is_perfect())
                                .count();
                            push("pop", n, None, None, rr, Count::from(c), "exhaustive");
                        }
                    }
                }
                None => {
                    push(
                        "pop",
                        n,
                        None,
                        None,
                        None,
                        count_pop_total_with(&mut counter, n),
                        "binomial-sum-recursive",
                    );
                    if xcheck {
                        push(
                            "pop",
                            n,
                            None,
                            None,
                            None,
                            count_pop_total_closed(n),
                            "binomial-sum-closed",
                        );
                        match (s, m) {
                            (_, 1) => push(
                                "pop",
                                n,
                                None,
                                None,
                                None,
                                count_pop_pow2_total(s),
                                "power-of-2-formula",
                            ),
                            (0, _) => push(
                                "pop",
                                n,
                                None,
                                None,
                                None,
                                f_total_by_parts(n + 1),
                                "even-weight",
                            ),
                            (1, _) => push(
                                "pop",
                                n,
                                None,
                                None,
                                None,
                                count_pop_s1(n)?,
                                "order-1-formula",
                            ),
                            (2, _) => push(
                                "pop",
                                n,
                                None,
                                None,
                                None,
                                count_pop_s2(n)?,
                                "order-2-formula",
                            ),
                            (3, _) => push(
                                "pop",
                                n,
                                None,
                                None,
                                None,
                                count_pop_s3(n)?,
                                "order-3-formula",
                            ),
                            _ => {}
                        }
                        if n < XCHECK_ENUMERATION_LIMIT {
                            let c = enumerate_perfect_overpartitions(n, Overlines::All).count();
                            push("pop", n, None, None, None, Count::from(c), "construction");
                        }
                        if n <= XCHECK_EXHAUSTIVE_LIMIT {
                            let c = enumerate_all_overpartitions(n)
                                .filter(|o| is_perfect_overpartition(o).is_perfect())
                                .count();
                            push("pop", n, None, None, None, Count::from(c), "exhaustive");
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// `f(d)` for every divisor `1 < d < N` in increasing order: the terms the
/// divisor recurrence sums to obtain `f(N)`.
pub fn divisor_chain(n: u64) -> Result<Vec<CountRecord>, CliError> {
    positive(n, "N")?;
    let mut counter = FactorCounter::new();
    Ok(divisors(n)?
        .into_iter()
        .filter(|&d| d > 1 && d < n)
        .map(|d| CountRecord {
            quantity: "f".into(),
            n: Some(d),
            k: None,
            v: None,
            r: None,
            value: counter.total(d),
            path: "divisor-recurrence-term".into(),
        })
        .collect())
}

/// `Err(Mismatch)` listing every path when the records disagree.
pub fn require_agreement(records: &[CountRecord]) -> Result<(), CliError> {
    let first = &records[0].value;
    if records.iter().all(|r| &r.value == first) {
        return Ok(());
    }
    let detail = records
        .iter()
        .map(|r| format!("{}={}", r.path, r.value))
        .collect::<Vec<_>>()
        .join(", ");
    Err(CliError::Mismatch(format!("paths disagree: {detail}")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum EnumerateKind {
    /// ordered factorizations of N
    Factorizations,
    /// perfect partitions of n
    Perfect,
    /// perfect overpartitions of n
    Overperfect,
}

/// Record stream for `enumerate`, after the size guard.
pub fn enumerate(
    kind: EnumerateKind,
    n: u64,
    r: Option<u32>,
    limit: u64,
    force: bool,
) -> Result<Box<dyn Iterator<Item = OutputRecord>>, CliError> {
    positive(n, "the size argument")?;
    if n > limit && !force {
        return Err(CliError::Guard(format!(
            "{n} exceeds the stream limit {limit}; pass --force or raise --limit"
        )));
    }
    let stream: Box<dyn Iterator<Item = OutputRecord>> = match kind {
        EnumerateKind::Factorizations => Box::new(
            enumerate_ordered_factorizations(n)?
                .zip(1..)
                .map(|(of, i)| OutputRecord::factorization(i, &of)),
        ),
        EnumerateKind::Perfect => Box::new(
            enumerate_perfect_partitions(n)
                .zip(1..)
                .map(|(p, i)| OutputRecord::partition(i, &p)),
        ),
        EnumerateKind::Overperfect => {
            let which = r.map_or(Overlines::All, Overlines::Exactly);
            Box::new(
                enumerate_perfect_overpartitions(n, which)
                    .zip(1..)
                    .map(|(o, i)| OutputRecord::overpartition(i, &o)),
            )
        }
    };
    Ok(stream)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum TableKind {
    /// factorizations of n+1 beside the perfect partitions of n
    T1,
    /// f_v(n+1) split into its three families, and p̄(n, r)
    T2,
    /// p̄(n, r) and p̄(n) for n = 1..nmax
    T3,
}

#[derive(Debug, Clone, Copy)]
pub struct TableOptions {
    /// Weight for t1 (default 5) and t2 (default 479).
    pub n: Option<u64>,
    pub nmax: u64,
    pub rmax: u32,
}

impl Default for TableOptions {
    fn default() -> Self {
        TableOptions {
            n: None,
            nmax: 50,
            rmax: 5,
        }
    }
}

fn num(c: impl Into<Count>) -> Cell {
    Cell::Number(c.into())
}

fn row(table: &str, row: String, columns: &[String], values: Vec<Cell>) -> OutputRecord {
    OutputRecord::TableRow(TableRow {
        table: table.into(),
        row,
        columns: columns.to_vec(),
        values,
    })
}

pub fn table(kind: TableKind, opts: TableOptions) -> Result<Vec<OutputRecord>, CliError> {
    let mut out = Vec::new();
    match kind {
        TableKind::T1 => {
            let n = positive(opts.n.unwrap_or(5), "n")?;
            let cols = [
                format!("factorization of {}", n + 1),
                format!("perfect partition of {n}"),
            ];
            // Rows by number of factors, then lexicographically.
            let mut stream: Vec<_> = enumerate_ordered_factorizations(n + 1)?.collect();
            stream.sort_by_key(|of| of.len());
            for (i, of) in stream.iter().enumerate() {
                let factors: Vec<String> = of.factors().iter().map(u64::to_string).collect();
                let pp = factorization_to_perfect_partition(of);
                out.push(row(
                    "t1",
                    (i + 1).to_string(),
                    &cols,
                    vec![Cell::Text(factors.join("*")), Cell::Text(pp.to_string())],
                ));
            }
        }
        TableKind::T2 => {
            let n = positive(opts.n.unwrap_or(479), "n")?;
            let big = n + 1;
            let (s, m) = two_adic_split(big);
            if s == 0 || m == 1 {
                return Err(CliError::Usage(format!(
                    "table t2 needs n + 1 even and not a power of 2, got {big}"
                )));
            }
            let cols: Vec<String> = ["_1", "_2", "_3", ""]
                .iter()
                .map(|suffix| format!("f_v({big}){suffix}"))
                .collect();
            let mut counter = FactorCounter::new();
            for v in 0..=s {
                out.push(row(
                    "t2",
                    format!("v={v}"),
                    &cols,
                    vec![
                        num(f_v1_closed(big, v)?),
                        num(f_v2_closed(big, v)?),
                        num(f_v3_closed(big, v)?),
                        num(counter.twos(big, v)),
                    ],
                ));
            }
            let dash = || Cell::Text("-".into());
            out.push(row(
                "t2",
                format!("f({big})"),
                &cols,
                vec![dash(), dash(), dash(), num(counter.total(big))],
            ));
            let pop_cols = [format!("pop({n},r)")];
            let popr = pop_row_with(&mut counter, n);
            for (r, c) in popr.counts_by_r.iter().enumerate() {
                out.push(row(
                    "t2-pop",
                    format!("r={r}"),
                    &pop_cols,
                    vec![num(c.clone())],
                ));
            }
            out.push(row(
                "t2-pop",
                format!("pop({n})"),
                &pop_cols,
                vec![num(popr.total)],
            ));
        }
        TableKind::T3 => {
            let mut cols: Vec<String> = (0..=opts.rmax).map(|r| format!("r={r}")).collect();
            cols.push("total".into());
            let mut counter = FactorCounter::new();
            for n in 1..=opts.nmax {
                let pr = pop_row_with(&mut counter, n);
                let mut values: Vec<Cell> = (0..=opts.rmax).map(|r| num(pr.get(r))).collect();
                values.push(num(pr.total));
                out.push(row("t3", n.to_string(), &cols, values));
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SequenceKind {
    /// p̄(n), n >= 1
    Pop,
    /// p̄(2n), n >= 1
    #[value(name = "pop_even")]
    PopEven,
    /// p̄(2n - 1), n >= 1
    #[value(name = "pop_odd")]
    PopOdd,
}

impl SequenceKind {
    fn name(self) -> &'static str {
        match self {
            SequenceKind::Pop => "pop",
            SequenceKind::PopEven => "pop_even",
            SequenceKind::PopOdd => "pop_odd",
        }
    }

    fn weight(self, index: u64) -> u64 {
        match self {
            SequenceKind::Pop => index,
            SequenceKind::PopEven => 2 * index,
            SequenceKind::PopOdd => 2 * index - 1,
        }
    }
}

/// Terms `1..=terms` of the sequence.
pub fn sequence(kind: SequenceKind, terms: u64) -> Result<Vec<Count>, CliError> {
    positive(terms, "the number of terms")?;
    let mut counter = FactorCounter::new();
    Ok((1..=terms)
        .map(|i| count_pop_total_with(&mut counter, kind.weight(i)))
        .collect())
}

pub fn sequence_records(kind: SequenceKind, terms: u64) -> Result<Vec<OutputRecord>, CliError> {
    Ok(sequence(kind, terms)?
        .into_iter()
        .zip(1..)
        .map(|(value, index)| OutputRecord::SeqTerm {
            sequence: kind.name().into(),
            index,
            value,
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(kind: CountKind, value: u64) -> CountQuery {
        CountQuery {
            kind,
            value,
            k: None,
            v: None,
            r: None,
        }
    }

    #[test]
    fn xcheck_paths_agree() {
        let cases = [
            CountQuery {
                k: Some(2),
                ..q(CountKind::Fnk, 105)
            },
            CountQuery {
                k: Some(2),
                ..q(CountKind::Fnk, 81)
            },
            CountQuery {
                v: Some(1),
                ..q(CountKind::Fv, 12)
            },
            CountQuery {
                v: Some(3),
                ..q(CountKind::Fv, 480)
            },
            q(CountKind::F, 480),
            q(CountKind::Pp, 23),
            q(CountKind::Pop, 23),
            q(CountKind::Pop, 15),
            q(CountKind::Pop, 11),
            q(CountKind::Pop, 5),
            q(CountKind::Pop, 479),
            CountQuery {
                r: Some(2),
                ..q(CountKind::Pop, 11)
            },
            CountQuery {
                r: Some(3),
                ..q(CountKind::PopR, 31)
            },
        ];
        for c in cases {
            let recs = count(c, true).unwrap();
            assert!(recs.len() >= 3, "{c:?} ran {} paths", recs.len());
            require_agreement(&recs).unwrap();
        }
    }

    #[test]
    fn headline_values() {
        assert_eq!(
            count(q(CountKind::Pop, 479), false).unwrap()[0].value,
            5898u32
        );
        let fv = CountQuery {
            v: Some(1),
            ..q(CountKind::Fv, 12)
        };
        assert_eq!(count(fv, false).unwrap()[0].value, 2u32);
        let pr = CountQuery {
            r: Some(2),
            ..q(CountKind::Pop, 11)
        };
        assert_eq!(count(pr, false).unwrap()[0].value, 3u32);
    }

    #[test]
    fn bad_arguments() {
        assert!(matches!(
            count(q(CountKind::Fv, 12), false),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            count(q(CountKind::PopR, 11), false),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            count(q(CountKind::F, 0), false),
            Err(CliError::Usage(_))
        ));
        let fnk = CountQuery {
            k: Some(1),
            ..q(CountKind::Fnk, 1)
        };
        assert!(matches!(count(fnk, false), Err(CliError::Usage(_))));
    }

    #[test]
    fn guard() {
        assert!(matches!(
            enumerate(
                EnumerateKind::Factorizations,
                20_000,
                None,
                DEFAULT_STREAM_LIMIT,
                false
            ),
            Err(CliError::Guard(_))
        ));
        assert!(enumerate(
            EnumerateKind::Factorizations,
            20_000,
            None,
            DEFAULT_STREAM_LIMIT,
            true
        )
        .is_ok());
    }

    #[test]
    fn chain_of_24() {
        let chain: Vec<(u64, String)> = divisor_chain(24)
            .unwrap()
            .into_iter()
            .map(|r| (r.n.unwrap(), r.value.to_string()))
            .collect();
        let want = [(2, "1"), (3, "1"), (4, "2"), (6, "3"), (8, "4"), (12, "8")];
        assert_eq!(chain, want.map(|(d, v)| (d, v.to_string())));
    }

    #[test]
    fn mismatch_is_reported() {
        let mut recs = count(q(CountKind::F, 12), true).unwrap();
        recs[1].value = Count::from(7u32);
        let err = require_agreement(&recs).unwrap_err();
        assert!(err.to_string().contains("f(N,k)-sum=7"));
    }
}
