//! Output records and their plain, JSON-lines and CSV renderings.
//!
//! JSON output is one object per line with a `kind` discriminator. Counts are
//! emitted as JSON numbers of arbitrary size.

use std::io::{self, Write};

use perfover::{Count, OrderedFactorization, Overpartition, Partition};
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

fn count_as_number<S: Serializer>(c: &Count, s: S) -> Result<S::Ok, S::Error> {
    RawValue::from_string(c.to_string())
        .map_err(serde::ser::Error::custom)?
        .serialize(s)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CountRecord {
    /// One of `f`, `fnk`, `fv`, `pp`, `pop`.
    pub quantity: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(serialize_with = "count_as_number")]
    pub value: Count,
    pub path: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PartGroup {
    pub part: u64,
    pub multiplicity: u64,
    /// Always `false` in `partition` records.
    pub overlined: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub table: String,
    pub row: String,
    pub columns: Vec<String>,
    pub values: Vec<Cell>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    #[serde(serialize_with = "count_as_number")]
    Number(Count),
    Text(String),
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Number(c) => c.to_string(),
            Cell::Text(t) => t.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum OutputRecord {
    Count(CountRecord),
    Factorization {
        index: u64,
        n: u64,
        factors: Vec<u64>,
        twos: u32,
    },
    Partition {
        index: u64,
        n: u64,
        groups: Vec<PartGroup>,
    },
    Overpartition {
        index: u64,
        n: u64,
        overlined: u32,
        groups: Vec<PartGroup>,
    },
    TableRow(TableRow),
    SeqTerm {
        sequence: String,
        index: u64,
        #[serde(serialize_with = "count_as_number")]
        value: Count,
    },
    CheckResult {
        suite: String,
        check: String,
        passed: bool,
        cases: u64,
        #[serde(skip_serializing_if = "Option::is_none")]
        counterexample: Option<String>,
    },
}

impl OutputRecord {
    pub fn factorization(index: u64, of: &OrderedFactorization) -> Self {
        OutputRecord::Factorization {
            index,
            n: of.product(),
            factors: of.factors().to_vec(),
            twos: of.twos(),
        }
    }

    pub fn partition(index: u64, p: &Partition) -> Self {
        OutputRecord::Partition {
            index,
            n: p.weight(),
            groups: p
                .groups()
                .iter()
                .map(|&(part, multiplicity)| PartGroup {
                    part,
                    multiplicity,
                    overlined: false,
                })
                .collect(),
        }
    }

    pub fn overpartition(index: u64, op: &Overpartition) -> Self {
        OutputRecord::Overpartition {
            index,
            n: op.weight(),
            overlined: op.overlined_count(),
            groups: op
                .groups()
                .iter()
                .map(|g| PartGroup {
                    part: g.part,
                    multiplicity: g.multiplicity,
                    overlined: g.overlined,
                })
                .collect(),
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            OutputRecord::Count(_) => "count",
            OutputRecord::Factorization { .. } => "factorization",
            OutputRecord::Partition { .. } => "partition",
            OutputRecord::Overpartition { .. } => "overpartition",
            OutputRecord::TableRow(_) => "table_row",
            OutputRecord::SeqTerm { .. } => "seq_term",
            OutputRecord::CheckResult { .. } => "check_result",
        }
    }
}

fn factors_text(factors: &[u64], unicode: bool) -> String {
    let sep = if unicode { "·" } else { "*" };
    factors
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn groups_text(groups: &[PartGroup], unicode: bool) -> String {
    let op = Overpartition::from_groups(
        groups
            .iter()
            .map(|g| perfover::OverGroup {
                part: g.part,
                multiplicity: g.multiplicity,
                overlined: g.overlined,
            })
            .collect(),
    )
    .expect("records are built from valid partitions");
    if unicode {
        op.display_unicode()
    } else {
        op.to_string()
    }
}

fn count_label(c: &CountRecord) -> String {
    let n = c.n.unwrap_or_default();
    match (c.quantity.as_str(), c.k, c.v, c.r) {
        ("fnk", Some(k), _, _) => format!("f({n}, {k})"),
        ("fv", _, Some(v), _) => format!("f_{v}({n})"),
        ("pop", _, _, Some(r)) => format!("pop({n}, {r})"),
        (q, ..) => format!("{q}({n})"),
    }
}

/// Writes records one at a time in the chosen format.
///
/// Plain tables get a header line whenever the table changes; CSV gets a
/// header whenever the record kind (or table) changes.
pub struct Emitter<W: Write> {
    out: W,
    format: Format,
    unicode: bool,
    bfile: bool,
    section: Option<String>,
}

impl<W: Write> Emitter<W> {
    pub fn new(out: W, format: Format, unicode: bool) -> Self {
        Emitter {
            out,
            format,
            unicode,
            bfile: false,
            section: None,
        }
    }

    /// Sequence terms are written as bare `index value` lines.
    pub fn with_bfile(mut self, bfile: bool) -> Self {
        self.bfile = bfile;
        self
    }

    pub fn into_inner(self) -> W {
        self.out
    }

    pub fn emit(&mut self, rec: &OutputRecord) -> io::Result<()> {
        if self.bfile {
            if let OutputRecord::SeqTerm { index, value, .. } = rec {
                return writeln!(self.out, "{index} {value}");
            }
        }
        match self.format {
            Format::Json => {
                serde_json::to_writer(&mut self.out, rec)?;
                writeln!(self.out)
            }
            Format::Plain => self.plain(rec),
            Format::Csv => self.csv(rec),
        }
    }

    fn plain(&mut self, rec: &OutputRecord) -> io::Result<()> {
        let u = self.unicode;
        match rec {
            OutputRecord::Count(c) => {
                writeln!(self.out, "{} = {}  [{}]", count_label(c), c.value, c.path)
            }
            OutputRecord::Factorization { factors, .. } => {
                writeln!(self.out, "{}", factors_text(factors, u))
            }
            OutputRecord::Partition { groups, .. } | OutputRecord::Overpartition { groups, .. } => {
                writeln!(self.out, "{}", groups_text(groups, u))
            }
            OutputRecord::TableRow(t) => {
                if self.section.as_deref() != Some(t.table.as_str()) {
                    if self.section.is_some() {
                        writeln!(self.out)?;
                    }
                    self.section = Some(t.table.clone());
                    writeln!(self.out, "# {}", t.table)?;
                    writeln!(self.out, "row\t{}", t.columns.join("\t"))?;
                }
                let cells: Vec<String> = t.values.iter().map(Cell::text).collect();
                writeln!(self.out, "{}\t{}", t.row, cells.join("\t"))
            }
            OutputRecord::SeqTerm {
                sequence,
                index,
                value,
            } => {
                writeln!(self.out, "{sequence}({index}) = {value}")
            }
            OutputRecord::CheckResult {
                suite,
                check,
                passed,
                cases,
                counterexample,
            } => {
                let status = if *passed { "PASS" } else { "FAIL" };
                write!(self.out, "[{status}] {suite}/{check}: {cases} cases")?;
                match counterexample {
                    Some(ce) => writeln!(self.out, "; first counterexample: {ce}"),
                    None => writeln!(self.out),
                }
            }
        }
    }

    fn csv(&mut self, rec: &OutputRecord) -> io::Result<()> {
        let u = self.unicode;
        let (section, header, row): (String, Vec<String>, Vec<String>) = match rec {
            OutputRecord::Count(c) => (
                "count".into(),
                ["quantity", "n", "k", "v", "r", "value", "path"]
                    .map(String::from)
                    .to_vec(),
                vec![
                    c.quantity.clone(),
                    opt(c.n),
                    opt(c.k),
                    opt(c.v),
                    opt(c.r),
                    c.value.to_string(),
                    c.path.clone(),
                ],
            ),
            OutputRecord::Factorization {
                index,
                n,
                factors,
                twos,
            } => (
                rec.kind().into(),
                ["index", "n", "factors", "twos"].map(String::from).to_vec(),
                vec![
                    index.to_string(),
                    n.to_string(),
                    factors_text(factors, u),
                    twos.to_string(),
                ],
            ),
            OutputRecord::Partition { index, n, groups } => (
                rec.kind().into(),
                ["index", "n", "partition", "blocks"]
                    .map(String::from)
                    .to_vec(),
                vec![
                    index.to_string(),
                    n.to_string(),
                    groups_text(groups, u),
                    groups.len().to_string(),
                ],
            ),
            OutputRecord::Overpartition {
                index,
                n,
                overlined,
                groups,
            } => (
                rec.kind().into(),
                ["index", "n", "overpartition", "overlined"]
                    .map(String::from)
                    .to_vec(),
                vec![
                    index.to_string(),
                    n.to_string(),
                    groups_text(groups, u),
                    overlined.to_string(),
                ],
            ),
            OutputRecord::TableRow(t) => (
                format!("table_row:{}", t.table),
                ["table", "row"]
                    .into_iter()
                    .map(String::from)
                    .chain(t.columns.iter().cloned())
                    .collect(),
                [t.table.clone(), t.row.clone()]
                    .into_iter()
                    .chain(t.values.iter().map(Cell::text))
                    .collect(),
            ),
            OutputRecord::SeqTerm {
                sequence,
                index,
                value,
            } => (
                rec.kind().into(),
                ["sequence", "index", "value"].map(String::from).to_vec(),
                vec![sequence.clone(), index.to_string(), value.to_string()],
            ),
            OutputRecord::CheckResult {
                suite,
                check,
                passed,
                cases,
                counterexample,
            } => (
                rec.kind().into(),
                ["suite", "check", "passed", "cases", "counterexample"]
                    .map(String::from)
                    .to_vec(),
                vec![
                    suite.clone(),
                    check.clone(),
                    passed.to_string(),
                    cases.to_string(),
                    counterexample.clone().unwrap_or_default(),
                ],
            ),
        };
        let mut w = csv::Writer::from_writer(Vec::new());
        if self.section.as_deref() != Some(section.as_str()) {
            w.write_record(&header)?;
            self.section = Some(section);
        }
        w.write_record(&row)?;
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        self.out.write_all(&bytes)
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}
