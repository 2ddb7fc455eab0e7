use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use perfover_cli::checks::{self, Limits, Suite};
use perfover_cli::commands::{
    self, CountKind, CountQuery, EnumerateKind, SequenceKind, TableKind, TableOptions,
    DEFAULT_STREAM_LIMIT,
};
use perfover_cli::record::{Emitter, Format, OutputRecord};
use perfover_cli::CliError;

const EXIT_CODES: &str = "\
Exit codes:
  0  success
  2  bad arguments
  3  --xcheck paths disagree, or a verify check failed
  4  enumeration refused by the size guard (see --limit, --force)";

/// Ordered factorizations, perfect partitions and perfect overpartitions.
#[derive(Debug, Parser)]
#[command(name = "perfover", version, after_help = EXIT_CODES)]
struct Cli {
    /// Output format; json is one object per line with a `kind` field.
    #[arg(long, global = true, value_enum, default_value = "plain")]
    format: Format,
    /// Compute counts by every applicable method and fail unless all agree.
    #[arg(long, global = true)]
    xcheck: bool,
    /// Render overlines with a combining overline instead of a trailing `~`.
    #[arg(long, global = true)]
    unicode: bool,
    /// Enumerate even beyond the stream size limit.
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a single count and the method used.
    Count {
        #[arg(value_enum)]
        kind: CountKind,
        /// N for f, fnk, fv; the weight n for pp, pop, pop_r.
        value: u64,
        /// Number of factors (fnk).
        #[arg(long)]
        k: Option<u32>,
        /// Number of factors equal to 2 (fv).
        #[arg(long)]
        v: Option<u32>,
        /// Number of overlined parts (pop, pop_r).
        #[arg(long)]
        r: Option<u32>,
        /// For f: also print f(d) for each divisor 1 < d < N.
        #[arg(long)]
        chain: bool,
    },
    /// Stream every object of a kind, in canonical order.
    Enumerate {
        #[arg(value_enum)]
        kind: EnumerateKind,
        /// N for factorizations; the weight n otherwise.
        n: u64,
        /// Only overpartitions with exactly this many overlined parts.
        #[arg(long)]
        r: Option<u32>,
        /// Largest size enumerated without --force.
        #[arg(long, default_value_t = DEFAULT_STREAM_LIMIT)]
        limit: u64,
    },
    /// Reproduce a reference table.
    Table {
        #[arg(value_enum)]
        which: TableKind,
        /// Weight for t1 (default 5) and t2 (default 479).
        #[arg(long)]
        n: Option<u64>,
        /// Last row of t3.
        #[arg(long, default_value_t = 50)]
        nmax: u64,
        /// Last r column of t3.
        #[arg(long, default_value_t = 5)]
        rmax: u32,
    },
    /// Print the first terms of a sequence.
    Sequence {
        #[arg(value_enum)]
        which: SequenceKind,
        /// Number of terms.
        nmax: u64,
        /// Write `index value` lines (OEIS b-file format).
        #[arg(long)]
        bfile: bool,
    },
    /// Run cross-validation suites.
    Verify {
        #[arg(value_enum, default_value = "all")]
        suite: Suite,
        /// Upper bound for every selected suite (defaults: fv 2000,
        /// identities 5000, bijection 1000 / 20, oracle 31). The oracle and
        /// brute-force searches grow exponentially; keep them below ~35.
        #[arg(long)]
        nmax: Option<u64>,
    },
}

fn run(cli: Cli, out: &mut Emitter<impl Write>) -> Result<(), CliError> {
    match cli.command {
        Command::Count {
            kind,
            value,
            k,
            v,
            r,
            chain,
        } => {
            let q = CountQuery {
                kind,
                value,
                k,
                v,
                r,
            };
            let records = commands::count(q, cli.xcheck)?;
            if chain && kind == CountKind::F {
                for rec in commands::divisor_chain(value)? {
                    out.emit(&OutputRecord::Count(rec))?;
                }
            }
            for rec in &records {
                out.emit(&OutputRecord::Count(rec.clone()))?;
            }
            commands::require_agreement(&records)
        }
        Command::Enumerate { kind, n, r, limit } => {
            for rec in commands::enumerate(kind, n, r, limit, cli.force)? {
                out.emit(&rec)?;
            }
            Ok(())
        }
        Command::Table {
            which,
            n,
            nmax,
            rmax,
        } => {
            for rec in commands::table(which, TableOptions { n, nmax, rmax })? {
                out.emit(&rec)?;
            }
            Ok(())
        }
        Command::Sequence { which, nmax, .. } => {
            for rec in commands::sequence_records(which, nmax)? {
                out.emit(&rec)?;
            }
            Ok(())
        }
        Command::Verify { suite, nmax } => {
            let limits = nmax.map_or_else(Limits::default, Limits::with_nmax);
            let results = checks::run(suite, limits);
            for res in &results {
                out.emit(&res.record())?;
            }
            match results.iter().filter(|r| !r.passed()).count() {
                0 => Ok(()),
                failed => Err(CliError::ChecksFailed(failed)),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let bfile = matches!(cli.command, Command::Sequence { bfile: true, .. });
    let stdout = io::stdout().lock();
    let mut out = Emitter::new(BufWriter::new(stdout), cli.format, cli.unicode).with_bfile(bfile);
    let result = run(cli, &mut out);
    let flushed = out.into_inner().flush();
    match result.and(flushed.map_err(CliError::from)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("perfover: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
