//! Subcommand implementations for the `quartic` binary.
//!
//! Each command writes to a caller-supplied sink and returns the process exit
//! status, so the binary is a thin argument parser around this crate.

pub mod record;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use quartic_core::families::Family;
use quartic_core::{builtin_families, match_h, Engine, Method, SearchOptions};

use record::{
    write_csv, write_json, CatalogRecord, MatchRecord, OutputRecord, RecordError, VerifyRecord,
};

/// Process exit statuses.
pub mod exit {
    pub const SUCCESS: u8 = 0;
    pub const VERIFY_FAILED: u8 = 1;
    pub const NO_SOLUTION: u8 = 2;
    pub const USAGE: u8 = 64;
    pub const NUMERIC: u8 = 65;
    pub const IO: u8 = 66;
}

/// Environment variable holding the default worker count.
pub const THREADS_ENV: &str = "QUARTIC_THREADS";

/// `solve` starts bound doubling here (or at `--bound` if smaller).
pub const SOLVE_INITIAL_BOUND: u32 = 16;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] quartic_core::Error),
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: io::Error,
    },
    #[error("writing output: {0}")]
    Record(#[from] RecordError),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use quartic_core::Error as E;
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Core(E::NonPositiveH(_) | E::InvalidArgument(_)) => exit::USAGE,
            CliError::Core(_) => exit::NUMERIC,
            CliError::Io { .. } | CliError::Record(_) => exit::IO,
        }
    }
}

impl From<io::Error> for CliError {
    fn from(source: io::Error) -> Self {
        CliError::Io {
            context: "writing output".into(),
            source,
        }
    }
}

pub type CliResult = Result<u8, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

fn positive_u64(h: &BigInt) -> Result<u64, CliError> {
    if !h.is_positive() {
        return Err(CliError::Usage(format!("--h must be at least 1, got {h}")));
    }
    h.to_u64().ok_or_else(|| {
        quartic_core::Error::NumericLimit(format!("h = {h} does not fit in 64 bits")).into()
    })
}

fn engine(threads: usize) -> Result<Engine, CliError> {
    Ok(Engine::new(SearchOptions {
        threads,
        ..SearchOptions::default()
    })?)
}

/// Checks every family's residual; one line (or JSON entry) per family.
pub fn verify(families: &[Family], json: bool, out: &mut dyn Write) -> CliResult {
    let results: Vec<VerifyRecord> = families.iter().map(VerifyRecord::check).collect();
    if json {
        serde_json::to_writer_pretty(&mut *out, &results).map_err(RecordError::from)?;
        writeln!(out)?;
    } else {
        for r in &results {
            if r.verified {
                writeln!(out, "{:<3} OK    {}", r.id, r.provenance)?;
            } else {
                writeln!(out, "{:<3} FAIL  residual {}", r.id, r.residual)?;
            }
        }
    }
    let all_ok = results.iter().all(|r| r.verified);
    Ok(if all_ok {
        exit::SUCCESS
    } else {
        exit::VERIFY_FAILED
    })
}

pub struct SolveArgs {
    pub h: BigInt,
    pub bound: u32,
    pub method: Method,
    pub all: bool,
    pub json: bool,
    pub threads: usize,
}

/// Without `--all`: family-first solver with bound doubling up to `--bound`.
/// With `--all`: every solution at `--bound` using `--method`.
pub fn solve(args: &SolveArgs, out: &mut dyn Write) -> CliResult {
    let h = positive_u64(&args.h)?;
    if args.bound == 0 {
        return Err(CliError::Usage("--bound must be at least 1".into()));
    }
    let mut engine = engine(args.threads)?;
    let solutions = if args.all {
        engine.search(h, args.bound, args.method)?
    } else {
        let initial = SOLVE_INITIAL_BOUND.min(args.bound);
        engine
            .find_solution(h, initial, args.bound)?
            .into_iter()
            .collect()
    };
    let records: Vec<OutputRecord> = solutions.iter().map(OutputRecord::from_solution).collect();
    if args.json {
        write_json(&records, &mut *out)?;
    } else if !records.is_empty() {
        write_csv(&records, &mut *out)?;
    }
    Ok(if records.is_empty() {
        exit::NO_SOLUTION
    } else {
        exit::SUCCESS
    })
}

/// Lists every builtin family parameter giving `h`, with the instance.
pub fn match_cmd(h: &BigInt, json: bool, out: &mut dyn Write) -> CliResult {
    if !h.is_positive() {
        return Err(CliError::Usage(format!("--h must be at least 1, got {h}")));
    }
    let matches = match_h(h);
    let mut records = Vec::with_capacity(matches.len());
    for m in &matches {
        let s = m
            .instantiate()
            .expect("match_h only returns builtin families");
        records.push(MatchRecord {
            family: m.family.clone(),
            p: m.p.to_string(),
            q: m.q.to_string(),
            source: s.source.to_string(),
            h: s.h.to_string(),
            a: s.a.to_string(),
            b: s.b.to_string(),
            c: s.c.to_string(),
            d: s.d.to_string(),
            nontrivial: s.is_nontrivial(),
        });
    }
    if json {
        serde_json::to_writer_pretty(&mut *out, &records).map_err(RecordError::from)?;
        writeln!(out)?;
    } else {
        for r in &records {
            let kind = if r.nontrivial {
                "nontrivial"
            } else {
                "trivial"
            };
            writeln!(
                out,
                "{}\t{},{},{},{},{}\t{}",
                r.source, r.h, r.a, r.b, r.c, r.d, kind
            )?;
        }
    }
    Ok(if records.is_empty() {
        exit::NO_SOLUTION
    } else {
        exit::SUCCESS
    })
}

pub struct TableArgs {
    pub from: u64,
    pub to: u64,
    pub bound: u32,
    pub format: TableFormat,
    pub out: Option<PathBuf>,
    pub threads: usize,
}

/// One row per `h`; coverage summary goes to `summary`.
pub fn table(args: &TableArgs, stdout: &mut dyn Write, summary: &mut dyn Write) -> CliResult {
    if args.from == 0 {
        return Err(CliError::Usage("--from must be at least 1".into()));
    }
    if args.from > args.to {
        return Err(CliError::Usage(format!(
            "empty range: --from {} is greater than --to {}",
            args.from, args.to
        )));
    }
    if args.bound == 0 {
        return Err(CliError::Usage("--bound must be at least 1".into()));
    }
    let reports = engine(args.threads)?.table(args.from, args.to, args.bound)?;
    let records: Vec<OutputRecord> = reports
        .iter()
        .map(|r| match r.solutions.first() {
            Some(s) => OutputRecord::from_solution(s),
            None => OutputRecord::empty(r.h),
        })
        .collect();

    match &args.out {
        Some(path) => {
            let file = File::create(path).map_err(|source| CliError::Io {
                context: format!("creating {}", path.display()),
                source,
            })?;
            let mut w = BufWriter::new(file);
            write_records(&records, args.format, &mut w)?;
            w.flush().map_err(|source| CliError::Io {
                context: format!("writing {}", path.display()),
                source,
            })?;
        }
        None => write_records(&records, args.format, stdout)?,
    }

    let covered = records.iter().filter(|r| r.has_solution()).count();
    writeln!(
        summary,
        "coverage: {covered}/{} values of h in [{}, {}] have a solution (bound {})",
        records.len(),
        args.from,
        args.to,
        args.bound
    )?;
    Ok(exit::SUCCESS)
}

fn write_records(
    records: &[OutputRecord],
    format: TableFormat,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match format {
        TableFormat::Csv => write_csv(records, out)?,
        TableFormat::Json => write_json(records, out)?,
    }
    Ok(())
}

/// Expanded polynomials of every builtin family as JSON.
pub fn catalog(out: &mut dyn Write) -> CliResult {
    let records: Vec<CatalogRecord> = builtin_families().iter().map(CatalogRecord::from).collect();
    serde_json::to_writer_pretty(&mut *out, &records).map_err(RecordError::from)?;
    writeln!(out)?;
    Ok(exit::SUCCESS)
}
