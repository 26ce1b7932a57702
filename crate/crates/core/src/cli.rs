//! The `qcomb` command line: `table`, `verify` and `oracle-diff`.
//!
//! Exit codes: 0 on success, 1 when a verification finds a counterexample
//! or an engine disagrees with its oracle, 2 on usage or capacity errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::identities::{self, Ctx, Grid, IdentityReport, Span, Status};
use crate::numbers::{hsu_shiue, lah_q, stirling1_q, stirling2_q, FamilyTable, TableFamily, Value};
use crate::structures::{Family, DEFAULT_CELL_CAP};

/// Environment variable overriding the enumeration cell cap.
pub const CAP_ENV: &str = "QCOMB_MAX_ENUM";

#[derive(Parser, Debug)]
#[command(name = "qcomb", version, about = "Exact q-Stirling, q-Lah and Hsu-Shiue numbers and their identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a table of numbers from one family.
    Table(TableArgs),
    /// Check registered identities over parameter grids.
    Verify(VerifyArgs),
    /// Compare an engine with brute-force enumeration; prints mismatches only.
    OracleDiff(DiffArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Largest enumeration cell the oracles will walk. Overrides QCOMB_MAX_ENUM.
    #[arg(long)]
    cell_cap: Option<u64>,
}

#[derive(Args, Debug)]
struct TableArgs {
    /// stirling2_q, bell_q, lah_q, lah_total_q, stirling1_q, stirling1_total_q, hsu_shiue or gen_bell.
    #[arg(long)]
    family: String,
    /// Range of n, `a..b` inclusive or a single value.
    #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
    n: Span,
    /// Range of k (default: 0..n).
    #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
    k: Option<Span>,
    /// Range of r (default: 0).
    #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
    r: Option<Span>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Identity name, e.g. I-SPIVEY.
    #[arg(long, required_unless_present = "all", conflicts_with = "all")]
    identity: Option<String>,
    /// Check every registered identity.
    #[arg(long)]
    all: bool,
    /// Ignore range flags and use each identity's default grid.
    #[arg(long)]
    default_grids: bool,
    /// Range of m (default: the identity's own grid).
    #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
    m: Option<Span>,
    /// Range of n.
    #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
    n: Option<Span>,
    /// Range of k.
    #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
    k: Option<Span>,
    /// Range of r.
    #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
    r: Option<Span>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct DiffArgs {
    /// stirling2_q, stirling1_q, lah_q or ext_lah.
    #[arg(long)]
    family: String,
    /// Range of n.
    #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
    n: Span,
    /// Range of k (default: 0..n).
    #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
    k: Option<Span>,
    /// Range of r (default: 0; ext_lah takes none).
    #[arg(long, value_parser = parse_span, allow_hyphen_values = true)]
    r: Option<Span>,
    #[command(flatten)]
    common: Common,
}

/// Parses `a..b` (inclusive) or a single non-negative integer.
pub fn parse_span(s: &str) -> Result<Span> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("`{t}` is not a non-negative integer")))
    };
    let span = match s.split_once("..") {
        Some((a, b)) => Span::new(num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            Span::new(v, v)
        }
    };
    if span.lo > span.hi {
        return Err(Error::Parse(format!("empty range `{s}`")));
    }
    Ok(span)
}

/// One engine/oracle disagreement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiffRow {
    pub family: String,
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub engine: Value,
    pub oracle: Value,
}

enum Failure {
    Usage(String),
    Counterexample,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Table(a) => with_pool(&a.common, || table(&a)),
        Command::Verify(a) => with_pool(&a.common, || verify(&a)),
        Command::OracleDiff(a) => with_pool(&a.common, || oracle_diff(&a)),
    };
    let result = result.and_then(|(text, failed)| {
        out.write_all(text.as_bytes())
            .map_err(|e| Failure::Usage(format!("write failed: {e}")))?;
        if failed {
            Err(Failure::Counterexample)
        } else {
            Ok(())
        }
    });
    match result {
        Ok(()) => 0,
        Err(Failure::Counterexample) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

/// Output text and whether it reports a failure.
type Outcome = std::result::Result<(String, bool), Failure>;

fn with_pool<F>(common: &Common, f: F) -> Outcome
where
    F: FnOnce() -> Outcome + Send,
{
    match common.jobs {
        None => f(),
        Some(0) => Err(Failure::Usage("--jobs must be positive".into())),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| Failure::Usage(e.to_string()))?
            .install(f),
    }
}

fn cell_cap(common: &Common) -> Result<u64> {
    if let Some(c) = common.cell_cap {
        return Ok(c);
    }
    match std::env::var(CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{CAP_ENV}=`{v}` is not a non-negative integer"))),
        Err(_) => Ok(DEFAULT_CELL_CAP),
    }
}

fn table(a: &TableArgs) -> Outcome {
    let family: TableFamily = a.family.parse()?;
    let r = a.r.unwrap_or(Span::new(0, 0));
    let t = FamilyTable::build(family, a.n.iter(), a.k.map(Span::iter), r.iter());
    let text = match a.common.format {
        Format::Json => t.to_json() + "\n",
        Format::Csv => t.to_csv(),
        Format::Text => t.to_text(),
    };
    Ok((text, false))
}

fn verify(a: &VerifyArgs) -> Outcome {
    let ctx = Ctx {
        cell_cap: cell_cap(&a.common)?,
    };
    let overrides = if a.default_grids {
        Grid::default()
    } else {
        Grid {
            m: a.m,
            n: a.n,
            k: a.k,
            r: a.r,
            max_total: None,
        }
    };
    let selected: Vec<_> = match &a.identity {
        Some(name) => vec![identities::find(name)?],
        None => identities::registry().iter().collect(),
    };
    let reports = selected
        .into_iter()
        .map(|id| identities::check(id, &overrides, &ctx))
        .collect::<Result<Vec<IdentityReport>>>()?;
    let text = match a.common.format {
        Format::Json => serde_json::to_string_pretty(&reports).expect("reports serialize") + "\n",
        Format::Csv => reports_csv(&reports),
        Format::Text => {
            let mut s: String = reports.iter().map(|r| r.line() + "\n").collect();
            let failed = reports.iter().filter(|r| r.status == Status::Fail).count();
            s.push_str(&format!("{} checked, {} failed\n", reports.len(), failed));
            s
        }
    };
    let failed = reports.iter().any(|r| r.status == Status::Fail);
    Ok((text, failed))
}

fn reports_csv(reports: &[IdentityReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["identity", "status", "cells_checked", "grid", "counterexample"])
        .expect("in-memory write");
    for r in reports {
        let ce = r
            .counterexample
            .as_ref()
            .map(|c| serde_json::to_string(c).expect("serialize"))
            .unwrap_or_default();
        w.write_record([
            r.identity.clone(),
            r.status.to_string(),
            r.cells_checked.to_string(),
            r.grid.to_string(),
            ce,
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn diff_family(name: &str) -> Result<Family> {
    Ok(match name {
        "stirling2_q" | "partitions" => Family::Partitions,
        "stirling1_q" | "perms" => Family::Perms,
        "lah_q" | "lah" => Family::Lah,
        "ext_lah" | "hsu_shiue" => Family::ExtLah,
        _ => return Err(Error::UnknownFamily(name.to_string())),
    })
}

fn engine(family: Family, n: usize, k: usize, r: usize) -> Value {
    match family {
        Family::Partitions => stirling2_q(n, k, r).into(),
        Family::Perms => stirling1_q(n, k, r).into(),
        Family::Lah => lah_q(n, k, r).into(),
        Family::ExtLah => hsu_shiue(n, k).into(),
    }
}

/// Engine/oracle mismatches over a parameter box, in `(r, n, k)` order.
pub fn diff_cells(
    family: Family,
    n: Span,
    k: Option<Span>,
    r: Span,
    cap: u64,
) -> Result<Vec<DiffRow>> {
    use rayon::prelude::*;
    if family == Family::ExtLah && r != Span::new(0, 0) {
        return Err(Error::InvalidArgument("ext_lah takes no r".into()));
    }
    let mut cells = Vec::new();
    for rr in r.iter() {
        for nn in n.iter() {
            let ks = k.unwrap_or(Span::new(0, nn));
            for kk in ks.lo..=ks.hi.min(nn) {
                cells.push((nn, kk, rr));
            }
        }
    }
    let rows = cells
        .par_iter()
        .map(|&(nn, kk, rr)| {
            let oracle = identities::oracle(family, nn, kk, rr, cap)?;
            let engine = engine(family, nn, kk, rr);
            Ok((engine != oracle).then(|| DiffRow {
                family: family.name().to_string(),
                n: nn,
                k: kk,
                r: rr,
                engine,
                oracle,
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(rows.into_iter().flatten().collect())
}

fn oracle_diff(a: &DiffArgs) -> Outcome {
    let family = diff_family(&a.family)?;
    let cap = cell_cap(&a.common)?;
    let r = a.r.unwrap_or(Span::new(0, 0));
    let rows = diff_cells(family, a.n, a.k, r, cap)?;
    let text = match a.common.format {
        Format::Json => serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["family", "n", "k", "r", "engine", "oracle"])
                .expect("in-memory write");
            for d in &rows {
                w.write_record([
                    d.family.clone(),
                    d.n.to_string(),
                    d.k.to_string(),
                    d.r.to_string(),
                    d.engine.flat(),
                    d.oracle.flat(),
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
        }
        Format::Text => rows
            .iter()
            .map(|d| format!("{}({},{},{}): engine {} oracle {}\n", d.family, d.n, d.k, d.r, d.engine, d.oracle))
            .collect(),
    };
    Ok((text, !rows.is_empty()))
}
