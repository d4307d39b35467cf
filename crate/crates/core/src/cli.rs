//! Command-line front end. Parsing lives here so the commands can be driven
//! from tests with in-memory writers; `main.rs` only wires up stdio.

use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::closed_form::{self, Statistic};
use crate::enumeration::{aggregate, aggregate_split, iterate_rgs, PartitionClass};
use crate::error::Error;
use crate::routes::{compute_total, Method};
use crate::series::{default_order, peak_derivative_series, peak_series, PeakKind};
use crate::stirling::StirlingTable;
use crate::verify::{verify, VerifyOptions};
use crate::words::{stats, write_letters};

#[derive(Debug, Parser)]
#[command(
    name = "setpeaks",
    version,
    about = "Symmetric and non-symmetric peaks in set partitions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List every restricted growth string of length N with exactly K blocks.
    Enumerate {
        n: usize,
        k: usize,
        /// Append peaks, sym, nonsym, rises, descents and records as TSV columns.
        #[arg(long)]
        stats: bool,
    },
    /// Print the exact totals and q-distributions of one class as JSON.
    Aggregate {
        n: usize,
        k: usize,
        #[arg(long)]
        prefix_split: Option<usize>,
    },
    /// Print one total computed by the chosen method.
    Total {
        #[arg(long, value_enum)]
        stat: StatArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "closed")]
        method: MethodArg,
        #[arg(long)]
        prefix_split: Option<usize>,
    },
    /// Emit the triangle of closed-form totals for 1 <= k <= n <= NMAX.
    Table {
        #[arg(long, value_enum)]
        stat: StatArg,
        #[arg(long)]
        nmax: usize,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
    },
    /// Emit the coefficients of a truncated generating function.
    Series {
        #[arg(long, value_enum)]
        gf: GfArg,
        #[arg(long)]
        k: usize,
        /// Truncation order; defaults to 2K+10.
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum, default_value = "tsv")]
        format: Format,
        /// Emit the q-derivative at q=1 as a univariate series instead.
        #[arg(long)]
        derivative: bool,
    },
    /// Emit the Stirling triangle S(n,k), 0 <= k <= n <= NMAX, as TSV.
    Stirling {
        #[arg(long)]
        nmax: usize,
    },
    /// Cross-check enumeration, closed forms and series for every class up to NMAX.
    Verify {
        /// Defaults to 10, or 12 with --totals-only.
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long)]
        totals_only: bool,
        #[arg(long)]
        prefix_split: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StatArg {
    Sym,
    Nonsym,
    Peaks,
}

impl From<StatArg> for Statistic {
    fn from(s: StatArg) -> Self {
        match s {
            StatArg::Sym => Statistic::Symmetric,
            StatArg::Nonsym => Statistic::NonSymmetric,
            StatArg::Peaks => Statistic::Peaks,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Closed,
    Brute,
    Series,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Closed => Method::Closed,
            MethodArg::Brute => Method::Brute,
            MethodArg::Series => Method::Series,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GfArg {
    Sp,
    Nsp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

/// How a successful run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success,
    /// `verify` found disagreeing routes.
    Mismatch,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

pub fn run<W: Write, E: Write>(cli: Cli, out: &mut W, diag: &mut E) -> Result<Outcome, CliError> {
    match cli.command {
        Command::Enumerate {
            n,
            k,
            stats: with_stats,
        } => {
            enumerate(n, k, with_stats, out)?;
        }
        Command::Aggregate { n, k, prefix_split } => {
            let class = PartitionClass::new(n, k)?;
            let totals = match prefix_split {
                Some(d) => aggregate_split(class, d),
                None => aggregate(class),
            };
            writeln!(out, "{}", totals.to_json())?;
        }
        Command::Total {
            stat,
            n,
            k,
            method,
            prefix_split,
        } => {
            let value = compute_total(stat.into(), n, k, method.into(), prefix_split)?;
            writeln!(out, "{value}")?;
        }
        Command::Table { stat, nmax, format } => table(stat.into(), nmax, format, out)?,
        Command::Series {
            gf,
            k,
            order,
            format,
            derivative,
        } => series(
            gf,
            k,
            order.unwrap_or_else(|| default_order(k)),
            format,
            derivative,
            out,
        )?,
        Command::Stirling { nmax } => {
            let t = StirlingTable::new(nmax);
            for n in 0..=nmax {
                write_row(out, t.row(n).iter())?;
            }
        }
        Command::Verify {
            nmax,
            totals_only,
            prefix_split,
        } => {
            let n_max = nmax.unwrap_or(if totals_only { 12 } else { 10 });
            if n_max == 0 {
                return Err(CliError::Usage("verify needs --nmax >= 1".into()));
            }
            let report = verify(VerifyOptions {
                n_max,
                totals_only,
                prefix_split,
            });
            for m in report.mismatches() {
                writeln!(
                    out,
                    "MISMATCH\tn={}\tk={}\t{}\t{}={}\t{}={}",
                    m.n, m.k, m.statistic, m.method_a, m.value_a, m.method_b, m.value_b
                )?;
            }
            writeln!(
                out,
                "verify nmax={} mode={} cells={} comparisons={} mismatches={}",
                report.n_max,
                if report.totals_only {
                    "totals"
                } else {
                    "totals+distributions"
                },
                report.cells.len(),
                report.comparisons(),
                report.mismatch_count()
            )?;
            writeln!(diag, "elapsed {:.3}s", report.elapsed.as_secs_f64())?;
            if !report.passed() {
                return Ok(Outcome::Mismatch);
            }
        }
    }
    Ok(Outcome::Success)
}

fn write_row<W: Write, T: ToString>(
    out: &mut W,
    values: impl Iterator<Item = T>,
) -> io::Result<()> {
    let line: Vec<String> = values.map(|v| v.to_string()).collect();
    writeln!(out, "{}", line.join("\t"))
}

fn enumerate<W: Write>(n: usize, k: usize, with_stats: bool, out: &mut W) -> Result<(), CliError> {
    let class = PartitionClass::new(n, k)?;
    let mut iter = iterate_rgs(class);
    let mut line = String::with_capacity(4 * n + 32);
    while let Some(word) = iter.advance() {
        line.clear();
        write_letters(&mut line, word, k as u32).expect("writing to a String");
        if with_stats {
            use std::fmt::Write as _;
            let s = stats(word);
            write!(
                line,
                "\t{}\t{}\t{}\t{}\t{}\t{}",
                s.peaks, s.symmetric_peaks, s.non_symmetric_peaks, s.rises, s.descents, s.records
            )
            .expect("writing to a String");
        }
        line.push('\n');
        out.write_all(line.as_bytes())?;
    }
    Ok(())
}

fn table<W: Write>(
    stat: Statistic,
    nmax: usize,
    format: Format,
    out: &mut W,
) -> Result<(), CliError> {
    if nmax == 0 {
        return Err(CliError::Usage("table needs --nmax >= 1".into()));
    }
    let t = StirlingTable::new(nmax);
    let rows = (1..=nmax)
        .map(|n| {
            (1..=n)
                .map(|k| closed_form::total(&t, stat, n, k))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    match format {
        Format::Tsv => {
            for row in &rows {
                write_row(out, row.iter())?;
            }
        }
        Format::Json => {
            let rows: Vec<Vec<String>> = rows
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect();
            let doc = json!({ "stat": stat.name(), "nmax": nmax, "rows": rows });
            writeln!(out, "{doc}")?;
        }
    }
    Ok(())
}

fn series<W: Write>(
    gf: GfArg,
    k: usize,
    order: usize,
    format: Format,
    derivative: bool,
    out: &mut W,
) -> Result<(), CliError> {
    let kind = match gf {
        GfArg::Sp => PeakKind::Symmetric,
        GfArg::Nsp => PeakKind::NonSymmetric,
    };
    let name = match gf {
        GfArg::Sp => "sp",
        GfArg::Nsp => "nsp",
    };
    let rows: Vec<Vec<String>> = if derivative {
        peak_derivative_series(kind, k, order)
            .coeffs()
            .iter()
            .map(|c| vec![c.to_string()])
            .collect()
    } else {
        peak_series(kind, k, order)
            .coeffs()
            .iter()
            .map(|p| {
                if p.is_zero() {
                    vec!["0".to_string()]
                } else {
                    p.coeffs().iter().map(ToString::to_string).collect()
                }
            })
            .collect()
    };
    match format {
        Format::Tsv => {
            for (n, row) in rows.iter().enumerate() {
                writeln!(out, "{n}\t{}", row.join(" "))?;
            }
        }
        Format::Json => {
            let doc = json!({
                "gf": name,
                "k": k,
                "order": order,
                "derivative": derivative,
                "coefficients": rows,
            });
            writeln!(out, "{doc}")?;
        }
    }
    Ok(())
}
