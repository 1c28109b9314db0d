//! Command-line front end.
//!
//! Exit codes: `0` success, `1` a mathematical check failed, `2` bad usage
//! or input.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::census::{enumerate_by_genus_parallel, CensusSummary, CensusRow, MAX_GENUS};
use crate::cyclotomic::{cyclotomic_test, CyclotomicReport};
use crate::error::Error;
use crate::family::{FamilyParams, FamilyVerdict};
use crate::rootloc::{complex_roots, modulus_band_check, BandReport, CertificateReport, QKernel, RootCount};
use crate::semigroup::{AnalysisRecord, NumericalSemigroup};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "cyclosemi", version, about = "Symmetric and cyclotomic numerical semigroups")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analyze the semigroup generated by the given integers.
    Analyze {
        #[arg(required = true)]
        generators: Vec<u64>,
    },
    /// Build S(n, t) and compare its closed-form polynomial with the derived one.
    Family {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        t: u64,
    },
    /// Unit-circle analysis and complex roots of the S(n, t) polynomial.
    Roots {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        t: u64,
        /// Check the root-modulus band (t = 0, n >= 12).
        #[arg(long)]
        band: bool,
        /// Count unit-circle roots from sign changes of Q.
        #[arg(long)]
        count: bool,
        /// Run the interval sign certificate.
        #[arg(long)]
        certificate: bool,
        /// Write (theta, Q(theta)) samples to this CSV file.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, default_value_t = 4096)]
        samples: usize,
    },
    /// Classify every numerical semigroup up to a genus.
    Census {
        #[arg(long)]
        max_genus: u32,
        #[arg(long, env = "CYCLOSEMI_WORKERS")]
        workers: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Also write the JSON summary to this file.
        #[arg(long)]
        summary: Option<PathBuf>,
    },
    /// Check S(n, t) for every n in a range: dimension n - 3t - 1,
    /// symmetric, not cyclotomic.
    Scan {
        #[arg(long)]
        t: u64,
        #[arg(long)]
        n_min: u64,
        #[arg(long)]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, env = "CYCLOSEMI_WORKERS")]
        workers: Option<usize>,
    },
}

/// `analyze` output: the analysis record followed by the cyclotomic report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeOutput {
    #[serde(flatten)]
    pub analysis: AnalysisRecord,
    pub cyclotomic: CyclotomicReport,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootEntry {
    pub re: f64,
    pub im: f64,
    pub modulus: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootsOutput {
    pub n: u64,
    pub t: u64,
    pub roots: Vec<RootEntry>,
    pub reconstruction_error: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<RootCount>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<CertificateReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub band: Option<BandReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusOutput {
    pub rows: Vec<CensusRow>,
    pub summary: CensusSummary,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanOutput {
    pub all_agree: bool,
    pub rows: Vec<FamilyVerdict>,
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        usage(e.to_string())
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::Analyze { generators } => cmd_analyze(&generators, out),
        Command::Family { n, t } => cmd_family(n, t, out),
        Command::Roots {
            n,
            t,
            band,
            count,
            certificate,
            csv,
            samples,
        } => cmd_roots(n, t, band, count, certificate, csv, samples, out),
        Command::Census {
            max_genus,
            workers,
            format,
            summary,
        } => cmd_census(max_genus, workers, format, summary, out),
        Command::Scan {
            t,
            n_min,
            n_max,
            format,
            workers,
        } => cmd_scan(t, n_min, n_max, format, workers, out),
    }
}

fn io_failure(e: impl std::fmt::Display) -> Failure {
    usage(format!("i/o: {e}"))
}

fn emit_json<T: Serialize>(value: &T, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(io_failure)?;
    writeln!(out).map_err(io_failure)
}

fn with_workers<R: Send>(workers: Option<usize>, f: impl FnOnce() -> R + Send) -> std::result::Result<R, Failure> {
    match workers {
        None => Ok(f()),
        Some(0) => Err(usage("worker count must be positive")),
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| usage(format!("thread pool: {e}"))),
    }
}

pub fn analyze(generators: &[u64]) -> crate::Result<AnalyzeOutput> {
    let s = NumericalSemigroup::from_generators(generators)?;
    let analysis = s.analysis();
    let cyclotomic = cyclotomic_test(&analysis.polynomial)?;
    Ok(AnalyzeOutput {
        analysis,
        cyclotomic,
    })
}

fn cmd_analyze(generators: &[u64], out: &mut dyn Write) -> CmdResult {
    emit_json(&analyze(generators)?, out)?;
    Ok(EXIT_OK)
}

fn cmd_family(n: u64, t: u64, out: &mut dyn Write) -> CmdResult {
    let report = FamilyParams::new(n, t)?.report();
    emit_json(&report, out)?;
    Ok(if report.closed_form_agrees && report.gap_structure_holds {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_roots(
    n: u64,
    t: u64,
    band: bool,
    count: bool,
    certificate: bool,
    csv_path: Option<PathBuf>,
    samples: usize,
    out: &mut dyn Write,
) -> CmdResult {
    let params = FamilyParams::new(n, t)?;
    let kernel = QKernel::from(params);
    if band && (t != 0 || n < 12) {
        return Err(usage("--band needs t = 0 and n >= 12"));
    }
    let report = complex_roots(&params.closed_form_polynomial(), 1e-14)?;
    let roots = report
        .roots
        .iter()
        .map(|z| RootEntry {
            re: z.re,
            im: z.im,
            modulus: z.norm(),
        })
        .collect();
    let count = count.then(|| kernel.count_unit_circle_roots());
    let certificate = if certificate {
        Some(kernel.certificate_check()?)
    } else {
        None
    };
    let band = if band { Some(modulus_band_check(n)?) } else { None };
    if let Some(path) = csv_path {
        let mut w = csv::Writer::from_path(&path).map_err(io_failure)?;
        w.write_record(["theta", "q"]).map_err(io_failure)?;
        for (th, q) in kernel.sample(samples) {
            w.write_record([th.to_string(), q.to_string()]).map_err(io_failure)?;
        }
        w.flush().map_err(io_failure)?;
    }
    let ok = certificate.as_ref().map_or(true, CertificateReport::passes)
        && band.as_ref().map_or(true, |b| b.pass);
    emit_json(
        &RootsOutput {
            n,
            t,
            roots,
            reconstruction_error: report.reconstruction_error,
            count,
            certificate,
            band,
        },
        out,
    )?;
    Ok(if ok { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn cmd_census(
    max_genus: u32,
    workers: Option<usize>,
    format: Format,
    summary_path: Option<PathBuf>,
    out: &mut dyn Write,
) -> CmdResult {
    if max_genus > MAX_GENUS {
        return Err(usage(format!("--max-genus is limited to {MAX_GENUS}")));
    }
    let table = with_workers(workers, || enumerate_by_genus_parallel(max_genus))??;
    let summary = table.summary(max_genus);
    let rows: Vec<CensusRow> = table.rows().copied().collect();
    if let Some(path) = summary_path {
        let json = serde_json::to_string_pretty(&summary).map_err(io_failure)?;
        std::fs::write(&path, json + "\n").map_err(io_failure)?;
    }
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["genus", "e", "total", "symmetric", "cyclotomic", "sym_not_cyc"])
                .map_err(io_failure)?;
            for r in &rows {
                w.write_record([
                    r.genus.to_string(),
                    r.embedding_dimension.to_string(),
                    r.total.to_string(),
                    r.symmetric.to_string(),
                    r.cyclotomic.to_string(),
                    r.symmetric_not_cyclotomic.to_string(),
                ])
                .map_err(io_failure)?;
            }
            w.flush().map_err(io_failure)?;
        }
        Format::Json => emit_json(&CensusOutput { rows, summary: summary.clone() }, out)?,
    }
    let ok = summary.low_dimension_equivalence
        && summary.symmetry_disagreements == 0
        && summary.spot_check_failures == 0;
    Ok(if ok { EXIT_OK } else { EXIT_CHECK_FAILED })
}

/// One verdict per `n` in `n_min..=n_max`, in order.
pub fn scan(t: u64, n_min: u64, n_max: u64) -> crate::Result<Vec<FamilyVerdict>> {
    let params = (n_min..=n_max)
        .map(|n| FamilyParams::new(n, t))
        .collect::<crate::Result<Vec<_>>>()?;
    Ok(params.par_iter().map(FamilyParams::verdict).collect())
}

fn cmd_scan(
    t: u64,
    n_min: u64,
    n_max: u64,
    format: Format,
    workers: Option<usize>,
    out: &mut dyn Write,
) -> CmdResult {
    if n_min > n_max {
        return Err(usage("--n-min must not exceed --n-max"));
    }
    let rows = with_workers(workers, || scan(t, n_min, n_max))??;
    let all_agree = rows.iter().all(|r| r.agree);
    match format {
        Format::Json => emit_json(&ScanOutput { all_agree, rows }, out)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["n", "t", "embedding_dimension", "expected_dimension", "symmetric", "cyclotomic", "agree"])
                .map_err(io_failure)?;
            for r in &rows {
                w.write_record([
                    r.n.to_string(),
                    r.t.to_string(),
                    r.embedding_dimension.to_string(),
                    r.expected_dimension.to_string(),
                    r.symmetric.to_string(),
                    r.cyclotomic.to_string(),
                    r.agree.to_string(),
                ])
                .map_err(io_failure)?;
            }
            w.flush().map_err(io_failure)?;
        }
    }
    Ok(if all_agree { EXIT_OK } else { EXIT_CHECK_FAILED })
}
