//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a `verify-*` run finds a counterexample,
//! 2 on usage errors and on any other failure.

mod config;
mod stats;

pub use config::{FileConfig, OutputFormat, RunConfig, CONFIG_ENV};
pub use stats::{stats_anisotropy, AngularHistogram};

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;

use crate::cluster_graph::{build_components, order_clusters, ClusterReport};
use crate::error::{Error, Result};
use crate::exact_core::{residual, Wavenumber};
use crate::partner_search::jsonl::{read_report, write_report};
use crate::partner_search::{
    enumerate_lambda_with, find_partners, naive_partner_oracle, EnumerateOptions, EnumerationReport,
};
use crate::verification::{
    check_proof_identity, generate_family, verify_axis_theorem, verify_diophantine_lemma, VerificationReport,
    DEFAULT_SEED,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "rossby-resonance",
    version,
    about = "Exact resonant Rossby-wave triads on the integer lattice"
)]
struct Cli {
    /// Worker threads (default 1; output does not depend on it).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether k is a resonant partner of n.
    #[command(allow_negative_numbers = true)]
    Check { n1: i64, n2: i64, k1: i64, k2: i64 },
    /// List every resonant partner of n.
    #[command(allow_negative_numbers = true)]
    Partners {
        n1: i64,
        n2: i64,
        /// Use the brute-force disk scan instead of the quartic solver.
        #[arg(long)]
        naive: bool,
    },
    /// Enumerate all triads through |n| <= N as JSON Lines.
    Enumerate {
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        max_norm: Option<i64>,
        #[arg(long)]
        cache: Option<PathBuf>,
    },
    /// Group triads into clusters of connected sign-classes (JSON).
    Clusters {
        #[command(flatten)]
        source: ReportSource,
    },
    /// Search every on-axis wavenumber n1 <= MAX for a resonant partner.
    VerifyAxis {
        #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(i64).range(1..))]
        max: i64,
    },
    /// Look for nontrivial squares X^4 + X^2 Y^2 + Y^4 with X, Y <= MAX.
    VerifyLemma {
        #[arg(long, default_value_t = 500, value_parser = clap::value_parser!(i64).range(1..))]
        max: i64,
    },
    /// Spot-check the on-axis quartic identity at random points.
    VerifyIdentity {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        samples: Option<u64>,
        #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(i64).range(2..=1_000_000))]
        max: i64,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Generate the (m^4, m l^3) triad family.
    Family {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(i64).range(1..=1000))]
        m_max: i64,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(i64).range(1..=1000))]
        l_max: i64,
    },
    /// Angular histogram of resonance-set members (CSV).
    Stats {
        #[command(flatten)]
        source: ReportSource,
        #[arg(long)]
        bins: Option<usize>,
    },
}

#[derive(Debug, clap::Args)]
struct ReportSource {
    /// Read a JSONL enumeration instead of enumerating.
    #[arg(long = "in", conflicts_with_all = ["max_norm", "cache"])]
    input: Option<PathBuf>,
    #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
    max_norm: Option<i64>,
    #[arg(long)]
    cache: Option<PathBuf>,
}

/// Entry point for the binary: parses `argv` (program name first) and uses
/// the process streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

/// [`run`] with explicit output streams.
pub fn run_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = if e.use_stderr() {
                let _ = stderr.write_all(text.as_bytes());
                EXIT_USAGE
            } else {
                let _ = stdout.write_all(text.as_bytes());
                EXIT_OK
            };
            return code;
        }
    };
    match dispatch(cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    let file = FileConfig::from_env()?;
    let cfg = RunConfig::resolve(cli.jobs, cli.format, cli.out.clone(), &file)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;

    // Everything goes to one writer; it is either the --out file or stdout.
    let mut out_file = cfg.out.as_ref().map(File::create).transpose()?;
    let out: &mut dyn Write = match out_file.as_mut() {
        Some(f) => f,
        None => stdout,
    };

    let code = match cli.command {
        Command::Check { n1, n2, k1, k2 } => {
            let n: Wavenumber<BigInt> = Wavenumber::new(BigInt::from(n1), BigInt::from(n2));
            let k: Wavenumber<BigInt> = Wavenumber::new(BigInt::from(k1), BigInt::from(k2));
            let r = residual(&n, &k)?;
            let resonant = r.is_zero();
            match cfg.format {
                OutputFormat::Text => {
                    let verdict = if resonant { "resonant" } else { "not resonant" };
                    writeln!(out, "{verdict}, residual {r}")?;
                }
                OutputFormat::Json => {
                    #[derive(Serialize)]
                    struct Check {
                        n: [i64; 2],
                        k: [i64; 2],
                        resonant: bool,
                        residual: String,
                    }
                    let c = Check {
                        n: [n1, n2],
                        k: [k1, k2],
                        resonant,
                        residual: r.to_string(),
                    };
                    write_json(out, &c)?;
                }
            }
            EXIT_OK
        }
        Command::Partners { n1, n2, naive } => {
            let n: Wavenumber<i64> = Wavenumber::new(n1, n2);
            let ps = if naive {
                naive_partner_oracle(&n)?
            } else {
                find_partners(&n)?
            };
            match cfg.format {
                OutputFormat::Text => {
                    for p in &ps {
                        writeln!(out, "{p}")?;
                    }
                }
                OutputFormat::Json => write_json(out, &ps)?,
            }
            writeln!(stderr, "{} partners of {n}", ps.len())?;
            EXIT_OK
        }
        Command::Enumerate { max_norm, cache } => {
            let max_norm = max_norm.or(file.max_norm).ok_or_else(|| missing("--max-norm"))?;
            let report = enumerate(max_norm, cache.or(file.cache.clone()), cfg.jobs)?;
            write_report(&report, &mut *out)?;
            let s = &report.stats;
            writeln!(
                stderr,
                "max_norm {}: {} quadrant points ({} cached, {} searched), {} triads, {} members; search {} ms, merge {} ms",
                max_norm,
                s.quadrant_points,
                s.cached_points,
                s.searched_points,
                report.triads.len(),
                report.lambda_members.len(),
                s.search_time.as_millis(),
                s.merge_time.as_millis(),
            )?;
            EXIT_OK
        }
        Command::Clusters { source } => {
            let report = load_report(source, &file, cfg.jobs)?;
            let clusters = order_clusters(build_components(&report.triad_list())?);
            write_json(out, &ClusterReport::new(report.max_norm, &clusters))?;
            writeln!(
                stderr,
                "{} clusters from {} triads",
                clusters.len(),
                report.triads.len()
            )?;
            EXIT_OK
        }
        Command::VerifyAxis { max } => emit_verification(out, cfg.format, pool.install(|| verify_axis_theorem(max))?)?,
        Command::VerifyLemma { max } => {
            emit_verification(out, cfg.format, pool.install(|| verify_diophantine_lemma(max))?)?
        }
        Command::VerifyIdentity { samples, max, seed } => {
            let samples = samples.or(file.samples).unwrap_or(1000);
            let seed = seed.or(file.seed).unwrap_or(DEFAULT_SEED);
            emit_verification(out, cfg.format, check_proof_identity(samples, max, seed)?)?
        }
        Command::Family { m_max, l_max } => {
            let triads = generate_family(m_max, l_max)?;
            match cfg.format {
                OutputFormat::Text => {
                    for t in &triads {
                        writeln!(out, "{t}")?;
                    }
                }
                OutputFormat::Json => write_json(out, &triads)?,
            }
            writeln!(stderr, "{} triads, all resonant", triads.len())?;
            EXIT_OK
        }
        Command::Stats { source, bins } => {
            let bins = bins.or(file.bins).unwrap_or(16);
            let report = load_report(source, &file, cfg.jobs)?;
            let h = stats_anisotropy(&report, bins)?;
            h.write_csv(&mut *out)?;
            writeln!(stderr, "members {}, axis_count {}", h.total(), h.axis_count)?;
            EXIT_OK
        }
    };
    out.flush()?;
    Ok(code)
}

fn missing(flag: &str) -> Error {
    Error::InvalidArgument(format!("{flag} is required (flag or config file)"))
}

fn enumerate(max_norm: i64, cache: Option<PathBuf>, jobs: usize) -> Result<EnumerationReport> {
    enumerate_lambda_with(
        max_norm,
        &EnumerateOptions {
            jobs,
            cache,
            ..Default::default()
        },
    )
}

fn load_report(source: ReportSource, file: &FileConfig, jobs: usize) -> Result<EnumerationReport> {
    match source.input {
        Some(path) => read_report(BufReader::new(File::open(path)?)),
        None => {
            let max_norm = source
                .max_norm
                .or(file.max_norm)
                .ok_or_else(|| missing("--in or --max-norm"))?;
            enumerate(max_norm, source.cache.or(file.cache.clone()), jobs)
        }
    }
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn emit_verification(out: &mut dyn Write, format: OutputFormat, report: VerificationReport) -> Result<i32> {
    match format {
        OutputFormat::Text => {
            writeln!(out, "{}", report.summary())?;
            if let Some(seed) = report.seed {
                writeln!(out, "seed {seed}")?;
            }
            for c in &report.counterexamples {
                writeln!(out, "counterexample {c:?}")?;
            }
        }
        OutputFormat::Json => write_json(out, &report)?,
    }
    Ok(if report.is_consistent() {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    })
}
