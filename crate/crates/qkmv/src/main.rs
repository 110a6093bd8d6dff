//! `qkmv` — run the exact verification suites and emit a deterministic
//! report.

use clap::Parser;
use qkmv::suite::{
    emit_report, parse_family, parse_series, run_suite, Mode, OutputFormat, Suite, SuiteError,
    SuiteRequest,
};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "qkmv",
    about = "Exact symbolic checker for quantum current algebras, their two-parameter deformations, and Yangians",
    disable_help_subcommand = true
)]
struct Cli {
    /// Suite to run: relations | hopf | limits | cybe | automorphism | all
    suite: String,
    /// Restrict to one relation family (e.g. uqg, drinfeldian-explicit)
    #[arg(long)]
    family: Option<String>,
    /// Restrict to one series: A | B | C | D
    #[arg(long)]
    series: Option<String>,
    /// Rank within the chosen series (defaults to the built-in grid)
    #[arg(long)]
    rank: Option<usize>,
    /// ξ handling for the relations suite: substitution | evaluation | xi-symbolic
    #[arg(long, default_value = "substitution")]
    mode: String,
    /// Report format: json | text
    #[arg(long, default_value = "json")]
    format: String,
    /// Write the report to this path instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

fn build_request(cli: &Cli) -> Result<SuiteRequest, String> {
    let suite = Suite::parse(&cli.suite).ok_or_else(|| format!("unknown suite {:?}", cli.suite))?;
    let family = match &cli.family {
        None => None,
        Some(f) => Some(parse_family(f).ok_or_else(|| format!("unknown family {f:?}"))?),
    };
    let series = match &cli.series {
        None => None,
        Some(s) => Some(parse_series(s).ok_or_else(|| format!("unknown series {s:?}"))?),
    };
    let mode = Mode::parse(&cli.mode).ok_or_else(|| format!("unknown mode {:?}", cli.mode))?;
    let format = match cli.format.as_str() {
        "json" => OutputFormat::Json,
        "text" => OutputFormat::Text,
        other => return Err(format!("unknown format {other:?}")),
    };
    Ok(SuiteRequest {
        suite,
        family,
        series,
        rank: cli.rank,
        mode,
        format,
        out: cli.out.clone(),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let req = match build_request(&cli) {
        Ok(r) => r,
        Err(msg) => {
            eprintln!("usage error: {msg}");
            return ExitCode::from(2);
        }
    };
    let started = std::time::Instant::now();
    let report = match run_suite(&req) {
        Ok(r) => r,
        Err(SuiteError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            return ExitCode::from(2);
        }
        Err(SuiteError::Io(e)) => {
            eprintln!("io error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit_report(&report, &req) {
        eprintln!("io error: {e}");
        return ExitCode::from(2);
    }
    // envelope: timing stays out of the report body so files are
    // byte-identical across runs
    eprintln!(
        "qkmv {}: {} checks, {} pass, {} fail, {} reported in {} ms",
        req.suite.label(),
        report.checks.len(),
        report.pass,
        report.fail,
        report.reported,
        started.elapsed().as_millis()
    );
    ExitCode::from(if report.fail > 0 { 1 } else { 0 })
}
