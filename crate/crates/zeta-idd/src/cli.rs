//! Typed command-line front end: a validated run configuration, the
//! dispatcher, and deterministic CSV/JSON writers.
//!
//! Output determinism is a contract: identical configurations produce
//! byte-identical files. CSV floats carry 17 significant digits so a
//! round trip through text is lossless; JSON uses shortest round-trip
//! encoding. Exit codes: 0 all checks passed, 1 a check failed its
//! tolerance, 2 configuration/validation error, 3 I/O error.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use num_complex::Complex64;
use serde::Serialize;
use serde_json::json;

use crate::analysis::{
    bochner_check, cf_scan, fourier_g, BochnerReport, CfScanReport, FourierCheckResult,
    QuadratureConfig,
};
use crate::arith::{sieve_von_mangoldt, VonMangoldtTable};
use crate::error::{Error, Result};
use crate::gfun::{g_explicit, g_zero_sum, GridRoute, T_MAX_EXPLICIT};
use crate::levy::{admissibility, build_levy_measure};
use crate::sampler::{ecf_compare, sample};
use crate::special::constants;
use crate::zeros::{tail_bound, ZeroTable};

/// Environment variable consulted when `--zeros` is not given.
pub const ZEROS_ENV_VAR: &str = "ZETA_IDD_ZEROS";

/// Eigenvalue floor for the Bochner check; covers eigensolver and
/// truncation noise and is fixed here, not tuned per run.
pub const BOCHNER_TOLERANCE: f64 = -1e-8;

/// Non-positivity tolerance for the explicit-route scan.
pub const EXPLICIT_SCAN_TOLERANCE: f64 = 1e-8;

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_IO: u8 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Eval,
    Compare,
    VerifyFourier,
    CheckCf,
    Levy,
    Sample,
    Report,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutFormat {
    Csv,
    Json,
}

impl FromStr for OutFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutFormat::Csv),
            "json" => Ok(OutFormat::Json),
            other => Err(Error::Validation(format!(
                "unknown output format '{other}' (expected csv or json)"
            ))),
        }
    }
}

/// Parse a complex point like `0+2i`, `-3+1.5i`, `2i`, `-i`, or `1.5`.
pub fn parse_complex(raw: &str) -> Result<Complex64> {
    let s: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Validation("empty complex literal".into()));
    }
    let bad = || Error::Validation(format!("cannot parse '{raw}' as a complex point"));
    if let Some(body) = s.strip_suffix(['i', 'I']) {
        // Split at the last sign that is not leading and not an exponent sign.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|(idx, c)| {
                matches!(c, '+' | '-')
                    && !matches!(body.as_bytes()[idx - 1], b'e' | b'E')
            })
            .map(|(idx, _)| idx)
            .last();
        let (re_part, im_part) = match split {
            Some(idx) => (&body[..idx], &body[idx..]),
            None => ("0", body),
        };
        let im = match im_part {
            "" | "+" => 1.0,
            "-" => -1.0,
            other => other.parse().map_err(|_| bad())?,
        };
        let re = if re_part.is_empty() {
            0.0
        } else {
            re_part.parse().map_err(|_| bad())?
        };
        Ok(Complex64::new(re, im))
    } else {
        Ok(Complex64::new(s.parse().map_err(|_| bad())?, 0.0))
    }
}

/// Fully resolved configuration for one CLI run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub zeros_path: Option<PathBuf>,
    pub t_min: f64,
    pub t_max: f64,
    pub steps: usize,
    pub z_points: Vec<Complex64>,
    pub n: usize,
    pub seed: u64,
    pub quadrature: QuadratureConfig,
    pub out_format: OutFormat,
    pub out_path: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(command: Command) -> RunConfig {
        RunConfig {
            command,
            zeros_path: None,
            t_min: 0.0,
            t_max: 10.0,
            steps: 101,
            z_points: vec![Complex64::new(0.0, 2.0)],
            n: 100_000,
            seed: 1,
            quadrature: QuadratureConfig::default(),
            out_format: OutFormat::Csv,
            out_path: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.steps < 1 {
            return Err(Error::Validation("steps must be at least 1".into()));
        }
        if !(self.t_min.is_finite() && self.t_max.is_finite()) || self.t_min > self.t_max {
            return Err(Error::Validation(format!(
                "invalid t range [{}, {}]",
                self.t_min, self.t_max
            )));
        }
        let explicit_route = matches!(
            self.command,
            Command::Eval | Command::Compare | Command::CheckCf | Command::Report
        );
        if explicit_route && self.t_max.abs().max(self.t_min.abs()) > T_MAX_EXPLICIT {
            return Err(Error::Validation(format!(
                "|t| must stay within {T_MAX_EXPLICIT} on explicit-route commands"
            )));
        }
        if matches!(self.command, Command::VerifyFourier | Command::Report) {
            self.quadrature.validate()?;
            if self.z_points.is_empty() {
                return Err(Error::Validation("at least one z point is required".into()));
            }
        }
        Ok(())
    }

    fn t_grid(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.t_min];
        }
        let width = (self.t_max - self.t_min) / (self.steps - 1) as f64;
        (0..self.steps).map(|i| self.t_min + i as f64 * width).collect()
    }

    fn needs_zeros(&self) -> bool {
        matches!(
            self.command,
            Command::Compare | Command::CheckCf | Command::Levy | Command::Sample | Command::Report
        )
    }

    fn resolve_zeros_path(&self) -> Option<PathBuf> {
        self.zeros_path
            .clone()
            .or_else(|| std::env::var_os(ZEROS_ENV_VAR).map(PathBuf::from))
    }
}

/// Run a configuration to completion, writing outputs and the error
/// channel, and return the process exit code.
pub fn run(config: &RunConfig) -> u8 {
    match run_with_output(config) {
        Ok((content, passed)) => {
            if let Err(e) = write_output(config.out_path.as_deref(), &content) {
                emit_error_json("IO_ERROR", &e.to_string());
                return EXIT_IO;
            }
            if passed {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            }
        }
        Err(RunFailure::MissingZeros) => {
            emit_error_json(
                "ZEROS_REQUIRED",
                &format!(
                    "this command needs a zero table; pass --zeros <path> or set {ZEROS_ENV_VAR}"
                ),
            );
            EXIT_USAGE
        }
        Err(RunFailure::Library(e)) => {
            emit_error_json(e.code(), &e.to_string());
            match e {
                Error::Io(_) => EXIT_IO,
                _ => EXIT_USAGE,
            }
        }
    }
}

/// Failure modes of [`run_with_output`], separated so the missing-zeros
/// case can carry its dedicated error code.
pub enum RunFailure {
    MissingZeros,
    Library(Error),
}

impl From<Error> for RunFailure {
    fn from(e: Error) -> Self {
        RunFailure::Library(e)
    }
}

fn emit_error_json(code: &str, message: &str) {
    let payload = json!({ "code": code, "message": message });
    eprintln!("{payload}");
}

fn write_output(path: Option<&Path>, content: &str) -> Result<()> {
    match path {
        Some(path) => std::fs::write(path, content)?,
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(content.as_bytes())?;
        }
    }
    Ok(())
}

/// Produce the full output document and the pass/fail verdict without
/// touching the filesystem (used directly by tests).
pub fn run_with_output(config: &RunConfig) -> std::result::Result<(String, bool), RunFailure> {
    config.validate()?;

    let zeros = match config.resolve_zeros_path() {
        Some(path) => Some(ZeroTable::load(&path)?),
        None if config.needs_zeros() => return Err(RunFailure::MissingZeros),
        None => None,
    };

    let outcome = match config.command {
        Command::Eval => run_eval(config, zeros.as_ref())?,
        Command::Compare => run_compare(config, zeros.as_ref().expect("checked"))?,
        Command::VerifyFourier => run_verify_fourier(config)?,
        Command::CheckCf => run_check_cf(config, zeros.as_ref().expect("checked"))?,
        Command::Levy => run_levy(zeros.as_ref().expect("checked"))?,
        Command::Sample => run_sample(config, zeros.as_ref().expect("checked"))?,
        Command::Report => run_report(config, zeros.as_ref().expect("checked"))?,
    };
    Ok(outcome)
}

fn sieve_for(t_upper: f64) -> Result<VonMangoldtTable> {
    let limit = ((t_upper.exp()) * (1.0 + 4.0 * f64::EPSILON)).ceil() as u64;
    sieve_von_mangoldt(limit.max(1000))
}

/// 17 significant digits: lossless for f64.
fn fmt(value: f64) -> String {
    format!("{value:.16e}")
}

fn json_string<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable report");
    text.push('\n');
    text
}

// ---------------------------------------------------------------------
// eval

#[derive(Serialize)]
struct EvalRow {
    t: f64,
    g_explicit: f64,
    g_zero_sum: Option<f64>,
    tail_bound: Option<f64>,
}

fn run_eval(
    config: &RunConfig,
    zeros: Option<&ZeroTable>,
) -> Result<(String, bool)> {
    let table = sieve_for(config.t_max.abs().max(config.t_min.abs()))?;
    let consts = constants();
    let mut rows = Vec::with_capacity(config.steps);
    for t in config.t_grid() {
        let explicit = g_explicit(t, &table, consts)?;
        let zero_eval = zeros.map(|z| g_zero_sum(t, z)).transpose()?;
        rows.push(EvalRow {
            t,
            g_explicit: explicit.value,
            g_zero_sum: zero_eval.as_ref().map(|e| e.value),
            tail_bound: zero_eval.as_ref().and_then(|e| e.tail_bound),
        });
    }

    let content = match config.out_format {
        OutFormat::Json => json_string(&rows),
        OutFormat::Csv => {
            let mut out = String::from("t,g_explicit,g_zero_sum,tail_bound\n");
            for r in rows {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    fmt(r.t),
                    fmt(r.g_explicit),
                    r.g_zero_sum.map(fmt).unwrap_or_default(),
                    r.tail_bound.map(fmt).unwrap_or_default(),
                ));
            }
            out
        }
    };
    Ok((content, true))
}

// ---------------------------------------------------------------------
// compare

#[derive(Serialize)]
struct CompareRow {
    t: f64,
    g_explicit: f64,
    g_zero_sum: f64,
    residual: f64,
    tail_bound: f64,
    within_bound: bool,
}

fn run_compare(config: &RunConfig, zeros: &ZeroTable) -> Result<(String, bool)> {
    let table = sieve_for(config.t_max.abs().max(config.t_min.abs()))?;
    let consts = constants();
    let bound = tail_bound(zeros).bound;
    let mut rows = Vec::with_capacity(config.steps);
    let mut passed = true;
    for t in config.t_grid() {
        let explicit = g_explicit(t, &table, consts)?.value;
        let zero_sum = g_zero_sum(t, zeros)?.value;
        let residual = (explicit - zero_sum).abs();
        let within = residual <= bound;
        passed &= within;
        rows.push(CompareRow {
            t,
            g_explicit: explicit,
            g_zero_sum: zero_sum,
            residual,
            tail_bound: bound,
            within_bound: within,
        });
    }

    let content = match config.out_format {
        OutFormat::Json => json_string(&rows),
        OutFormat::Csv => {
            let mut out =
                String::from("t,g_explicit,g_zero_sum,residual,tail_bound,within_bound\n");
            for r in rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    fmt(r.t),
                    fmt(r.g_explicit),
                    fmt(r.g_zero_sum),
                    fmt(r.residual),
                    fmt(r.tail_bound),
                    r.within_bound
                ));
            }
            out
        }
    };
    Ok((content, passed))
}

// ---------------------------------------------------------------------
// verify-fourier

#[derive(Serialize)]
struct FourierRow {
    #[serde(flatten)]
    result: FourierCheckResult,
    error_budget: f64,
    within_budget: bool,
}

fn fourier_rows(config: &RunConfig) -> Result<(Vec<FourierRow>, bool)> {
    let table = sieve_for(config.quadrature.t_upper)?;
    let consts = constants();
    let mut rows = Vec::new();
    let mut passed = true;
    for &z in &config.z_points {
        let result = fourier_g(z, &config.quadrature, &table, consts)?;
        let error_budget = result.truncation_estimate + config.quadrature.abs_tol + 1e-6;
        let within_budget = result.abs_error <= error_budget;
        passed &= within_budget;
        rows.push(FourierRow {
            result,
            error_budget,
            within_budget,
        });
    }
    Ok((rows, passed))
}

fn run_verify_fourier(config: &RunConfig) -> Result<(String, bool)> {
    let (rows, passed) = fourier_rows(config)?;
    let content = match config.out_format {
        OutFormat::Json => json_string(&rows),
        OutFormat::Csv => {
            let mut out = String::from(
                "z_re,z_im,lhs_re,lhs_im,rhs_re,rhs_im,abs_error,truncation_estimate,error_budget,within_budget\n",
            );
            for r in rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{},{}\n",
                    fmt(r.result.z.re),
                    fmt(r.result.z.im),
                    fmt(r.result.lhs.re),
                    fmt(r.result.lhs.im),
                    fmt(r.result.rhs.re),
                    fmt(r.result.rhs.im),
                    fmt(r.result.abs_error),
                    fmt(r.result.truncation_estimate),
                    fmt(r.error_budget),
                    r.within_budget
                ));
            }
            out
        }
    };
    Ok((content, passed))
}

// ---------------------------------------------------------------------
// check-cf

#[derive(Serialize)]
struct CfReport {
    explicit_scan: CfScanReport,
    zero_sum_scan: CfScanReport,
    bochner: BochnerReport,
    bochner_tolerance: f64,
    passed: bool,
}

fn check_cf_report(config: &RunConfig, zeros: &ZeroTable) -> Result<CfReport> {
    let table = sieve_for(config.t_max.abs().max(config.t_min.abs()))?;
    let consts = constants();
    let ts = config.t_grid();
    let explicit_scan = cf_scan(
        &ts,
        GridRoute::Explicit {
            table: &table,
            consts,
        },
        EXPLICIT_SCAN_TOLERANCE,
    )?;
    let zero_sum_scan = cf_scan(&ts, GridRoute::ZeroSum { zeros }, 0.0)?;

    let grid: Vec<f64> = (0..64).map(|i| -8.0 + i as f64 * (16.0 / 63.0)).collect();
    let bochner = bochner_check(&grid, |t| Ok(g_zero_sum(t, zeros)?.value))?;

    let passed = explicit_scan.violations == 0
        && zero_sum_scan.violations == 0
        && bochner.min_eigenvalue >= BOCHNER_TOLERANCE;
    Ok(CfReport {
        explicit_scan,
        zero_sum_scan,
        bochner,
        bochner_tolerance: BOCHNER_TOLERANCE,
        passed,
    })
}

fn run_check_cf(config: &RunConfig, zeros: &ZeroTable) -> Result<(String, bool)> {
    let report = check_cf_report(config, zeros)?;
    let passed = report.passed;
    Ok((json_string(&report), passed))
}

// ---------------------------------------------------------------------
// levy

#[derive(Serialize)]
struct LevyReport {
    measure: crate::levy::LevyMeasure,
    admissibility: crate::levy::AdmissibilityReport,
}

fn run_levy(zeros: &ZeroTable) -> Result<(String, bool)> {
    let measure = build_levy_measure(zeros);
    let report = admissibility(&measure);
    let passed = report.passed;
    let document = LevyReport {
        measure,
        admissibility: report,
    };
    Ok((json_string(&document), passed))
}

// ---------------------------------------------------------------------
// sample

fn run_sample(config: &RunConfig, zeros: &ZeroTable) -> Result<(String, bool)> {
    let measure = build_levy_measure(zeros);
    let batch = sample(&measure, config.n, config.seed)?;
    let content = match config.out_format {
        OutFormat::Json => json_string(&batch),
        OutFormat::Csv => {
            let mut out = String::from("x\n");
            for v in &batch.values {
                out.push_str(&fmt(*v));
                out.push('\n');
            }
            out
        }
    };
    Ok((content, true))
}

// ---------------------------------------------------------------------
// report

#[derive(Serialize)]
struct SuiteSummary {
    cross_route: CrossRouteSummary,
    fourier: Vec<FourierRow>,
    cf: CfReport,
    levy_admissibility: crate::levy::AdmissibilityReport,
    ecf: EcfSummary,
    passed: bool,
}

#[derive(Serialize)]
struct CrossRouteSummary {
    points: usize,
    max_residual: f64,
    tail_bound: f64,
    passed: bool,
}

#[derive(Serialize)]
struct EcfSummary {
    n: usize,
    seed: u64,
    sup_error: f64,
    clt_tolerance: f64,
    passed: bool,
}

fn run_report(config: &RunConfig, zeros: &ZeroTable) -> Result<(String, bool)> {
    // Cross-route residuals over the configured grid.
    let table = sieve_for(config.t_max.abs().max(config.t_min.abs()))?;
    let consts = constants();
    let bound = tail_bound(zeros).bound;
    let mut max_residual = 0.0f64;
    for t in config.t_grid() {
        let explicit = g_explicit(t, &table, consts)?.value;
        let zero_sum = g_zero_sum(t, zeros)?.value;
        max_residual = max_residual.max((explicit - zero_sum).abs());
    }
    let cross_route = CrossRouteSummary {
        points: config.steps,
        max_residual,
        tail_bound: bound,
        passed: max_residual <= bound,
    };

    let (fourier, fourier_passed) = fourier_rows(config)?;
    let cf = check_cf_report(config, zeros)?;

    let measure = build_levy_measure(zeros);
    let levy_admissibility = admissibility(&measure);

    let batch = sample(&measure, config.n, config.seed)?;
    let tgrid: Vec<f64> = (0..21).map(|i| -10.0 + i as f64).collect();
    let ecf_report = ecf_compare(&batch, zeros, &tgrid)?;
    let ecf = EcfSummary {
        n: config.n,
        seed: config.seed,
        sup_error: ecf_report.sup_error,
        clt_tolerance: ecf_report.clt_tolerance,
        passed: ecf_report.passed(),
    };

    let passed = cross_route.passed
        && fourier_passed
        && cf.passed
        && levy_admissibility.passed
        && ecf.passed;
    let summary = SuiteSummary {
        cross_route,
        fourier,
        cf,
        levy_admissibility,
        ecf,
        passed,
    };
    Ok((json_string(&summary), passed))
}
