//! Monte-Carlo study harness: replicate generation, estimator evaluation,
//! accuracy criteria and table-shaped reports.
//!
//! Every `(method, size, replicate)` triple owns a private generator
//! substream derived from the master seed with [`mix_stream`], so a study
//! is deterministic for a given master seed no matter how replicates are
//! scheduled. Aggregation happens in replicate order after all fits
//! complete, which keeps parallel and serial runs bit-identical.

use core::fmt;
use std::num::NonZeroUsize;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dtsp::DtspParams;
use crate::estimation::{fit_mle, fit_mme, EstimationError, FitOptions, FitStatus, Method};
use crate::format::sig12;
use crate::sampling::{mix_stream, sample_many, RngState};

/// Normal 0.975 quantile used by the pooled confidence interval.
const Z_95: f64 = 1.96;

/// Configuration of a study run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StudyConfig {
    /// True distribution replicates are drawn from.
    pub params: DtspParams<f64>,
    pub sample_sizes: Vec<usize>,
    pub replicates: usize,
    pub methods: Vec<Method>,
    pub master_seed: u64,
    pub fit_options: FitOptions,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConfigError {
    /// Fewer than 2 replicates: the criteria need a variance.
    TooFewReplicates,
    EmptySampleSizes,
    ZeroSampleSize,
    DuplicateSampleSize,
    NoMethods,
    DuplicateMethod,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            ConfigError::TooFewReplicates => "replicates must be >= 2 (variance undefined)",
            ConfigError::EmptySampleSizes => "at least one sample size is required",
            ConfigError::ZeroSampleSize => "sample sizes must be positive",
            ConfigError::DuplicateSampleSize => "sample sizes must be distinct",
            ConfigError::NoMethods => "at least one estimation method is required",
            ConfigError::DuplicateMethod => "methods must be distinct",
        };
        write!(f, "{msg}")
    }
}

impl std::error::Error for ConfigError {}

#[derive(Debug)]
pub enum StudyError {
    Config(ConfigError),
    Estimation(EstimationError),
}

impl fmt::Display for StudyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StudyError::Config(e) => write!(f, "invalid study config: {e}"),
            StudyError::Estimation(e) => write!(f, "estimation failed: {e}"),
        }
    }
}

impl std::error::Error for StudyError {}

impl From<ConfigError> for StudyError {
    fn from(e: ConfigError) -> Self {
        StudyError::Config(e)
    }
}

impl From<EstimationError> for StudyError {
    fn from(e: EstimationError) -> Self {
        StudyError::Estimation(e)
    }
}

impl StudyConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.replicates < 2 {
            return Err(ConfigError::TooFewReplicates);
        }
        if self.sample_sizes.is_empty() {
            return Err(ConfigError::EmptySampleSizes);
        }
        if self.sample_sizes.iter().any(|&k| k == 0) {
            return Err(ConfigError::ZeroSampleSize);
        }
        let mut sizes = self.sample_sizes.clone();
        sizes.sort_unstable();
        sizes.dedup();
        if sizes.len() != self.sample_sizes.len() {
            return Err(ConfigError::DuplicateSampleSize);
        }
        if self.methods.is_empty() {
            return Err(ConfigError::NoMethods);
        }
        let mle = self.methods.iter().filter(|m| **m == Method::Mle).count();
        if mle > 1 || self.methods.len() - mle > 1 {
            return Err(ConfigError::DuplicateMethod);
        }
        Ok(())
    }
}

/// Accuracy criteria of a batch of estimates against the true value:
/// mean, bias, mean squared error and variance, all with the `1/k`
/// convention.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Criteria {
    pub mean: f64,
    pub bias: f64,
    pub mse: f64,
    pub variance: f64,
}

/// One `(method, sample size)` cell of the report.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CellReport {
    pub method: Method,
    pub sample_size: usize,
    pub mean_estimate: f64,
    pub bias: f64,
    pub mse: f64,
    pub variance: f64,
    pub ci_coverage_percent: f64,
    /// Fits that ended on an interval edge (or degenerate), included in
    /// the aggregates but counted here so they stay visible.
    pub boundary_hits: u32,
}

/// Study output: configuration echo plus one cell per (method, size).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StudyReport {
    pub config: StudyConfig,
    pub cells: Vec<CellReport>,
}

/// Computes criteria I-IV for a batch of estimates.
///
/// Needs at least two estimates. `variance` is the standard
/// `(1/k) Σ (θ̂ᵢ - mean)²`, which satisfies `mse = variance + bias²`.
pub fn criteria(estimates: &[f64], true_value: f64) -> Result<Criteria, ConfigError> {
    if estimates.len() < 2 {
        return Err(ConfigError::TooFewReplicates);
    }
    let k = estimates.len() as f64;
    let mean = estimates.iter().sum::<f64>() / k;
    let bias = estimates.iter().map(|e| e - true_value).sum::<f64>() / k;
    let mse = estimates.iter().map(|e| (e - true_value).powi(2)).sum::<f64>() / k;
    let variance = estimates.iter().map(|e| (e - mean).powi(2)).sum::<f64>() / k;
    Ok(Criteria { mean, bias, mse, variance })
}

/// Percentage of estimates inside the single pooled interval
/// `mean ± 1.96·sqrt(variance)` (closed interval).
///
/// This is a normality diagnostic of the estimator batch, not a classical
/// per-replicate coverage.
pub fn ci_coverage(estimates: &[f64]) -> Result<f64, ConfigError> {
    let c = criteria(estimates, 0.0)?;
    let half_width = Z_95 * c.variance.sqrt();
    let (lo, hi) = (c.mean - half_width, c.mean + half_width);
    let inside = estimates.iter().filter(|e| **e >= lo && **e <= hi).count();
    Ok(100.0 * inside as f64 / estimates.len() as f64)
}

/// Runs the study, evaluating replicates in parallel.
pub fn run_study(config: &StudyConfig) -> Result<(StudyReport, Duration), StudyError> {
    run_study_impl(config, true)
}

/// Serial twin of [`run_study`]; produces a bit-identical report.
pub fn run_study_serial(config: &StudyConfig) -> Result<(StudyReport, Duration), StudyError> {
    run_study_impl(config, false)
}

fn run_study_impl(config: &StudyConfig, parallel: bool) -> Result<(StudyReport, Duration), StudyError> {
    config.validate()?;
    let start = Instant::now();
    let mut cells = Vec::with_capacity(config.methods.len() * config.sample_sizes.len());
    for (mi, &method) in config.methods.iter().enumerate() {
        for (si, &size) in config.sample_sizes.iter().enumerate() {
            cells.push(run_cell(config, method, mi, si, size, parallel)?);
        }
    }
    let report = StudyReport { config: config.clone(), cells };
    Ok((report, start.elapsed()))
}

fn run_cell(
    config: &StudyConfig,
    method: Method,
    method_index: usize,
    size_index: usize,
    size: usize,
    parallel: bool,
) -> Result<CellReport, StudyError> {
    let one_fit = |replicate: usize| -> Result<(f64, FitStatus), EstimationError> {
        let stream = mix_stream(&[
            config.master_seed,
            method_index as u64,
            size_index as u64,
            replicate as u64,
        ]);
        let mut rng = RngState::new(config.master_seed, stream);
        let count = NonZeroUsize::new(size).expect("validated positive");
        let sample = sample_many(&config.params, count, &mut rng);
        let p = &config.params;
        let fit = match method {
            Method::Mle => fit_mle(sample.values(), p.a(), p.m(), p.b(), &config.fit_options)?,
            Method::Mme => fit_mme(sample.values(), p.a(), p.m(), p.b(), &config.fit_options)?,
        };
        Ok((fit.n_hat, fit.status))
    };

    // Replicate order is fixed by collect; aggregation below is serial.
    let fits: Result<Vec<_>, _> = if parallel {
        (0..config.replicates).into_par_iter().map(one_fit).collect()
    } else {
        (0..config.replicates).map(one_fit).collect()
    };
    let fits = fits?;

    let estimates: Vec<f64> = fits.iter().map(|(n, _)| *n).collect();
    let boundary_hits = fits.iter().filter(|(_, s)| *s != FitStatus::Converged).count() as u32;
    let crit = criteria(&estimates, config.params.n())?;
    let coverage = ci_coverage(&estimates)?;

    Ok(CellReport {
        method,
        sample_size: size,
        mean_estimate: crit.mean,
        bias: crit.bias,
        mse: crit.mse,
        variance: crit.variance,
        ci_coverage_percent: coverage,
        boundary_hits,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
    Markdown,
}

/// Renders the report. CSV carries one row per cell under a fixed header;
/// markdown mirrors the row labels of the reference tables; JSON is the
/// serde representation of [`StudyReport`].
pub fn render_report(report: &StudyReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Csv => render_csv(report),
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        ReportFormat::Markdown => render_markdown(report),
    }
}

fn render_csv(report: &StudyReport) -> String {
    let mut out = String::from(
        "method,sample_size,mean_estimate,bias,mse,variance,ci_coverage_percent,boundary_hits\n",
    );
    for c in &report.cells {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            c.method,
            c.sample_size,
            sig12(c.mean_estimate),
            sig12(c.bias),
            sig12(c.mse),
            sig12(c.variance),
            sig12(c.ci_coverage_percent),
            c.boundary_hits,
        ));
    }
    out
}

fn render_markdown(report: &StudyReport) -> String {
    // Columns grouped by sample size, then method, as in the reference
    // tables; rows carry the table's exact labels.
    let mut order: Vec<&CellReport> = Vec::new();
    for &size in &report.config.sample_sizes {
        for &method in &report.config.methods {
            let cell = report
                .cells
                .iter()
                .find(|c| c.sample_size == size && c.method == method)
                .expect("every (size, method) cell exists");
            order.push(cell);
        }
    }
    let mut out = String::from("| estimates ↓ sample size → |");
    for c in &order {
        out.push_str(&format!(" {} {} |", c.sample_size, c.method));
    }
    out.push('\n');
    out.push_str("|---|");
    out.push_str(&"---|".repeat(order.len()));
    out.push('\n');
    let rows: [(&str, Box<dyn Fn(&CellReport) -> String>); 6] = [
        ("E(n̂)", Box::new(|c| sig12(c.mean_estimate))),
        ("Bias(n̂)", Box::new(|c| sig12(c.bias))),
        ("MSE(n̂)", Box::new(|c| sig12(c.mse))),
        ("Var(n̂)", Box::new(|c| sig12(c.variance))),
        ("% of n in CI", Box::new(|c| sig12(c.ci_coverage_percent))),
        ("Boundary hits", Box::new(|c| c.boundary_hits.to_string())),
    ];
    for (label, render) in rows {
        out.push_str(&format!("| {label} |"));
        for c in &order {
            out.push_str(&format!(" {} |", render(c)));
        }
        out.push('\n');
    }
    out
}
