//! Estimation of the shape `n` from data with `(a, m, b)` known.
//!
//! Two estimators are provided. The MLE solves the likelihood equation
//! (score root) over a bracket. The moment matcher solves `E(Y; n) = m1`
//! for the sample mean `m1`; when the first moment does not depend on `n`
//! at all — which happens exactly when `m` sits at the midpoint of the
//! support, `m = (a+b)/2` — it falls back to matching the second raw
//! moment `E(Y²; n) = m2`. Without the fallback the symmetric case is
//! unestimable by moments: every `n` reproduces the same mean.
//!
//! Endpoints are the caller's responsibility; [`endpoints_heuristic`]
//! offers the obvious data-driven suggestion but estimators never call it.

use core::fmt;
use std::io::BufRead;

use serde::{Deserialize, Serialize};

use crate::dtsp::DtspParams;
use crate::error::ParamError;
use crate::solve::{brent, SolveError};

/// Moment values whose range over the search interval is below this are
/// treated as constant in `n`.
const FLAT_MOMENT_TOL: f64 = 1e-9;

/// Number of probe points used by the flatness check.
const FLAT_PROBES: usize = 5;

/// Search interval and stopping tolerance for the fitters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FitOptions {
    pub n_lo: f64,
    pub n_hi: f64,
    /// Absolute tolerance on `n`. The solver usually lands far tighter.
    pub tol: f64,
}

impl Default for FitOptions {
    fn default() -> Self {
        Self { n_lo: 1e-3, n_hi: 50.0, tol: 1e-8 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "MLE")]
    Mle,
    #[serde(rename = "MME")]
    Mme,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Mle => write!(f, "MLE"),
            Method::Mme => write!(f, "MME"),
        }
    }
}

/// Outcome classification of a fit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FitStatus {
    /// The stopping tolerance was met at an interior solution.
    Converged,
    /// No solution inside the interval; the lower edge was best.
    AtLowerBound,
    /// No solution inside the interval; the upper edge was best.
    AtUpperBound,
    /// Every candidate moment is constant in `n` (single-point support):
    /// the data carry no information about the shape.
    DegenerateMoment,
}

impl fmt::Display for FitStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FitStatus::Converged => "Converged",
            FitStatus::AtLowerBound => "AtLowerBound",
            FitStatus::AtUpperBound => "AtUpperBound",
            FitStatus::DegenerateMoment => "DegenerateMoment",
        };
        write!(f, "{s}")
    }
}

/// Result of [`fit_mle`] / [`fit_mme`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EstimationResult {
    pub n_hat: f64,
    pub method: Method,
    pub status: FitStatus,
    /// Final log-likelihood (MLE) or squared moment distance (MME).
    pub objective: f64,
    pub iterations: u32,
    /// Which raw moment the MME matched (1 or 2); `None` for MLE.
    pub moment_order_used: Option<u8>,
}

#[derive(Debug)]
pub enum EstimationError {
    EmptyData,
    /// Observation at `index` lies outside `{a, ..., b-1}`.
    DataOutOfSupport { index: usize, value: i64 },
    /// Lower bound not positive, or bounds out of order / not finite.
    InvalidInterval,
    InvalidParams(ParamError),
    /// Solver defect (iteration cap breached); never expected within the
    /// interval contract.
    Numerical(SolveError),
}

impl fmt::Display for EstimationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EstimationError::EmptyData => write!(f, "EmptyData: no observations"),
            EstimationError::DataOutOfSupport { index, value } => write!(
                f,
                "DataOutOfSupport: observation {value} at index {index} is outside the support"
            ),
            EstimationError::InvalidInterval => {
                write!(f, "InvalidInterval: need 0 < n_lo < n_hi and tol > 0")
            }
            EstimationError::InvalidParams(e) => write!(f, "{e}"),
            EstimationError::Numerical(e) => write!(f, "numerical failure: {e}"),
        }
    }
}

impl std::error::Error for EstimationError {}

/// Log-likelihood of the sample under `DTSP(a, m, b, n)`: the sum of
/// per-observation log pmfs, the observations split by branch.
pub fn log_likelihood(
    data: &[i64],
    a: i64,
    m: i64,
    b: i64,
    n: f64,
) -> Result<f64, EstimationError> {
    let params = DtspParams::new(a, m, b, n).map_err(EstimationError::InvalidParams)?;
    validate_data(data, &params)?;
    Ok(data
        .iter()
        .map(|&y| params.log_pmf(y).expect("validated in support"))
        .sum())
}

/// d/dn of [`log_likelihood`].
///
/// Each observation contributes
/// `(c₊^n ln c₊ - c^n ln c) / (c₊^n - c^n) - ln(side)` with the
/// `0·ln 0 = 0` convention at `c = 0`.
pub fn score(data: &[i64], a: i64, m: i64, b: i64, n: f64) -> Result<f64, EstimationError> {
    let params = DtspParams::new(a, m, b, n).map_err(EstimationError::InvalidParams)?;
    validate_data(data, &params)?;
    let mut acc = 0.0;
    for &y in data {
        let (c, side) = if y < m {
            ((y - a) as u64, (m - a) as f64)
        } else {
            ((b - y - 1) as u64, (b - m) as f64)
        };
        acc += score_term(c, n) - side.ln();
    }
    Ok(acc)
}

/// `(c₊^n ln c₊ - c^n ln c) / (c₊^n - c^n)`, overflow-free.
fn score_term(c: u64, n: f64) -> f64 {
    if c == 0 {
        return 0.0; // (1^n ln 1 - 0) / (1^n - 0)
    }
    let cf = c as f64;
    // Divide through by c^n: (t ln(c+1) - ln c) / (t - 1), t = ((c+1)/c)^n.
    let t_minus_1 = (n * cf.recip().ln_1p()).exp_m1();
    ((t_minus_1 + 1.0) * (cf + 1.0).ln() - cf.ln()) / t_minus_1
}

/// Maximum-likelihood fit of `n` over the options' interval.
///
/// Roots the score by safeguarded bracketing when it changes sign across
/// the interval; otherwise reports the better boundary.
pub fn fit_mle(
    data: &[i64],
    a: i64,
    m: i64,
    b: i64,
    options: &FitOptions,
) -> Result<EstimationResult, EstimationError> {
    let (lo, hi) = check_interval(options)?;
    // Validate data against the shape-independent support once.
    let params = DtspParams::new(a, m, b, 1.0).map_err(EstimationError::InvalidParams)?;
    validate_data(data, &params)?;

    let sc = |n: f64| score(data, a, m, b, n).expect("inputs validated");
    let s_lo = sc(lo);
    let s_hi = sc(hi);

    let (n_hat, status, iterations) = if s_lo <= 0.0 && s_hi <= 0.0 {
        (lo, FitStatus::AtLowerBound, 0)
    } else if s_lo >= 0.0 && s_hi >= 0.0 {
        (hi, FitStatus::AtUpperBound, 0)
    } else if s_lo > 0.0 && s_hi < 0.0 {
        let (root, iters) =
            brent(sc, lo, hi, options.tol.min(1e-12)).map_err(EstimationError::Numerical)?;
        (root, FitStatus::Converged, iters)
    } else {
        // Score rises from negative to positive: likelihood dips in the
        // middle and the maximum sits on an edge.
        let ll_lo = log_likelihood(data, a, m, b, lo)?;
        let ll_hi = log_likelihood(data, a, m, b, hi)?;
        if ll_lo >= ll_hi {
            (lo, FitStatus::AtLowerBound, 0)
        } else {
            (hi, FitStatus::AtUpperBound, 0)
        }
    };

    Ok(EstimationResult {
        n_hat,
        method: Method::Mle,
        status,
        objective: log_likelihood(data, a, m, b, n_hat)?,
        iterations,
        moment_order_used: None,
    })
}

/// Moment-matching fit of `n`.
///
/// Matches the first raw moment; if the first moment is constant in `n`
/// across the interval (the symmetric threshold case), matches the second
/// raw moment instead and records `moment_order_used = 2`.
pub fn fit_mme(
    data: &[i64],
    a: i64,
    m: i64,
    b: i64,
    options: &FitOptions,
) -> Result<EstimationResult, EstimationError> {
    let (lo, hi) = check_interval(options)?;
    let probe = DtspParams::new(a, m, b, 1.0).map_err(EstimationError::InvalidParams)?;
    validate_data(data, &probe)?;

    let k = data.len() as f64;
    let m1 = data.iter().map(|&y| y as f64).sum::<f64>() / k;
    let m2 = data.iter().map(|&y| (y as f64) * (y as f64)).sum::<f64>() / k;

    let mean_at = |n: f64| {
        DtspParams::new(a, m, b, n)
            .expect("n inside positive interval")
            .mean_closed_form()
    };
    let second_at = |n: f64| {
        DtspParams::new(a, m, b, n)
            .expect("n inside positive interval")
            .second_moment_closed_form()
    };

    if !is_flat(&mean_at, lo, hi) {
        return match_moment(&mean_at, m1, 1, lo, hi, options.tol);
    }
    if !is_flat(&second_at, lo, hi) {
        return match_moment(&second_at, m2, 2, lo, hi, options.tol);
    }
    // Single-point support: no moment carries information about n.
    let n_hat = 1.0f64.clamp(lo, hi);
    Ok(EstimationResult {
        n_hat,
        method: Method::Mme,
        status: FitStatus::DegenerateMoment,
        objective: (mean_at(n_hat) - m1).powi(2),
        iterations: 0,
        moment_order_used: None,
    })
}

fn is_flat(moment: &impl Fn(f64) -> f64, lo: f64, hi: f64) -> bool {
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    for i in 0..FLAT_PROBES {
        let n = lo + (hi - lo) * i as f64 / (FLAT_PROBES - 1) as f64;
        let v = moment(n);
        min = min.min(v);
        max = max.max(v);
    }
    max - min < FLAT_MOMENT_TOL
}

fn match_moment(
    moment: &impl Fn(f64) -> f64,
    target: f64,
    order: u8,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<EstimationResult, EstimationError> {
    let g = |n: f64| moment(n) - target;
    let g_lo = g(lo);
    let g_hi = g(hi);
    let (n_hat, status, iterations) = if g_lo == 0.0 {
        (lo, FitStatus::Converged, 0)
    } else if g_hi == 0.0 {
        (hi, FitStatus::Converged, 0)
    } else if g_lo.signum() != g_hi.signum() {
        let (root, iters) = brent(g, lo, hi, tol.min(1e-12)).map_err(EstimationError::Numerical)?;
        (root, FitStatus::Converged, iters)
    } else if g_lo.abs() <= g_hi.abs() {
        // No root: the squared distance is minimized at an edge.
        (lo, FitStatus::AtLowerBound, 0)
    } else {
        (hi, FitStatus::AtUpperBound, 0)
    };
    Ok(EstimationResult {
        n_hat,
        method: Method::Mme,
        status,
        objective: g(n_hat).powi(2),
        iterations,
        moment_order_used: Some(order),
    })
}

/// Data-driven endpoint suggestion: `a = min`, `b = max + 1`, `m` the
/// smallest empirical-pmf argmax. Advisory only.
pub fn endpoints_heuristic(data: &[i64]) -> Result<(i64, i64, i64), EstimationError> {
    if data.is_empty() {
        return Err(EstimationError::EmptyData);
    }
    let min = *data.iter().min().unwrap();
    let max = *data.iter().max().unwrap();
    let mut counts = vec![0usize; (max - min + 1) as usize];
    for &y in data {
        counts[(y - min) as usize] += 1;
    }
    let best = counts.iter().copied().max().unwrap();
    let m = min
        + counts.iter().position(|&c| c == best).unwrap() as i64;
    Ok((min, m, max + 1))
}

/// Reads observations in the shared ingestion format: newline-separated
/// integers, or a single-column CSV whose header is exactly `y`. Blank
/// lines are ignored; any other non-integer token is an error carrying its
/// 1-based line number.
pub fn read_observations<R: BufRead>(reader: R) -> Result<Vec<i64>, ReadError> {
    let mut values = Vec::new();
    let mut first_token = true;
    for (idx, line) in reader.lines().enumerate() {
        let line = line.map_err(ReadError::Io)?;
        let token = line.trim();
        if token.is_empty() {
            continue;
        }
        if first_token && token == "y" {
            first_token = false;
            continue;
        }
        first_token = false;
        match token.parse::<i64>() {
            Ok(v) => values.push(v),
            Err(_) => {
                return Err(ReadError::NonInteger { line: idx + 1, token: token.to_string() })
            }
        }
    }
    Ok(values)
}

#[derive(Debug)]
pub enum ReadError {
    Io(std::io::Error),
    NonInteger { line: usize, token: String },
}

impl fmt::Display for ReadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReadError::Io(e) => write!(f, "i/o error: {e}"),
            ReadError::NonInteger { line, token } => {
                write!(f, "line {line}: non-integer token {token:?}")
            }
        }
    }
}

impl std::error::Error for ReadError {}

fn check_interval(options: &FitOptions) -> Result<(f64, f64), EstimationError> {
    let (lo, hi) = (options.n_lo, options.n_hi);
    if !(lo > 0.0 && hi > lo && hi.is_finite() && options.tol > 0.0) {
        return Err(EstimationError::InvalidInterval);
    }
    Ok((lo, hi))
}

fn validate_data(data: &[i64], params: &DtspParams<f64>) -> Result<(), EstimationError> {
    if data.is_empty() {
        return Err(EstimationError::EmptyData);
    }
    for (index, &value) in data.iter().enumerate() {
        if !params.contains(value) {
            return Err(EstimationError::DataOutOfSupport { index, value });
        }
    }
    Ok(())
}
