//! Bracketed scalar root finding (Brent's method).
//!
//! Inverse-quadratic / secant steps with a bisection safeguard, so
//! convergence is guaranteed once a sign change is bracketed. The estimators
//! use this for the likelihood and moment equations.

use core::fmt;

/// Hard iteration cap; reaching it violates the solver's convergence
/// guarantee and is reported as a defect rather than a status.
pub const MAX_ITERATIONS: u32 = 200;

#[derive(Debug, Clone, PartialEq)]
pub enum SolveError {
    /// `f(lo)` and `f(hi)` do not have opposite signs.
    NotBracketed,
    /// The iteration cap was reached before the interval shrank to
    /// tolerance.
    IterationLimit,
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::NotBracketed => write!(f, "root is not bracketed by the interval"),
            SolveError::IterationLimit => {
                write!(f, "iteration cap of {} reached", MAX_ITERATIONS)
            }
        }
    }
}

impl std::error::Error for SolveError {}

/// Finds a root of `f` in `[lo, hi]`, assuming `f(lo)` and `f(hi)` have
/// opposite signs. Returns the root and the number of iterations used.
///
/// `xtol` is an absolute tolerance on the bracket width; the method
/// additionally stops once the width reaches machine precision around the
/// root, so the returned value is typically far more accurate than `xtol`.
pub fn brent<F>(mut f: F, lo: f64, hi: f64, xtol: f64) -> Result<(f64, u32), SolveError>
where
    F: FnMut(f64) -> f64,
{
    let (mut a, mut b) = (lo, hi);
    let (mut fa, mut fb) = (f(a), f(b));
    if fa == 0.0 {
        return Ok((a, 0));
    }
    if fb == 0.0 {
        return Ok((b, 0));
    }
    if fa.signum() == fb.signum() {
        return Err(SolveError::NotBracketed);
    }

    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;

    for iter in 1..=MAX_ITERATIONS {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let eps_scale = 2.0 * f64::EPSILON * b.abs();
        let tol1 = eps_scale + 0.5 * xtol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return Ok((b, iter));
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            // Attempt inverse quadratic interpolation (secant when a == c).
            let s = fb / fa;
            let (mut p, mut q) = if a == c {
                (2.0 * xm * s, 1.0 - s)
            } else {
                let q0 = fa / fc;
                let r = fb / fc;
                (
                    s * (2.0 * xm * q0 * (q0 - r) - (b - a) * (r - 1.0)),
                    (q0 - 1.0) * (r - 1.0) * (s - 1.0),
                )
            };
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        if d.abs() > tol1 {
            b += d;
        } else {
            b += tol1.copysign(xm);
        }
        fb = f(b);
    }
    Err(SolveError::IterationLimit)
}
