//! Continuous two-sided power parent distribution.
//!
//! `TSP(a, m, b, n)` has density rising as a power on `[a, m]` and falling
//! as a power on `[m, b]`; `n = 1` is `Uniform[a, b]` and `n = 2` the
//! triangular distribution. The discrete distribution in [`crate::dtsp`] is
//! obtained from this parent by flooring, and the sampler inverts this cdf,
//! so the closed-form quantile here is what makes sampling exact.

use crate::error::{EvalError, ParamError};
use crate::float::Real;

/// Parameters of the continuous parent: `a <= m <= b`, `a < b`, `n > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TspParams<F: Real> {
    a: F,
    m: F,
    b: F,
    n: F,
}

impl<F: Real> TspParams<F> {
    /// Validates and constructs the parameter set.
    pub fn new(a: F, m: F, b: F, n: F) -> Result<Self, ParamError> {
        if !(b > a) {
            return Err(ParamError::EmptySupport);
        }
        if !(a <= m && m <= b) {
            return Err(ParamError::ThresholdOutOfRange);
        }
        if !(n > F::zero()) {
            return Err(ParamError::NonPositiveShape);
        }
        Ok(Self { a, m, b, n })
    }

    pub fn a(&self) -> F {
        self.a
    }

    pub fn m(&self) -> F {
        self.m
    }

    pub fn b(&self) -> F {
        self.b
    }

    pub fn n(&self) -> F {
        self.n
    }

    /// Density. Errors if `x` is outside `[a, b]`.
    ///
    /// For `0 < n < 1` the density is unbounded at the endpoint of a branch;
    /// the exact endpoint evaluation then returns infinity.
    pub fn pdf(&self, x: F) -> Result<F, EvalError> {
        let Self { a, m, b, n } = *self;
        if x < a || x > b {
            return Err(EvalError::OutOfSupport);
        }
        if x == m {
            // Both branches agree here.
            return Ok(n / (b - a));
        }
        let r = if x < m {
            (x - a) / (m - a)
        } else {
            (b - x) / (b - m)
        };
        Ok(n / (b - a) * r.powf(n - F::one()))
    }

    /// Distribution function with clamp semantics: `x <= a` gives exactly 0,
    /// `x >= b` exactly 1.
    pub fn cdf(&self, x: F) -> F {
        let Self { a, m, b, n } = *self;
        if x <= a {
            return F::zero();
        }
        if x >= b {
            return F::one();
        }
        if m > a && x <= m {
            let theta = (m - a) / (b - a);
            theta * ((x - a) / (m - a)).powf(n)
        } else {
            let theta = (b - m) / (b - a);
            F::one() - theta * ((b - x) / (b - m)).powf(n)
        }
    }

    /// Survival function, exactly `1 - cdf(x)`.
    pub fn survival(&self, x: F) -> F {
        F::one() - self.cdf(x)
    }

    /// Closed-form quantile (inverse of [`Self::cdf`]).
    ///
    /// Requires `0 <= u <= 1`; `u = 1` maps to `b`. At the branch threshold
    /// `u = (m-a)/(b-a)` the left branch is used (both give `x = m`).
    pub fn quantile(&self, u: F) -> Result<F, EvalError> {
        let Self { a, m, b, n } = *self;
        if !(u >= F::zero() && u <= F::one()) {
            return Err(EvalError::InvalidProbability);
        }
        if u == F::one() {
            return Ok(b);
        }
        let theta = (m - a) / (b - a);
        let inv_n = n.recip();
        if m > a && u <= theta {
            Ok(a + (m - a) * (u * (b - a) / (m - a)).powf(inv_n))
        } else {
            Ok(b - (b - m) * ((F::one() - u) * (b - a) / (b - m)).powf(inv_n))
        }
    }

    /// `E(X) = (a + (n-1)m + b) / (n+1)`.
    pub fn mean(&self) -> F {
        let Self { a, m, b, n } = *self;
        (a + (n - F::one()) * m + b) / (n + F::one())
    }

    /// `Var(X) = (b-a)^2 [n - 2(n-1) (m-a)/(b-a) (b-m)/(b-a)] / ((n+2)(n+1)^2)`.
    pub fn variance(&self) -> F {
        let Self { a, m, b, n } = *self;
        let two = F::from_f64(2.0).unwrap();
        let w = b - a;
        let p = (m - a) / w;
        let q = (b - m) / w;
        w * w * (n - two * (n - F::one()) * p * q)
            / ((n + two) * (n + F::one()) * (n + F::one()))
    }
}
