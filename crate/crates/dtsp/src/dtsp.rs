//! The discrete two-sided power distribution `DTSP(a, m, b, n)`.
//!
//! Support is the integers `{a, ..., b-1}`. The pmf has two power-law
//! branches split at the threshold `m`:
//!
//! ```text
//! p(y) = ((y-a+1)^n - (y-a)^n) / ((b-a)(m-a)^(n-1))   for a <= y <= m-1
//! p(y) = ((b-y)^n - (b-y-1)^n) / ((b-a)(b-m)^(n-1))   for m <= y <= b-1
//! ```
//!
//! `n = 1` collapses to the discrete uniform on the support, `n > 1` is
//! unimodal near `m`, and `0 < n < 1` is U-shaped with the mass piled at the
//! endpoints. The distribution is exactly the law of `floor(X)` for `X`
//! drawn from the continuous parent [`crate::TspParams`] with the same
//! parameters, which is what makes the inverse-transform sampler in
//! [`crate::sampling`] exact.
//!
//! The survival function is S(y) = P(Y >= y), the convention under which it
//! coincides with the continuous parent's survival at integer arguments.

use serde::{Deserialize, Serialize};

use crate::error::{EvalError, ParamError};
use crate::float::{int, Real};
use crate::harmonic::{generalized_harmonic, ln_power_diff, power_diff};
use crate::tsp::TspParams;

/// Relative tolerance used when collecting tied modes.
const MODE_TIE_RTOL: f64 = 1e-12;

/// Parameters of the discrete distribution.
///
/// `a` and `m` and `b` are integers with `a <= m <= b` and `a < b`; the
/// support is `{a, ..., b-1}` (`b` is one past the last support point).
/// `n` is any positive real.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DtspParams<F: Real> {
    a: i64,
    m: i64,
    b: i64,
    n: F,
}

/// First and second moments of a [`DtspParams`] distribution.
///
/// `index_of_dispersion` is `None` when the mean is exactly zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MomentSummary<F: Real> {
    pub mean: F,
    pub second_moment: F,
    pub variance: F,
    pub index_of_dispersion: Option<F>,
}

impl<F: Real> MomentSummary<F> {
    fn from_raw(mean: F, second_moment: F) -> Self {
        let variance = (second_moment - mean * mean).max(F::zero());
        let index_of_dispersion = if mean == F::zero() {
            None
        } else {
            Some(variance / mean)
        };
        Self {
            mean,
            second_moment,
            variance,
            index_of_dispersion,
        }
    }
}

impl<F: Real> DtspParams<F> {
    /// Validates and constructs the parameter set.
    pub fn new(a: i64, m: i64, b: i64, n: F) -> Result<Self, ParamError> {
        if b <= a {
            return Err(ParamError::EmptySupport);
        }
        if m < a || m > b {
            return Err(ParamError::ThresholdOutOfRange);
        }
        if !(n > F::zero()) {
            return Err(ParamError::NonPositiveShape);
        }
        Ok(Self { a, m, b, n })
    }

    /// Like [`Self::new`] but accepts real-valued endpoints, rejecting any
    /// with a fractional part. This is the entry point for flag parsing.
    pub fn from_real_endpoints(a: f64, m: f64, b: f64, n: F) -> Result<Self, ParamError> {
        for v in [a, m, b] {
            if !v.is_finite() || v.fract() != 0.0 {
                return Err(ParamError::NonIntegerEndpoint);
            }
        }
        Self::new(a as i64, m as i64, b as i64, n)
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn n(&self) -> F {
        self.n
    }

    /// Number of support points, `b - a`.
    pub fn width(&self) -> u64 {
        (self.b - self.a) as u64
    }

    /// Iterator over the support `{a, ..., b-1}`.
    pub fn support(&self) -> impl Iterator<Item = i64> {
        self.a..self.b
    }

    pub fn contains(&self, y: i64) -> bool {
        y >= self.a && y < self.b
    }

    /// The continuous parent with the same `(a, m, b, n)`.
    pub fn to_continuous(&self) -> TspParams<F> {
        TspParams::new(int(self.a), int(self.m), int(self.b), self.n)
            .expect("valid discrete params give valid continuous params")
    }

    /// Distance-from-edge `c` and branch width for a support point, such
    /// that the pmf numerator is `(c+1)^n - c^n`.
    fn branch(&self, y: i64) -> (u64, i64) {
        if y < self.m {
            ((y - self.a) as u64, self.m - self.a)
        } else {
            ((self.b - y - 1) as u64, self.b - self.m)
        }
    }

    fn branch_denominator(&self, side: i64) -> F {
        int::<F>(self.b - self.a) * int::<F>(side).powf(self.n - F::one())
    }

    /// Probability mass at `y`; 0 outside the support.
    pub fn pmf(&self, y: i64) -> F {
        if !self.contains(y) {
            return F::zero();
        }
        let (c, side) = self.branch(y);
        power_diff(c, self.n) / self.branch_denominator(side)
    }

    /// `ln pmf(y)`, computed without forming the large powers.
    ///
    /// Errors on `y` outside the support (log of zero).
    pub fn log_pmf(&self, y: i64) -> Result<F, EvalError> {
        if !self.contains(y) {
            return Err(EvalError::OutOfSupport);
        }
        let (c, side) = self.branch(y);
        Ok(ln_power_diff(c, self.n)
            - int::<F>(self.b - self.a).ln()
            - (self.n - F::one()) * int::<F>(side).ln())
    }

    /// Within-branch recurrence ratio `pmf(y+1) / pmf(y)`.
    ///
    /// Defined for `a <= y <= m-2` and `m <= y <= b-2`; the pair
    /// `(m-1, m)` crosses branches and is rejected.
    pub fn pmf_ratio(&self, y: i64) -> Result<F, EvalError> {
        if !self.contains(y) || !self.contains(y + 1) {
            return Err(EvalError::OutOfSupport);
        }
        if y == self.m - 1 {
            return Err(EvalError::BranchCrossing);
        }
        let (c, _) = self.branch(y);
        Ok(if y < self.m {
            power_diff(c + 1, self.n) / power_diff(c, self.n)
        } else {
            // Right branch: c decreases as y increases.
            power_diff(c - 1, self.n) / power_diff(c, self.n)
        })
    }

    /// Full `(y, pmf(y))` table over the support.
    ///
    /// Each branch is generated from one direct evaluation via the
    /// recurrence ratio; the branch crossing `m-1 -> m` evaluates both sides
    /// directly.
    pub fn pmf_table(&self) -> Vec<(i64, F)> {
        let mut table = Vec::with_capacity(self.width() as usize);
        if self.m > self.a {
            let mut p = self.pmf(self.a);
            table.push((self.a, p));
            for y in self.a..self.m - 1 {
                p = p * self.pmf_ratio(y).expect("within left branch");
                table.push((y + 1, p));
            }
        }
        if self.m < self.b {
            let mut p = self.pmf(self.m);
            table.push((self.m, p));
            for y in self.m..self.b - 1 {
                p = p * self.pmf_ratio(y).expect("within right branch");
                table.push((y + 1, p));
            }
        }
        table
    }

    /// `F(y) = P(Y <= y)`, with `y < a` giving 0 and `y >= b-1` giving 1.
    ///
    /// Uses the closed branch forms, equivalent to `1 - survival(y+1)`:
    /// the left branch evaluates to exactly `(m-a)/(b-a)` at `y = m-1`,
    /// which pins the threshold quantile.
    pub fn cdf(&self, y: i64) -> F {
        if y < self.a {
            return F::zero();
        }
        if y >= self.b - 1 {
            return F::one();
        }
        if y < self.m {
            let theta = int::<F>(self.m - self.a) / int::<F>(self.b - self.a);
            theta * (int::<F>(y + 1 - self.a) / int::<F>(self.m - self.a)).powf(self.n)
        } else {
            let theta = int::<F>(self.b - self.m) / int::<F>(self.b - self.a);
            F::one() - theta * (int::<F>(self.b - y - 1) / int::<F>(self.b - self.m)).powf(self.n)
        }
    }

    /// `S(y) = P(Y >= y)`, with `y <= a` giving 1 and `y >= b` giving 0.
    ///
    /// This is the same algebraic expression as the continuous parent's
    /// survival at integer arguments; in particular
    /// `survival(m) == (b-m)/(b-a)` exactly.
    pub fn survival(&self, y: i64) -> F {
        if y <= self.a {
            return F::one();
        }
        if y >= self.b {
            return F::zero();
        }
        if y < self.m {
            let theta = int::<F>(self.m - self.a) / int::<F>(self.b - self.a);
            F::one() - theta * (int::<F>(y - self.a) / int::<F>(self.m - self.a)).powf(self.n)
        } else {
            let theta = int::<F>(self.b - self.m) / int::<F>(self.b - self.a);
            theta * (int::<F>(self.b - y) / int::<F>(self.b - self.m)).powf(self.n)
        }
    }

    /// Hazard (failure) rate `r(y) = pmf(y) / S(y)`; always in `(0, 1]`,
    /// with `r(b-1) = 1` exactly.
    pub fn hazard(&self, y: i64) -> Result<F, EvalError> {
        if !self.contains(y) {
            return Err(EvalError::OutOfSupport);
        }
        if y >= self.m {
            // pmf and survival share the branch denominator, which cancels:
            // r(y) = ((b-y)^n - (b-y-1)^n) / (b-y)^n.
            let (c, _) = self.branch(y);
            Ok(power_diff(c, self.n) / int::<F>(c as i64 + 1).powf(self.n))
        } else {
            Ok(self.pmf(y) / self.survival(y))
        }
    }

    /// All argmax points of the pmf, in increasing order.
    ///
    /// Computed by exhaustive scan; values within relative `1e-12` of the
    /// maximum are reported as ties.
    pub fn mode_set(&self) -> Vec<i64> {
        let probs: Vec<F> = self.support().map(|y| self.pmf(y)).collect();
        let max = probs
            .iter()
            .copied()
            .fold(F::neg_infinity(), |acc, p| acc.max(p));
        let cut = max * (F::one() - F::from_f64(MODE_TIE_RTOL).unwrap());
        self.support()
            .zip(&probs)
            .filter(|(_, &p)| p >= cut)
            .map(|(y, _)| y)
            .collect()
    }

    /// Smallest `y` in the support with `cdf(y) >= q`, for `0 < q <= 1`.
    ///
    /// `quantile((m-a)/(b-a)) == m-1` whenever `m > a`, realizing the
    /// threshold-quantile property of `m`.
    pub fn quantile(&self, q: F) -> Result<i64, EvalError> {
        if !(q > F::zero() && q <= F::one()) {
            return Err(EvalError::InvalidProbability);
        }
        let mut lo = self.a;
        let mut hi = self.b - 1; // cdf(b-1) = 1 >= q
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if self.cdf(mid) >= q {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        Ok(hi)
    }

    /// `quantile(1/2)`.
    pub fn median(&self) -> i64 {
        self.quantile(F::from_f64(0.5).unwrap())
            .expect("0.5 is a valid probability")
    }

    /// Mean and second moment by direct summation over the support.
    ///
    /// This is the canonical oracle for the closed forms below.
    pub fn moments_by_summation(&self) -> MomentSummary<F> {
        let mut mean = F::zero();
        let mut second = F::zero();
        for y in self.support() {
            let p = self.pmf(y);
            let yf = int::<F>(y);
            mean = mean + yf * p;
            second = second + yf * yf * p;
        }
        MomentSummary::from_raw(mean, second)
    }

    /// Closed-form mean via generalized harmonic numbers:
    ///
    /// ```text
    /// E(Y) = [(m-1)(m-a)^n - H_{m-a-1}^{(-n)}] / ((b-a)(m-a)^{n-1})
    ///      + [m(b-m)^n + H_{b-m-1}^{(-n)}] / ((b-a)(b-m)^{n-1})
    /// ```
    ///
    /// An empty branch (`m = a` or `m = b`) contributes nothing and its
    /// denominator is never formed.
    pub fn mean_closed_form(&self) -> F {
        let n = self.n;
        let ml = self.m - self.a;
        let mr = self.b - self.m;
        let mut mean = F::zero();
        if ml > 0 {
            let num = int::<F>(self.m - 1) * int::<F>(ml).powf(n)
                - generalized_harmonic((ml - 1) as u64, -n);
            mean = mean + num / self.branch_denominator(ml);
        }
        if mr > 0 {
            let num = int::<F>(self.m) * int::<F>(mr).powf(n)
                + generalized_harmonic((mr - 1) as u64, -n);
            mean = mean + num / self.branch_denominator(mr);
        }
        mean
    }

    /// Closed-form second raw moment:
    ///
    /// ```text
    /// E(Y²) = [(m-1)²(m-a)^n - (2a-1) H_{m-a-1}^{(-n)} - 2 H_{m-a-1}^{(-n-1)}] / ((b-a)(m-a)^{n-1})
    ///       + [m²(b-m)^n + (2b-1) H_{b-m-1}^{(-n)} - 2 H_{b-m-1}^{(-n-1)}] / ((b-a)(b-m)^{n-1})
    /// ```
    pub fn second_moment_closed_form(&self) -> F {
        let n = self.n;
        let two = F::from_f64(2.0).unwrap();
        let ml = self.m - self.a;
        let mr = self.b - self.m;
        let mut second = F::zero();
        if ml > 0 {
            let h = generalized_harmonic((ml - 1) as u64, -n);
            let h1 = generalized_harmonic((ml - 1) as u64, -n - F::one());
            let m1 = int::<F>(self.m - 1);
            let num = m1 * m1 * int::<F>(ml).powf(n) - int::<F>(2 * self.a - 1) * h - two * h1;
            second = second + num / self.branch_denominator(ml);
        }
        if mr > 0 {
            let h = generalized_harmonic((mr - 1) as u64, -n);
            let h1 = generalized_harmonic((mr - 1) as u64, -n - F::one());
            let mf = int::<F>(self.m);
            let num = mf * mf * int::<F>(mr).powf(n) + int::<F>(2 * self.b - 1) * h - two * h1;
            second = second + num / self.branch_denominator(mr);
        }
        second
    }

    /// Moment summary assembled from the closed forms.
    pub fn moments(&self) -> MomentSummary<F> {
        MomentSummary::from_raw(self.mean_closed_form(), self.second_moment_closed_form())
    }

    /// Mirror image of the distribution: `(a, a+b-m, b, n)`.
    ///
    /// Satisfies `reflect(p).pmf(a+b-1-y) == p.pmf(y)` exactly.
    pub fn reflect(&self) -> Self {
        Self {
            a: self.a,
            m: self.a + self.b - self.m,
            b: self.b,
            n: self.n,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn dtsp(a: i64, m: i64, b: i64, n: f64) -> DtspParams<f64> {
        DtspParams::new(a, m, b, n).unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(DtspParams::new(0, 2, 4, 2.0).is_ok());
        assert_eq!(DtspParams::new(0, 5, 4, 2.0), Err(ParamError::ThresholdOutOfRange));
        assert_eq!(DtspParams::new(0, 0, 4, 0.0), Err(ParamError::NonPositiveShape));
        assert_eq!(DtspParams::new(3, 3, 3, 1.0), Err(ParamError::EmptySupport));
    }

    #[test]
    fn real_endpoint_construction() {
        assert!(DtspParams::from_real_endpoints(-10.0, 0.0, 10.0, 0.5).is_ok());
        assert_eq!(
            DtspParams::from_real_endpoints(0.5, 2.0, 4.0, 2.0),
            Err(ParamError::NonIntegerEndpoint)
        );
        assert_eq!(
            DtspParams::from_real_endpoints(0.0, f64::NAN, 4.0, 2.0),
            Err(ParamError::NonIntegerEndpoint)
        );
    }

    #[test]
    fn pmf_triangular_case() {
        let p = dtsp(0, 2, 4, 2.0);
        for (y, want) in [(0, 0.125), (1, 0.375), (2, 0.375), (3, 0.125)] {
            assert_abs_diff_eq!(p.pmf(y), want, epsilon = 1e-15);
        }
        assert_eq!(p.pmf(-1), 0.0);
        assert_eq!(p.pmf(4), 0.0);
    }

    #[test]
    fn pmf_uniform_case() {
        let p = dtsp(0, 2, 4, 1.0);
        for y in 0..4 {
            assert_eq!(p.pmf(y), 0.25);
        }
    }

    #[test]
    fn pmf_u_shaped_case() {
        let p = dtsp(0, 1, 3, 0.5);
        assert_abs_diff_eq!(p.pmf(2), 2f64.sqrt() / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(p.pmf(0), 1.0 / 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(p.pmf(1), (2.0 - 2f64.sqrt()) / 3.0, epsilon = 1e-15);
    }

    #[test]
    fn log_pmf_examples() {
        let p = dtsp(0, 2, 4, 2.0);
        assert_relative_eq!(p.log_pmf(1).unwrap(), (3f64 / 8.0).ln(), max_relative = 1e-13);
        assert_relative_eq!(
            dtsp(0, 2, 4, 1.0).log_pmf(0).unwrap(),
            0.25f64.ln(),
            max_relative = 1e-13
        );
        assert_eq!(p.log_pmf(7), Err(EvalError::OutOfSupport));
    }

    #[test]
    fn log_pmf_exponentiates_to_pmf() {
        for &(a, m, b, n) in &[(0i64, 2i64, 4i64, 2.0f64), (-10, 0, 10, 0.5), (0, 30, 40, 3.5)] {
            let p = dtsp(a, m, b, n);
            for y in p.support() {
                assert_relative_eq!(p.log_pmf(y).unwrap().exp(), p.pmf(y), max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn pmf_ratio_examples() {
        let p = dtsp(0, 2, 4, 2.0);
        assert_abs_diff_eq!(p.pmf_ratio(0).unwrap(), 3.0, epsilon = 1e-15);
        assert_abs_diff_eq!(p.pmf_ratio(2).unwrap(), 1.0 / 3.0, epsilon = 1e-15);
        assert_eq!(p.pmf_ratio(1), Err(EvalError::BranchCrossing));
        assert_eq!(p.pmf_ratio(3), Err(EvalError::OutOfSupport));
        let u = dtsp(0, 2, 4, 1.0);
        assert_eq!(u.pmf_ratio(0).unwrap(), 1.0);
        assert_eq!(u.pmf_ratio(2).unwrap(), 1.0);
    }

    #[test]
    fn pmf_table_matches_direct_pmf() {
        let p = dtsp(0, 2, 4, 2.0);
        let table = p.pmf_table();
        assert_eq!(table.len(), 4);
        for &(y, prob) in &table {
            assert_relative_eq!(prob, p.pmf(y), max_relative = 1e-13);
        }
    }

    #[test]
    fn pmf_table_degenerate_left_branch() {
        // m = a: right branch only.
        let p = dtsp(0, 0, 3, 2.0);
        let table = p.pmf_table();
        let want = [(0, 5.0 / 9.0), (1, 3.0 / 9.0), (2, 1.0 / 9.0)];
        for ((y, prob), (wy, wp)) in table.iter().zip(want) {
            assert_eq!(*y, wy);
            assert_abs_diff_eq!(*prob, wp, epsilon = 1e-15);
        }
    }

    #[test]
    fn pmf_table_single_point_branches() {
        let p = dtsp(0, 1, 2, 7.0);
        let table = p.pmf_table();
        assert_eq!(table, vec![(0, 0.5), (1, 0.5)]);
    }

    #[test]
    fn cdf_examples() {
        let p = dtsp(0, 2, 4, 2.0);
        assert_abs_diff_eq!(p.cdf(1), 0.5, epsilon = 1e-15);
        assert_eq!(p.cdf(3), 1.0);
        assert_abs_diff_eq!(p.cdf(2), 0.875, epsilon = 1e-15);
        assert_eq!(p.cdf(-1), 0.0);
        assert_eq!(p.cdf(10), 1.0);
    }

    #[test]
    fn survival_examples() {
        let p = dtsp(0, 2, 4, 2.0);
        assert_eq!(p.survival(2), 0.5);
        assert_eq!(p.survival(0), 1.0);
        assert_abs_diff_eq!(p.survival(3), 0.125, epsilon = 1e-15);
        assert_eq!(p.survival(4), 0.0);
    }

    #[test]
    fn survival_at_threshold_is_exact() {
        for &(a, m, b, n) in &[(0i64, 2i64, 4i64, 2.0f64), (-10, 0, 10, 3.5), (0, 7, 9, 0.1)] {
            let p = dtsp(a, m, b, n);
            assert_eq!(p.survival(m), (b - m) as f64 / (b - a) as f64);
        }
    }

    #[test]
    fn hazard_examples() {
        let p = dtsp(0, 2, 4, 2.0);
        assert_eq!(p.hazard(3).unwrap(), 1.0);
        assert_abs_diff_eq!(p.hazard(2).unwrap(), 0.75, epsilon = 1e-15);
        assert_abs_diff_eq!(p.hazard(1).unwrap(), 3.0 / 7.0, epsilon = 1e-15);
        assert_eq!(p.hazard(4), Err(EvalError::OutOfSupport));
    }

    #[test]
    fn mode_examples() {
        assert_eq!(dtsp(0, 2, 4, 2.0).mode_set(), vec![1, 2]);
        assert_eq!(dtsp(0, 2, 4, 1.0).mode_set(), vec![0, 1, 2, 3]);
        assert_eq!(dtsp(0, 1, 3, 0.5).mode_set(), vec![2]);
    }

    #[test]
    fn quantile_examples() {
        let p = dtsp(0, 2, 4, 2.0);
        assert_eq!(p.quantile(0.5).unwrap(), 1);
        assert_eq!(p.quantile(1.0).unwrap(), 3);
        assert_eq!(dtsp(-10, 0, 10, 3.5).quantile(0.5).unwrap(), -1);
        assert_eq!(p.quantile(0.0), Err(EvalError::InvalidProbability));
        assert_eq!(p.quantile(1.5), Err(EvalError::InvalidProbability));
    }

    #[test]
    fn threshold_quantile_identity() {
        for &(a, m, b, n) in &[(0i64, 2i64, 4i64, 2.0f64), (-10, 3, 10, 0.5), (0, 1, 7, 10.0)] {
            let p = dtsp(a, m, b, n);
            let q = (m - a) as f64 / (b - a) as f64;
            assert_eq!(p.quantile(q).unwrap(), m - 1);
        }
    }

    #[test]
    fn median_is_half_quantile() {
        let p = dtsp(-10, 0, 10, 3.5);
        assert_eq!(p.median(), p.quantile(0.5).unwrap());
    }

    #[test]
    fn moments_by_summation_examples() {
        let s = dtsp(0, 2, 4, 2.0).moments_by_summation();
        assert_abs_diff_eq!(s.mean, 1.5, epsilon = 1e-14);
        assert_abs_diff_eq!(s.second_moment, 3.0, epsilon = 1e-14);
        assert_abs_diff_eq!(s.variance, 0.75, epsilon = 1e-13);

        let u = dtsp(-10, 0, 10, 1.0).moments_by_summation();
        assert_abs_diff_eq!(u.mean, -0.5, epsilon = 1e-13);
        assert_abs_diff_eq!(u.variance, 33.25, epsilon = 1e-12);

        let two = dtsp(0, 1, 2, 7.0).moments_by_summation();
        assert_abs_diff_eq!(two.mean, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(two.variance, 0.25, epsilon = 1e-15);
    }

    #[test]
    fn mean_closed_form_examples() {
        assert_abs_diff_eq!(dtsp(0, 2, 4, 2.0).mean_closed_form(), 1.5, epsilon = 1e-14);
        assert_abs_diff_eq!(dtsp(0, 2, 4, 1.0).mean_closed_form(), 1.5, epsilon = 1e-14);
        assert_abs_diff_eq!(dtsp(-10, 0, 10, 3.5).mean_closed_form(), -0.5, epsilon = 1e-12);
    }

    #[test]
    fn second_moment_closed_form_examples() {
        // (4-1)/8 + (16+5)/8 with H_1^(-2) = 1, H_1^(-3) = 1.
        assert_abs_diff_eq!(dtsp(0, 2, 4, 2.0).second_moment_closed_form(), 3.0, epsilon = 1e-14);
        assert_abs_diff_eq!(dtsp(0, 2, 4, 1.0).second_moment_closed_form(), 3.5, epsilon = 1e-14);
        assert_abs_diff_eq!(dtsp(0, 1, 2, 7.0).second_moment_closed_form(), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn moments_summary_examples() {
        let s = dtsp(0, 2, 4, 2.0).moments();
        assert_abs_diff_eq!(s.variance, 0.75, epsilon = 1e-13);
        assert_abs_diff_eq!(s.index_of_dispersion.unwrap(), 0.5, epsilon = 1e-13);
        let u = dtsp(-10, 0, 10, 1.0).moments();
        assert_abs_diff_eq!(u.variance, 33.25, epsilon = 1e-12);
    }

    #[test]
    fn index_of_dispersion_undefined_at_zero_mean() {
        // Single point at 0: mean is exactly zero.
        let p = dtsp(0, 0, 1, 2.0);
        assert_eq!(p.moments().index_of_dispersion, None);
    }

    #[test]
    fn reflect_examples() {
        assert_eq!(dtsp(-10, 3, 10, 2.0).reflect(), dtsp(-10, -3, 10, 2.0));
        assert_eq!(dtsp(0, 2, 4, 5.0).reflect(), dtsp(0, 2, 4, 5.0));
        assert_eq!(dtsp(0, 1, 4, 0.5).reflect(), dtsp(0, 3, 4, 0.5));
    }

    #[test]
    fn reflect_pmf_identity_is_exact() {
        for &(a, m, b, n) in &[(-10i64, 3i64, 10i64, 2.0f64), (0, 1, 4, 0.5), (0, 30, 41, 7.3)] {
            let p = dtsp(a, m, b, n);
            let r = p.reflect();
            for y in p.support() {
                assert_eq!(r.pmf(a + b - 1 - y), p.pmf(y));
            }
        }
    }

    #[test]
    fn serde_field_names_are_a_m_b_n() {
        let p = dtsp(0, 2, 4, 2.0);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, r#"{"a":0,"m":2,"b":4,"n":2.0}"#);
        let back: DtspParams<f64> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn works_in_f32() {
        let p = DtspParams::<f32>::new(0, 2, 4, 2.0).unwrap();
        let total: f32 = p.support().map(|y| p.pmf(y)).sum();
        assert_abs_diff_eq!(total, 1.0, epsilon = 1e-6);
        assert_abs_diff_eq!(p.mean_closed_form(), 1.5, epsilon = 1e-6);
    }
}
