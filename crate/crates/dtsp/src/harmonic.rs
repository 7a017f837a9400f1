//! Generalized harmonic numbers and the power-difference kernel.
//!
//! The pmf numerators are all of the form `(c+1)^n - c^n`. For large `c` the
//! two powers agree in their leading digits and the naive subtraction loses
//! precision, so [`power_diff`] switches to `c^n * expm1(n * ln1p(1/c))`,
//! which is exact in the same limit. The threshold `c <= 8` keeps the naive
//! path for small bases where the subtraction is harmless.

use crate::float::{int, Real};

/// Largest base evaluated by naive subtraction in [`power_diff`].
const NAIVE_BASE_LIMIT: u64 = 8;

/// Generalized harmonic number `H_count^(order) = sum_{k=1}^{count} k^(-order)`.
///
/// The empty sum (`count == 0`) is 0. The moment formulas call this with
/// `order = -n` and `order = -n-1`, turning it into the power sums
/// `sum k^n` and `sum k^(n+1)`.
pub fn generalized_harmonic<F: Real>(count: u64, order: F) -> F {
    let mut acc = F::zero();
    for k in 1..=count {
        acc = acc + int::<F>(k as i64).powf(-order);
    }
    acc
}

/// `(c+1)^n - c^n` for integer `c >= 0`, cancellation-safe for large `c`.
///
/// Uses the convention `0^n = 0` for `n > 0`, so `power_diff(0, n) == 1`
/// exactly.
pub fn power_diff<F: Real>(c: u64, n: F) -> F {
    if c == 0 {
        return F::one();
    }
    let cf = int::<F>(c as i64);
    if c <= NAIVE_BASE_LIMIT {
        (cf + F::one()).powf(n) - cf.powf(n)
    } else {
        cf.powf(n) * (n * cf.recip().ln_1p()).exp_m1()
    }
}

/// `ln((c+1)^n - c^n)` without forming the (possibly huge) powers.
pub fn ln_power_diff<F: Real>(c: u64, n: F) -> F {
    if c == 0 {
        return F::zero();
    }
    let cf = int::<F>(c as i64);
    n * cf.ln() + (n * cf.recip().ln_1p()).exp_m1().ln()
}
