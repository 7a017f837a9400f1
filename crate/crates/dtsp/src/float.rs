//! Scalar abstraction for the distribution math.
//!
//! Everything in [`crate::tsp`], [`crate::dtsp`] and [`crate::harmonic`] is
//! written against [`Real`], so the same formulas run in `f32` or `f64`.
//! The stochastic layers (sampling, estimation, simulation) are fixed to
//! `f64`: the generator contract promises 53-bit uniform deviates and the
//! estimation tolerances are double-precision quantities.

use core::fmt::{Debug, Display};
use num_traits::{Float, FromPrimitive};

/// Floating-point scalar usable for the distribution formulas.
///
/// Implemented by `f32` and `f64` through the blanket impl.
pub trait Real: Float + FromPrimitive + Debug + Display + 'static {}

impl<T> Real for T where T: Float + FromPrimitive + Debug + Display + 'static {}

/// Converts an integer quantity (support point, width, count) to the scalar.
///
/// Lossless for every value this crate produces; `f32` narrows wide supports
/// the same way any `as f32` cast would.
#[inline]
pub(crate) fn int<F: Real>(v: i64) -> F {
    F::from_i64(v).expect("i64 converts to any Real")
}
