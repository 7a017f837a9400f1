//! Shared helpers for the integration tests: the parameter grid the
//! invariant suites sweep, and a tanh-sinh quadrature rule used as an
//! independent integration oracle (it converges even with the integrable
//! endpoint singularities the density has for n < 1).

use dtsp::DtspParams64;

pub const GRID_SHAPES: [f64; 6] = [0.1, 0.5, 1.0, 2.0, 3.5, 10.0];

/// Parameter grid: widths 1..=200, threshold sweeping both endpoints,
/// all grid shapes, with zero-based and negative-offset supports.
pub fn param_grid() -> Vec<DtspParams64> {
    let mut grid = Vec::new();
    for &width in &[1i64, 2, 3, 5, 10, 20, 50, 100, 200] {
        for a in [0, -width / 2] {
            let b = a + width;
            let mut offsets = vec![0, 1, width / 2, width - 1, width];
            offsets.retain(|&o| (0..=width).contains(&o));
            offsets.sort_unstable();
            offsets.dedup();
            for off in offsets {
                for &n in &GRID_SHAPES {
                    grid.push(DtspParams64::new(a, a + off, b, n).unwrap());
                }
            }
        }
    }
    grid
}

/// The zero-based half of [`param_grid`]; means here are bounded away from
/// zero, which keeps relative comparisons meaningful.
pub fn param_grid_nonnegative() -> Vec<DtspParams64> {
    param_grid().into_iter().filter(|p| p.a() == 0).collect()
}

/// Integrates `f` over `(0, 1)` by tanh-sinh quadrature.
///
/// `f` may blow up at either endpoint as long as the singularity is
/// integrable; nodes are fed to `f` in a cancellation-free form, so
/// `f(r)` sees `r` accurate to full precision even at `r ~ 1e-300`.
pub fn integrate01(f: impl Fn(f64) -> f64) -> f64 {
    let h = 1.0 / 32.0;
    let mut acc = 0.5 * node_weight(0.0) * f(0.5);
    // Symmetric node pairs, walking outward until the tail is negligible.
    let mut small_streak = 0;
    for k in 1..=2000 {
        let u = k as f64 * h;
        let (r_lo, r_hi, w) = node_pair(u);
        if w < 1e-290 {
            break;
        }
        let term = w * (f(r_lo) + f(r_hi));
        if !term.is_finite() {
            break;
        }
        acc += term;
        if term.abs() < 1e-22 * (1.0 + acc.abs()) {
            small_streak += 1;
            if small_streak >= 3 {
                break;
            }
        } else {
            small_streak = 0;
        }
    }
    acc * h
}

/// Node pair at ±u: positions near 0 and 1, plus the shared weight
/// (dr/dt jacobian already folded in; the 1/2 from r = (1+t)/2).
fn node_pair(u: f64) -> (f64, f64, f64) {
    let s = std::f64::consts::FRAC_PI_2 * u.sinh();
    // r = (1 + tanh(s)) / 2 = 1 / (1 + exp(-2s)), evaluated stably.
    let e = (-2.0 * s).exp();
    let r_hi = 1.0 / (1.0 + e);
    let r_lo = e / (1.0 + e);
    let w = 0.5 * node_weight(u);
    (r_lo, r_hi, w)
}

/// (pi/2) cosh(u) sech^2((pi/2) sinh(u)), the tanh-sinh jacobian.
fn node_weight(u: f64) -> f64 {
    let s = std::f64::consts::FRAC_PI_2 * u.sinh();
    let e = (-2.0 * s).exp();
    let sech = 2.0 * (-s).exp() / (1.0 + e);
    std::f64::consts::FRAC_PI_2 * u.cosh() * sech * sech
}
