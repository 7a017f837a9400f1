//! Fixed significant-digit formatting for CSV and markdown output.
//!
//! JSON output uses serde's shortest round-trip representation instead.

/// Formats with 12 significant digits.
pub fn sig12(x: f64) -> String {
    significant(x, 12)
}

/// Formats `x` with `digits` significant digits, switching to scientific
/// notation outside a readable magnitude window.
pub fn significant(x: f64, digits: u32) -> String {
    let digits = digits.max(1) as i32;
    if x == 0.0 {
        return format!("{:.*}", (digits - 1) as usize, 0.0);
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exponent = x.abs().log10().floor() as i32;
    if exponent >= digits || exponent < -4 {
        format!("{:.*e}", (digits - 1) as usize, x)
    } else {
        let decimals = (digits - 1 - exponent).max(0) as usize;
        format!("{:.*}", decimals, x)
    }
}
